#include "tvw/tverberg.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace tvw;

namespace {

PointConfiguration config2(std::initializer_list<std::pair<long, long>> pts) {
    PointConfiguration c;
    c.d = 2;
    for (const auto& [x, y] : pts) c.points.push_back({Rat(x), Rat(y)});
    return c;
}

PointConfiguration square_corners() {
    return config2({{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}

} // namespace

TEST_CASE("canonical_partition sorts parts and orders them by minimum") {
    FacePartition p = {{5, 3}, {2}, {4, 0}};
    CHECK(canonical_partition(p) == FacePartition{{0, 4}, {2}, {3, 5}});
}

TEST_CASE("hulls_intersect certifies crossing segments") {
    PointConfiguration c = config2({{0, 0}, {2, 0}, {1, -1}, {1, 1}});
    auto r = hulls_intersect(c, {{0, 1}, {2, 3}});
    REQUIRE(r.has_value());
    CHECK(r->witness == PointD{Rat(1), Rat(0)});
    r->verify(c);
}

TEST_CASE("hulls_intersect rejects separated singletons") {
    PointConfiguration c = config2({{0, 0}, {5, 5}});
    CHECK_FALSE(hulls_intersect(c, {{0}, {1}}).has_value());
}

TEST_CASE("square diagonals meet in the center") {
    auto r = hulls_intersect(square_corners(), {{0, 2}, {1, 3}});
    REQUIRE(r.has_value());
    CHECK(r->witness == PointD{Rat(1), Rat(1)});
}

TEST_CASE("hulls_intersect validates parts") {
    PointConfiguration c = square_corners();
    CHECK_THROWS_AS(hulls_intersect(c, {{0}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(hulls_intersect(c, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(hulls_intersect(c, {{0}, {9}}), std::invalid_argument);
}

TEST_CASE("certificates verify exactly and detect tampering") {
    auto r = hulls_intersect(square_corners(), {{0, 2}, {1, 3}});
    REQUIRE(r.has_value());
    r->verify(square_corners());
    TverbergCertificate bad = *r;
    bad.witness[0] += 1;
    CHECK_THROWS_AS(bad.verify(square_corners()), std::logic_error);
}

TEST_CASE("hulls_intersect is invariant under part order and affine maps") {
    PointConfiguration c = config2({{0, 0}, {3, 1}, {1, 3}, {2, 2}, {4, 0}, {0, 4}});
    accept::Rng rng(63u);
    for (int t = 0; t < 30; ++t) {
        FacePartition parts = {{0, 1, static_cast<int>(rng.range(2, 3))},
                               {4, 5, static_cast<int>(rng.range(2, 3))}};
        if (parts[0][2] == parts[1][2]) parts[1][2] = parts[0][2] == 2 ? 3 : 2;
        bool base = hulls_intersect(c, parts).has_value();
        FacePartition swapped = {parts[1], parts[0]};
        CHECK(hulls_intersect(c, swapped).has_value() == base);

        // common invertible affine map x -> Ax + b
        PointConfiguration mapped = c;
        for (PointD& p : mapped.points) {
            Rat x = p[0], y = p[1];
            p[0] = 2 * x + y + 5;
            p[1] = x + y - 3;
        }
        CHECK(hulls_intersect(mapped, parts).has_value() == base);
    }
}

TEST_CASE("affine general position accepts generic and rejects degenerate configs") {
    CHECK(check_affine_general_position(config2({{0, 0}, {1, 0}, {0, 1}})));
    CHECK_FALSE(check_affine_general_position(config2({{0, 0}, {1, 1}, {2, 2}})));
    CHECK(check_affine_general_position(sierksma_config(2, 3)));
}

TEST_CASE("three concurrent point-pair lines break the family condition") {
    // no three of the six points are collinear, yet the three affine hulls of
    // the pairs meet in one point: codim 2 < 1+1+1
    PointConfiguration c = config2({{1, 0}, {-1, 0}, {2, 2}, {-2, -2}, {3, 6}, {-3, -6}});
    CHECK_FALSE(check_affine_general_position(c));
    auto naive_collinear = [&](int i, int j, int k) {
        Rat ax = c.points[i][0], ay = c.points[i][1];
        Rat bx = c.points[j][0], by = c.points[j][1];
        Rat cx = c.points[k][0], cy = c.points[k][1];
        return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) == 0;
    };
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) CHECK_FALSE(naive_collinear(i, j, k));
}

TEST_CASE("middle point of three on a line is the unique d=1 partition") {
    PointConfiguration c;
    c.d = 1;
    c.points = {{Rat(0)}, {Rat(1)}, {Rat(2)}};
    auto r = enumerate_tverberg_partitions(c, 2, TverbergMode::general_position);
    REQUIRE(r.count == 1);
    CHECK(r.certificates[0].partition == FacePartition{{0, 2}, {1}});
}

TEST_CASE("square corners admit exactly the diagonal partition") {
    auto r = enumerate_tverberg_partitions(square_corners(), 2, TverbergMode::general_position);
    REQUIRE(r.count == 1);
    CHECK(r.certificates[0].partition == FacePartition{{0, 2}, {1, 3}});
}

TEST_CASE("sierksma configurations attain the conjectured counts") {
    CHECK(enumerate_tverberg_partitions(sierksma_config(1, 3), 3,
                                        TverbergMode::general_position)
              .count == 2);
    auto r =
        enumerate_tverberg_partitions(sierksma_config(2, 3), 3, TverbergMode::general_position);
    CHECK(r.count == 4);
    for (const TverbergCertificate& c : r.certificates) c.verify(sierksma_config(2, 3));
}

TEST_CASE("count-only mode agrees with full enumeration") {
    TverbergEnumOptions counting;
    counting.count_only = true;
    PointConfiguration c = sierksma_config(2, 3);
    auto full = enumerate_tverberg_partitions(c, 3, TverbergMode::general_position);
    auto fast = enumerate_tverberg_partitions(c, 3, TverbergMode::general_position, counting);
    CHECK(full.count == fast.count);
    CHECK(fast.certificates.empty());
    CHECK(full.certificates.size() == static_cast<std::size_t>(full.count));
}

TEST_CASE("enumeration validates inputs") {
    PointConfiguration c = square_corners();
    CHECK_THROWS_AS(enumerate_tverberg_partitions(c, 3, TverbergMode::general_position),
                    std::invalid_argument); // wrong point count
    PointConfiguration collinear;
    collinear.d = 1;
    collinear.points = {{Rat(0)}, {Rat(0)}, {Rat(1)}};
    CHECK_THROWS_AS(
        enumerate_tverberg_partitions(collinear, 2, TverbergMode::general_position),
        NotInGeneralPositionConfig);
}

TEST_CASE("full mode enforces the candidate cap") {
    TverbergEnumOptions tiny;
    tiny.candidate_cap = 3;
    CHECK_THROWS_AS(
        enumerate_tverberg_partitions(sierksma_config(2, 3), 3, TverbergMode::full, tiny),
        CandidateCapExceeded);
}

TEST_CASE("enumeration agrees with the naive partition-plus-FM oracle") {
    accept::Rng rng(0x5EEDull);
    for (int t = 0; t < 12; ++t) {
        int d = 1 + static_cast<int>(rng.range(0, 1));
        int q = 2 + static_cast<int>(rng.range(0, 1));
        int n = (d + 1) * (q - 1) + 1;
        PointConfiguration c = accept::random_gp_config(d, n, 0xBEEFull + t);

        std::set<FacePartition> got;
        for (const TverbergCertificate& cert :
             enumerate_tverberg_partitions(c, q, TverbergMode::general_position).certificates)
            got.insert(cert.partition);

        std::set<FacePartition> want;
        accept::all_partitions(n, q, false, [&](const FacePartition& parts) {
            bool sizes_ok = true;
            for (const auto& part : parts)
                if (static_cast<int>(part.size()) > d + 1) sizes_ok = false;
            if (sizes_ok && accept::fm_hulls_intersect(c, parts))
                want.insert(canonical_partition(parts));
        });
        CHECK(got == want);
    }
}

TEST_CASE("full mode also matches the oracle including uncovered labels") {
    // n is pinned to (d+1)(q-1)+1 in every mode; full mode differs from
    // general-position mode by dropping the per-part size cap and by allowing
    // labels to be left out of the partition.
    for (unsigned seed : {77u, 78u, 79u}) {
        PointConfiguration c = accept::random_gp_config(2, 4, seed);
        std::set<FacePartition> got;
        for (const TverbergCertificate& cert :
             enumerate_tverberg_partitions(c, 2, TverbergMode::full).certificates)
            got.insert(cert.partition);
        std::set<FacePartition> want;
        accept::all_partitions(4, 2, true, [&](const FacePartition& parts) {
            if (accept::fm_hulls_intersect(c, parts)) want.insert(canonical_partition(parts));
        });
        CHECK(got == want);
        CHECK(got.size() >= 1); // the Radon partition always exists
    }
}

TEST_CASE("random general-position configurations always admit a partition") {
    for (int i = 0; i < 5; ++i) {
        PointConfiguration c = accept::random_gp_config(2, 7, 1000u + i);
        CHECK(enumerate_tverberg_partitions(c, 3, TverbergMode::general_position).count >= 1);
    }
}

TEST_CASE("serial and parallel tverberg enumeration agree") {
    PointConfiguration c = sierksma_config(2, 3);
    TverbergEnumOptions serial, parallel;
    serial.threads = 1;
    parallel.threads = 4;
    auto a = enumerate_tverberg_partitions(c, 3, TverbergMode::general_position, serial);
    auto b = enumerate_tverberg_partitions(c, 3, TverbergMode::general_position, parallel);
    REQUIRE(a.count == b.count);
    for (std::size_t i = 0; i < a.certificates.size(); ++i) {
        CHECK(a.certificates[i].partition == b.certificates[i].partition);
        CHECK(a.certificates[i].witness == b.certificates[i].witness);
    }
}
