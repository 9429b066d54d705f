#include "tvw/models.hpp"
#include "tvw/tverberg.hpp"
#include "tvw/winding_number.hpp"
#include "tvw/winding_partitions.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

using namespace tvw;

namespace {

Face vface(int v) { return Face{Face::Kind::vertex, {v}}; }
Face tri(int a, int b, int c) { return canonical_face(Face{Face::Kind::cycle, {a, b, c}}); }

Drawing square_k4() {
    PointConfiguration c;
    c.d = 2;
    c.points = {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(2), Rat(2)}, {Rat(0), Rat(2)}};
    return accept::straight_line_drawing(c);
}

// vertex sets of the faces, as a canonical set-of-sets
std::set<std::set<int>> face_sets(const WindingCertificate& c) {
    std::set<std::set<int>> out;
    for (const Face& f : c.faces) out.insert({f.vertices.begin(), f.vertices.end()});
    return out;
}

Drawing relabel(const Drawing& d, const std::vector<int>& sigma) { // sigma[v-1] = new label
    Drawing out;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : d.graph.edges)
        edges.push_back(normalized_edge(sigma[u - 1], sigma[v - 1]));
    out.graph = make_graph(d.graph.n, edges);
    out.placement.resize(d.placement.size());
    for (int v = 1; v <= d.graph.n; ++v) out.placement[sigma[v - 1] - 1] = d.point_of(v);
    for (const auto& [e, route] : d.routes) {
        auto ne = normalized_edge(sigma[e.first - 1], sigma[e.second - 1]);
        out.routes[ne] = sigma[e.first - 1] < sigma[e.second - 1]
                             ? route
                             : reversed(route);
    }
    return out;
}

} // namespace

TEST_CASE("canonical_face fixes orientation and rotation") {
    CHECK(canonical_face(Face{Face::Kind::edge, {5, 2}}).vertices == std::vector<int>{2, 5});
    CHECK(canonical_face(Face{Face::Kind::cycle, {3, 1, 2}}).vertices ==
          std::vector<int>{1, 2, 3});
    CHECK(canonical_face(Face{Face::Kind::cycle, {2, 1, 3}}).vertices ==
          std::vector<int>{1, 2, 3});
    CHECK(canonical_face(Face{Face::Kind::cycle, {4, 3, 2, 1}}).vertices ==
          std::vector<int>{1, 2, 3, 4});
    CHECK(canonical_face(Face{Face::Kind::cycle, {2, 4, 1, 3}}).vertices ==
          std::vector<int>{1, 3, 2, 4});
    CHECK(canonical_face(Face{Face::Kind::path, {3, 2, 1}}).vertices ==
          std::vector<int>{1, 2, 3});
}

TEST_CASE("convex K4 has one winding partition at the diagonal crossing") {
    Drawing d = square_k4();
    auto r = enumerate_winding_partitions(d, 2, WindingMode::simplex);
    REQUIRE(r.count == 1);
    const WindingCertificate& c = r.certificates[0];
    CHECK(c.point.kind == CandidatePoint::Kind::crossing);
    CHECK(c.point.e1 == std::pair<int, int>{1, 3});
    CHECK(c.point.e2 == std::pair<int, int>{2, 4});
    REQUIRE(c.faces.size() == 2);
    CHECK(c.faces[0].kind == Face::Kind::edge);
    CHECK(c.faces[1].kind == Face::Kind::edge);
    CHECK(face_sets(c) == std::set<std::set<int>>{{1, 3}, {2, 4}});
    // matches the unique Tverberg partition of the corner configuration
    PointConfiguration corners;
    corners.d = 2;
    corners.points = {{Rat(0), Rat(0)}, {Rat(2), Rat(0)}, {Rat(2), Rat(2)}, {Rat(0), Rat(2)}};
    auto tv = enumerate_tverberg_partitions(corners, 2, TverbergMode::general_position);
    REQUIRE(tv.count == 1);
    CHECK(tv.certificates[0].partition == FacePartition{{0, 2}, {1, 3}});
}

TEST_CASE("alternating K7 has exactly four 3-winding partitions") {
    Drawing d = alternating_linear_model(7);
    auto r = enumerate_winding_partitions(d, 3, WindingMode::simplex);
    REQUIRE(r.count == 4);

    // the named partition: point at vertex 5 = 2q-1, triangles 1-2-7 and 3-4-6
    bool named = false;
    for (const WindingCertificate& c : r.certificates)
        if (c.point.kind == CandidatePoint::Kind::vertex && c.point.vertex == 5 &&
            face_sets(c) == std::set<std::set<int>>{{5}, {1, 2, 7}, {3, 4, 6}})
            named = true;
    CHECK(named);

    // shape soundness: 1 vertex + 2 triangles or 2 edges + 1 triangle, all
    // seven vertices covered
    for (const WindingCertificate& c : r.certificates) {
        std::multiset<Face::Kind> kinds;
        std::set<int> covered;
        for (const Face& f : c.faces) {
            kinds.insert(f.kind);
            covered.insert(f.vertices.begin(), f.vertices.end());
        }
        bool shape_a = kinds == std::multiset<Face::Kind>{Face::Kind::vertex, Face::Kind::cycle,
                                                          Face::Kind::cycle};
        bool shape_b = kinds == std::multiset<Face::Kind>{Face::Kind::edge, Face::Kind::edge,
                                                          Face::Kind::cycle};
        CHECK((shape_a || shape_b));
        CHECK(covered.size() == 7);
    }

    // every certificate re-verifies
    for (const WindingCertificate& c : r.certificates) {
        auto again = is_winding_partition(d, c.faces, c.point);
        REQUIRE(again.has_value());
        CHECK(again->faces == c.faces);
    }
}

TEST_CASE("the K7 triangle evidence is a nonzero winding number") {
    Drawing d = alternating_linear_model(7);
    Polyline image = cycle_image(d, {1, 2, 7});
    CHECK(winding_number(image, d.point_of(5)) != 0);
}

TEST_CASE("graph mode reproduces the simplex-mode partitions on K7") {
    Drawing d = alternating_linear_model(7);
    CHECK(count_winding_partitions(d, 3, WindingMode::graph) == 4);
}

TEST_CASE("counting fast path matches enumeration") {
    Drawing d = alternating_linear_model(7);
    for (WindingMode m : {WindingMode::simplex, WindingMode::graph}) {
        auto full = enumerate_winding_partitions(d, 3, m);
        CHECK(count_winding_partitions(d, 3, m) == full.count);
    }
}

TEST_CASE("alternating K10 counts ((q-1)!)^2 at q=4") {
    Drawing d = alternating_linear_model(10);
    CHECK(count_winding_partitions(d, 4, WindingMode::simplex) == 36);
}

TEST_CASE("simplex mode rejects graphs that are not the right complete graph") {
    CHECK_THROWS_AS(
        enumerate_winding_partitions(alternating_linear_model(7), 2, WindingMode::simplex),
        WrongGraphError);
    CHECK_THROWS_AS(
        enumerate_winding_partitions(star_deletion_drawing(3).first, 3, WindingMode::simplex),
        WrongGraphError);
    CHECK_THROWS_AS(enumerate_winding_partitions(alternating_linear_model(7), 0,
                                                 WindingMode::simplex),
                    std::invalid_argument);
}

TEST_CASE("enumeration respects the partial-state cap") {
    WindingEnumOptions tiny;
    tiny.state_cap = 10;
    CHECK_THROWS_AS(enumerate_winding_partitions(alternating_linear_model(10), 4,
                                                 WindingMode::graph, tiny),
                    EnumerationCapExceeded);
}

TEST_CASE("is_winding_partition accepts the named partition and rejects a bad point") {
    Drawing d = alternating_linear_model(7);
    std::vector<Face> faces = {vface(5), tri(1, 2, 7), tri(3, 4, 6)};

    CandidatePoint at5;
    at5.kind = CandidatePoint::Kind::vertex;
    at5.vertex = 5;
    at5.where = d.point_of(5);
    auto good = is_winding_partition(d, faces, at5);
    REQUIRE(good.has_value());
    CHECK(good->evidence.size() == 3);

    CandidatePoint at1 = at5;
    at1.vertex = 1;
    at1.where = d.point_of(1);
    CHECK_FALSE(is_winding_partition(d, faces, at1).has_value());
}

TEST_CASE("is_winding_partition rejects overlapping faces and malformed input") {
    Drawing d = alternating_linear_model(7);
    CandidatePoint at5;
    at5.kind = CandidatePoint::Kind::vertex;
    at5.vertex = 5;
    at5.where = d.point_of(5);
    CHECK_THROWS_AS(is_winding_partition(d, {vface(5), tri(1, 2, 7), tri(1, 4, 6)}, at5),
                    OverlappingFacesError);
    CandidatePoint bogus = at5;
    bogus.where = Point2{Rat(99), Rat(99)};
    CHECK_THROWS_AS(is_winding_partition(d, {vface(5), tri(1, 2, 7), tri(3, 4, 6)}, bogus),
                    std::invalid_argument);
    Face bad_edge{Face::Kind::edge, {1, 2, 3}};
    CHECK_THROWS_AS(is_winding_partition(d, {bad_edge}, at5), std::invalid_argument);
}

TEST_CASE("q=1 partitions are single faces containing their own point") {
    Drawing d = alternating_linear_model(4);
    // simplex mode requires K1 at q=1; graph mode counts every simple path
    CHECK_THROWS_AS(enumerate_winding_partitions(d, 1, WindingMode::simplex), WrongGraphError);
    auto r = enumerate_winding_partitions(d, 1, WindingMode::graph);
    CHECK(r.count >= d.graph.n); // at least the single-vertex paths
    for (const WindingCertificate& c : r.certificates) {
        REQUIRE(c.faces.size() == 1);
        CHECK(c.evidence[0].kind == WindingEvidence::Kind::containment);
    }

    CandidatePoint at2;
    at2.kind = CandidatePoint::Kind::vertex;
    at2.vertex = 2;
    at2.where = d.point_of(2);
    auto single = is_winding_partition(d, {Face{Face::Kind::path, {2}}}, at2);
    CHECK(single.has_value());
}

TEST_CASE("zero-length paths are admitted as graph-mode faces") {
    Drawing iso;
    iso.graph = make_graph(2, {});
    iso.placement = {Point2{Rat(0), Rat(0)}, Point2{Rat(3), Rat(1)}};
    auto r = enumerate_winding_partitions(iso, 1, WindingMode::graph);
    CHECK(r.count == 2);
}

TEST_CASE("enumeration commutes with vertex relabeling") {
    Drawing d = alternating_linear_model(7);
    std::vector<int> sigma = {3, 6, 1, 7, 5, 2, 4}; // arbitrary permutation
    Drawing rd = relabel(d, sigma);
    auto base = enumerate_winding_partitions(d, 3, WindingMode::simplex);
    auto perm = enumerate_winding_partitions(rd, 3, WindingMode::simplex);
    REQUIRE(base.count == perm.count);

    std::set<std::set<std::set<int>>> base_parts, perm_parts;
    for (const WindingCertificate& c : base.certificates) {
        std::set<std::set<int>> parts;
        for (const Face& f : c.faces) {
            std::set<int> s;
            for (int v : f.vertices) s.insert(sigma[v - 1]);
            parts.insert(std::move(s));
        }
        base_parts.insert(std::move(parts));
    }
    for (const WindingCertificate& c : perm.certificates) perm_parts.insert(face_sets(c));
    CHECK(base_parts == perm_parts);
}

TEST_CASE("serial and oversubscribed parallel enumeration agree exactly") {
    WindingEnumOptions serial, wide;
    serial.threads = 1;
    wide.threads = 8;
    for (int q : {3, 4}) {
        Drawing d = alternating_linear_model(3 * q - 2);
        auto a = enumerate_winding_partitions(d, q, WindingMode::simplex, serial);
        auto b = enumerate_winding_partitions(d, q, WindingMode::simplex, wide);
        REQUIRE(a.count == b.count);
        REQUIRE(a.certificates.size() == b.certificates.size());
        for (std::size_t i = 0; i < a.certificates.size(); ++i) {
            CHECK(a.certificates[i].faces == b.certificates[i].faces);
            CHECK(a.certificates[i].point == b.certificates[i].point);
        }
        CHECK(a.states == b.states);
        CHECK(a.pruned_zero_winding == b.pruned_zero_winding);
    }
}

TEST_CASE("matching-avoiding filter on the K7 model") {
    Drawing d = alternating_linear_model(7);
    std::vector<std::pair<int, int>> m = {{1, 2}, {3, 4}, {5, 6}};
    auto all = matching_avoiding_partitions(d, 3, {}, WindingMode::simplex);
    CHECK(all.count == 4);
    auto filtered = matching_avoiding_partitions(d, 3, m, WindingMode::simplex);
    CHECK(filtered.count == 2);
    for (const WindingCertificate& c : filtered.certificates)
        for (const Face& f : c.faces) {
            std::set<int> s(f.vertices.begin(), f.vertices.end());
            for (const auto& e : m) CHECK_FALSE((s.count(e.first) && s.count(e.second)));
        }

    auto [sd, star] = star_deletion_drawing(3);
    CHECK(matching_avoiding_partitions(sd, 3, {{2, 4}}, WindingMode::graph).count == 0);
}

TEST_CASE("matching validation") {
    Drawing d = alternating_linear_model(7);
    CHECK_THROWS_AS(matching_avoiding_partitions(d, 3, {{1, 2}, {2, 3}}, WindingMode::simplex),
                    std::invalid_argument); // shares vertex 2
    CHECK_THROWS_AS(matching_avoiding_partitions(d, 3, {{1, 99}}, WindingMode::simplex),
                    std::invalid_argument);
}

TEST_CASE("d=1 partitions for distinct values") {
    std::vector<Rat> v = {Rat(1), Rat(2), Rat(3), Rat(4), Rat(5)};
    auto r = enumerate_winding_partitions_d1(v, 3);
    REQUIRE(r.size() == 2);
    std::set<std::set<std::set<int>>> got;
    for (const WindingPartitionD1& wp : r) {
        CHECK(wp.point == Rat(3)); // the median
        std::set<std::set<int>> parts;
        for (const auto& f : wp.faces) parts.insert({f.begin(), f.end()});
        got.insert(parts);
    }
    std::set<std::set<std::set<int>>> want = {{{3}, {1, 4}, {2, 5}}, {{3}, {1, 5}, {2, 4}}};
    CHECK(got == want);

    CHECK(enumerate_winding_partitions_d1({Rat(0), Rat(5), Rat(9)}, 2).size() == 1);
}

TEST_CASE("d=1 enumeration is sound for duplicate values") {
    // Labels 3 and 4 share the value 3, so singleton faces {3} and {4} are
    // both admissible at p=3 and a partition may leave labels unused: faces
    // must be pairwise disjoint, not covering.
    std::vector<Rat> v = {Rat(1), Rat(2), Rat(3), Rat(3), Rat(5)};
    const int n = static_cast<int>(v.size());
    auto got = enumerate_winding_partitions_d1(v, 3);

    // brute-force oracle: for every value p, choose 3 pairwise disjoint faces,
    // each a singleton with value p or a pair straddling p
    std::set<std::set<std::set<int>>> want;
    for (const Rat& p : std::set<Rat>(v.begin(), v.end())) {
        std::vector<std::set<int>> faces;
        for (int a = 1; a <= n; ++a) {
            if (v[a - 1] == p) faces.push_back({a});
            for (int b = a + 1; b <= n; ++b) {
                const bool straddles = (v[a - 1] <= p && p <= v[b - 1]) ||
                                       (v[b - 1] <= p && p <= v[a - 1]);
                if (straddles) faces.push_back({a, b});
            }
        }
        std::set<std::set<int>> chosen;
        std::set<int> used;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (chosen.size() == 3) {
                want.insert(chosen);
                return;
            }
            if (i == faces.size()) return;
            rec(i + 1);
            for (int l : faces[i])
                if (used.count(l)) return;
            used.insert(faces[i].begin(), faces[i].end());
            chosen.insert(faces[i]);
            rec(i + 1);
            chosen.erase(faces[i]);
            for (int l : faces[i]) used.erase(l);
        };
        rec(0);
    }

    std::set<std::set<std::set<int>>> got_sets;
    for (const WindingPartitionD1& wp : got) {
        std::set<std::set<int>> parts;
        for (const auto& f : wp.faces) parts.insert({f.begin(), f.end()});
        got_sets.insert(parts);
        CHECK(wp.point == Rat(3)); // only p=3 admits three disjoint faces here
    }
    CHECK(got_sets.size() == got.size()); // no duplicate partitions emitted
    CHECK(got_sets == want);
    CHECK(want.size() == 6);
}

TEST_CASE("d=1 counts are (q-1) factorial for distinct values") {
    accept::Rng rng(5u);
    for (int q = 2; q <= 6; ++q) {
        std::set<Rat> pool;
        while (static_cast<int>(pool.size()) < 2 * q - 1)
            pool.insert(Rat(Int(rng.range(-99, 99)), Int(rng.range(1, 9))));
        std::vector<Rat> values(pool.begin(), pool.end());
        CHECK(enumerate_winding_partitions_d1(values, q).size() ==
              static_cast<std::size_t>(factorial(q - 1).convert_to<long long>()));
    }
}
