#include "tvw/tverberg.hpp"

#include <algorithm>
#include <functional>

#include "tvw/parallel.hpp"

namespace tvw {

void TverbergCertificate::verify(const PointConfiguration& c) const {
    if (partition.size() != coefficients.size())
        throw std::logic_error("certificate: coefficient rows differ from parts");
    for (std::size_t i = 0; i < partition.size(); ++i) {
        const auto& part = partition[i];
        const auto& coef = coefficients[i];
        if (part.size() != coef.size())
            throw std::logic_error("certificate: coefficient count differs from part size");
        Rat total = 0;
        PointD combo(c.d, Rat(0));
        for (std::size_t j = 0; j < part.size(); ++j) {
            if (coef[j] < 0) throw std::logic_error("certificate: negative coefficient");
            total += coef[j];
            for (int k = 0; k < c.d; ++k) combo[k] += coef[j] * c.points[part[j]][k];
        }
        if (total != 1) throw std::logic_error("certificate: coefficients do not sum to 1");
        if (combo != witness) throw std::logic_error("certificate: witness mismatch");
    }
}

std::optional<TverbergCertificate> hulls_intersect(const PointConfiguration& c,
                                                   const FacePartition& parts_in,
                                                   LpStats* stats) {
    validate_config(c);
    const FacePartition parts = canonical_partition(parts_in);
    const int n = static_cast<int>(c.points.size());
    std::vector<bool> used(n, false);
    for (const auto& part : parts) {
        if (part.empty()) throw std::invalid_argument("hulls_intersect: empty part");
        for (int l : part) {
            if (l < 0 || l >= n) throw std::invalid_argument("hulls_intersect: label out of range");
            if (used[l]) throw std::invalid_argument("hulls_intersect: parts not disjoint");
            used[l] = true;
        }
    }
    if (parts.empty()) throw std::invalid_argument("hulls_intersect: no parts");

    const int q = static_cast<int>(parts.size());
    const int d = c.d;
    std::vector<std::size_t> offset(q);
    std::size_t nv = 0;
    for (int i = 0; i < q; ++i) {
        offset[i] = nv;
        nv += parts[i].size();
    }

    const std::size_t rows = static_cast<std::size_t>(q) + static_cast<std::size_t>(d) * (q - 1);
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(nv, Rat(0)));
    std::vector<Rat> b(rows, Rat(0));
    for (int i = 0; i < q; ++i) {
        for (std::size_t j = 0; j < parts[i].size(); ++j) A[i][offset[i] + j] = 1;
        b[i] = 1;
    }
    std::size_t r = q;
    for (int i = 1; i < q; ++i) {
        for (int k = 0; k < d; ++k, ++r) {
            for (std::size_t j = 0; j < parts[i].size(); ++j)
                A[r][offset[i] + j] = c.points[parts[i][j]][k];
            for (std::size_t j = 0; j < parts[0].size(); ++j)
                A[r][offset[0] + j] = -c.points[parts[0][j]][k];
        }
    }

    const auto x = lp_feasible_point(A, b, stats);
    if (!x) return std::nullopt;

    TverbergCertificate cert;
    cert.partition = parts;
    cert.coefficients.resize(q);
    for (int i = 0; i < q; ++i)
        cert.coefficients[i].assign(x->begin() + offset[i],
                                    x->begin() + offset[i] + parts[i].size());
    cert.witness.assign(d, Rat(0));
    for (std::size_t j = 0; j < parts[0].size(); ++j)
        for (int k = 0; k < d; ++k)
            cert.witness[k] += (*x)[offset[0] + j] * c.points[parts[0][j]][k];
    cert.verify(c);
    return cert;
}

namespace {

// Streams candidate partitions in lexicographic assignment order: each label
// joins an open part, opens the next part, or (full mode) stays uncovered.
// Parts open in ascending minimum-label order, so every unordered partition
// appears exactly once, already canonical.
void generate_partitions(int n, int q, int max_part_size, bool allow_uncovered,
                         const std::function<void(const FacePartition&)>& emit) {
    FacePartition parts;
    std::function<void(int)> rec = [&](int label) {
        const int open = static_cast<int>(parts.size());
        if (label == n) {
            if (open == q) emit(parts);
            return;
        }
        if (n - label < q - open && !allow_uncovered) return;
        for (int i = 0; i < open; ++i) {
            if (static_cast<int>(parts[i].size()) >= max_part_size) continue;
            parts[i].push_back(label);
            rec(label + 1);
            parts[i].pop_back();
        }
        if (open < q) {
            parts.push_back({label});
            rec(label + 1);
            parts.pop_back();
        }
        if (allow_uncovered) rec(label + 1);
    };
    rec(0);
}

} // namespace

TverbergEnumeration enumerate_tverberg_partitions(const PointConfiguration& c, int q,
                                                  TverbergMode mode,
                                                  const TverbergEnumOptions& opts) {
    validate_config(c);
    if (q < 1) throw std::invalid_argument("q must be >= 1");
    const int n = static_cast<int>(c.points.size());
    if (n != (c.d + 1) * (q - 1) + 1)
        throw std::invalid_argument("configuration must have (d+1)(q-1)+1 points");
    if (mode == TverbergMode::general_position && !check_affine_general_position(c))
        throw NotInGeneralPositionConfig();

    const int max_part_size = (mode == TverbergMode::general_position) ? c.d + 1 : n;
    const bool allow_uncovered = (mode == TverbergMode::full);

    TverbergEnumeration result;
    std::vector<FacePartition> chunk;
    constexpr std::size_t kChunk = 4096;

    std::vector<std::optional<TverbergCertificate>> slots;
    std::vector<long long> pivots;
    const auto flush = [&]() {
        slots.assign(chunk.size(), std::nullopt);
        pivots.assign(chunk.size(), 0);
        parallel_for_indexed(opts.threads, chunk.size(), [&](std::size_t i) {
            LpStats st;
            slots[i] = hulls_intersect(c, chunk[i], &st);
            pivots[i] = st.pivots;
        });
        for (std::size_t i = 0; i < chunk.size(); ++i) {
            result.lp.pivots += pivots[i];
            if (slots[i]) {
                ++result.count;
                if (!opts.count_only) result.certificates.push_back(std::move(*slots[i]));
            }
        }
        chunk.clear();
    };

    generate_partitions(n, q, max_part_size, allow_uncovered, [&](const FacePartition& p) {
        ++result.candidates_tested;
        if (mode == TverbergMode::full && result.candidates_tested > opts.candidate_cap)
            throw CandidateCapExceeded(opts.candidate_cap);
        chunk.push_back(p);
        if (chunk.size() >= kChunk) flush();
    });
    flush();

    std::sort(result.certificates.begin(), result.certificates.end(),
              [](const TverbergCertificate& a, const TverbergCertificate& b) {
                  return a.partition < b.partition;
              });
    return result;
}

PointConfiguration sierksma_config(int d, int q) {
    if (d < 1 || q < 2) throw std::invalid_argument("sierksma_config needs d >= 1, q >= 2");
    const Rat eps(1, 100LL * (d + 1) * (q - 1));

    for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
        PointConfiguration c;
        c.d = d;
        for (int i = 0; i <= d; ++i) {
            PointD vertex(d, Rat(0));
            if (i >= 1) vertex[i - 1] = 1;
            for (int j = 0; j < q - 1; ++j) {
                PointD p = vertex;
                for (int k = 0; k < d; ++k) {
                    const std::uint64_t h =
                        mix64((attempt << 48) ^ (static_cast<std::uint64_t>(i) << 32) ^
                              (static_cast<std::uint64_t>(j) << 16) ^
                              static_cast<std::uint64_t>(k));
                    const long a = static_cast<long>(h % 1999) - 999; // in [-999, 999]
                    p[k] += eps * Rat(a, 1000);
                }
                c.points.push_back(std::move(p));
            }
        }
        c.points.push_back(PointD(d, Rat(1, d + 1)));
        if (check_affine_general_position(c)) return c;
    }
    throw std::logic_error("sierksma_config: no general-position offsets found");
}

} // namespace tvw
