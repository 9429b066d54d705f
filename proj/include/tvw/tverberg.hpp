#pragma once

#include "tvw/config.hpp"
#include "tvw/lp.hpp"

#include <optional>
#include <stdexcept>

namespace tvw {

struct TverbergCertificate {
    FacePartition partition;
    PointD witness;
    std::vector<std::vector<Rat>> coefficients; // per part, aligned with part labels

    // Exact re-verification: coefficients are nonnegative, sum to 1 per part,
    // and reproduce the witness. Throws std::logic_error on failure.
    void verify(const PointConfiguration& c) const;
};

// Convex hulls of the parts share a point? Decided by exact LP feasibility:
// convex coefficients per part, combination of part 1 equated with every
// other part. Throws std::invalid_argument on empty parts, out-of-range or
// repeated labels across parts.
std::optional<TverbergCertificate> hulls_intersect(const PointConfiguration& c,
                                                   const FacePartition& parts,
                                                   LpStats* stats = nullptr);

enum class TverbergMode { general_position, full };

struct NotInGeneralPositionConfig : std::runtime_error {
    NotInGeneralPositionConfig()
        : std::runtime_error("configuration not in affine general position") {}
};

struct CandidateCapExceeded : std::runtime_error {
    explicit CandidateCapExceeded(long long cap)
        : std::runtime_error("candidate partition cap exceeded (" + std::to_string(cap) + ")") {}
};

struct TverbergEnumOptions {
    int threads = 0;                         // 1 = serial reference, 0 = all, k = k threads
    long long candidate_cap = 5'000'000;     // full mode guard
    bool count_only = false;                 // skip certificate materialization
};

struct TverbergEnumeration {
    std::vector<TverbergCertificate> certificates; // canonical order; empty if count_only
    long long count = 0;
    long long candidates_tested = 0;
    LpStats lp;
};

// general_position mode: unordered partitions of ALL labels into exactly q
// parts of size <= d+1 (requires (d+1)(q-1)+1 points and affine general
// position). full mode: parts of any size, uncovered labels allowed, guarded
// by the candidate cap. Each candidate partition is tested with
// hulls_intersect; candidates are independent work units and results merge in
// canonical candidate order regardless of thread count.
TverbergEnumeration enumerate_tverberg_partitions(const PointConfiguration& c, int q,
                                                  TverbergMode mode,
                                                  const TverbergEnumOptions& opts = {});

// d+1 clusters of q-1 points each near the vertices of the standard simplex
// (edge length 1 between the origin vertex and each e_i), cluster radius
// 1/(100 (d+1) (q-1)), plus the barycenter as the last label. Deterministic
// offsets, re-drawn until check_affine_general_position passes.
PointConfiguration sierksma_config(int d, int q);

} // namespace tvw
