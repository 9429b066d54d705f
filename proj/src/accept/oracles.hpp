#pragma once

#include "tvw/config.hpp"
#include "tvw/drawing.hpp"
#include "tvw/polyline.hpp"

#include <cstdint>
#include <functional>
#include <set>
#include <vector>

// Independent oracles used by the acceptance suite. Each one recomputes a
// result by a different algorithm than the library path it checks.

namespace tvw::accept {

struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ULL;
        return mix64(state);
    }
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Decides whether the convex hulls of the parts share a point, by Fourier-
// Motzkin elimination on the barycentric-coordinate system (no simplex code).
bool fm_hulls_intersect(const PointConfiguration& c,
                        const std::vector<std::vector<int>>& parts);

// All ways to place labels 0..n-1 into q unlabeled nonempty parts, parts
// ordered by their smallest label; with allow_uncovered, labels may be left
// out. Brute force for cross-checking enumeration on small instances.
void all_partitions(int n, int q, bool allow_uncovered,
                    const std::function<void(const std::vector<std::vector<int>>&)>& emit);

// Edge pairs of the alternating linear model that must cross exactly once:
// long edges on the same side of the line whose endpoint intervals strictly
// interleave. Pairs are ((a,b),(c,d)) with a<b, c<d, (a,b) < (c,d).
std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> altmodel_interleaving_pairs(int n);

// Rejection-sampled rational configuration in affine general position.
PointConfiguration random_gp_config(int d, int n, std::uint64_t seed);

// Straight-line drawing of the complete graph on a planar configuration
// (vertex i+1 at point i).
Drawing straight_line_drawing(const PointConfiguration& c);

// Nudges interior route vertices by small rationals until the result is in
// general position again; endpoints stay fixed. Throws after 50 attempts.
Drawing jitter_drawing(const Drawing& d, std::uint64_t seed);

// Labeled-graph bitmask utilities for the 2-winding classification check.
// Edge (u,v), 0-based u<v, occupies a fixed bit; canonical_mask minimizes
// over all vertex permutations.
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t canonical_mask(int n, std::uint64_t mask);
std::vector<std::uint64_t> all_iso_classes(int n);

// Closed polyline with the given number of segments and no repeated
// consecutive vertices; may self-intersect (that is the point).
Polyline random_closed_polyline(Rng& rng, int segments);

} // namespace tvw::accept
