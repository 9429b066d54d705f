#pragma once

#include "tvw/drawing.hpp"
#include "tvw/general_position.hpp"

#include <optional>
#include <string>

namespace tvw {

struct CandidatePoint {
    enum class Kind { vertex, crossing };
    Kind kind = Kind::vertex;
    Point2 where;
    int vertex = 0;                      // vertex kind
    std::pair<int, int> e1{0, 0}, e2{0, 0}; // crossing kind, e1 < e2

    friend bool operator==(const CandidatePoint& a, const CandidatePoint& b) {
        return a.kind == b.kind && a.where == b.where && a.vertex == b.vertex &&
               a.e1 == b.e1 && a.e2 == b.e2;
    }
};

// All vertex images plus every transversal crossing of vertex-disjoint edge
// pairs, exact. Vertices first (ascending), then crossings in deterministic
// route order. Throws NotInGeneralPosition.
std::vector<CandidatePoint> candidate_points(const Drawing& d);

struct Face {
    enum class Kind { vertex, edge, path, cycle };
    Kind kind = Kind::vertex;
    std::vector<int> vertices; // vertex: [v]; edge: [a,b]; path: endpoint order; cycle: traversal

    friend bool operator==(const Face& a, const Face& b) {
        return a.kind == b.kind && a.vertices == b.vertices;
    }
    friend bool operator<(const Face& a, const Face& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.vertices < b.vertices;
    }
};

// Normal form: single-vertex faces become kind vertex, two-vertex faces kind
// edge (sorted), longer paths the lexicographic minimum of the two endpoint
// orders, cycles the minimum-vertex rotation in the direction of the smaller
// neighbor. Face sets compare as sorted lists of canonical faces.
Face canonical_face(Face f);

struct WindingEvidence {
    enum class Kind { containment, winding };
    Kind kind = Kind::containment;
    long winding = 0; // nonzero iff kind == winding
};

struct WindingCertificate {
    std::vector<Face> faces; // canonical, sorted
    CandidatePoint point;
    std::vector<WindingEvidence> evidence; // aligned with faces
};

enum class WindingMode { simplex, graph };

struct WrongGraphError : std::invalid_argument {
    explicit WrongGraphError(const std::string& what) : std::invalid_argument(what) {}
};

struct EnumerationCapExceeded : std::runtime_error {
    explicit EnumerationCapExceeded(long long cap)
        : std::runtime_error("enumeration state cap exceeded (" + std::to_string(cap) + ")") {}
};

struct OverlappingFacesError : std::invalid_argument {
    OverlappingFacesError() : std::invalid_argument("faces are not pairwise vertex-disjoint") {}
};

struct WindingEnumOptions {
    int threads = 0;                    // 1 = serial reference, 0 = all, k = k threads
    long long state_cap = 100'000'000;  // partial-state guard (graph mode)
    bool count_only = false;            // dedup on partitions only, no certificates
};

struct WindingEnumeration {
    std::vector<WindingCertificate> certificates; // canonical order; empty if count_only
    long long count = 0;                          // distinct partitions
    long long candidates = 0;                     // candidate points examined
    long long pruned_zero_winding = 0;            // cycles rejected before extension
    long long states = 0;                         // backtracking states visited
};

// Partition shapes per candidate point p. Shape A (p a vertex image v): the
// face containing v is the vertex itself (simplex mode) or any simple path
// through v (graph mode); the rest are q-1 vertex-disjoint cycles with
// nonzero winding about p. Shape B (p a crossing of e1, e2): the faces
// containing e1 and e2 are those edges (simplex mode) or paths containing
// them (graph mode); the rest are q-2 winding cycles. Simplex mode requires
// K_{3q-2} and restricts cycles to triangles (2-skeleton faces). Zero-winding
// cycles are pruned before extension; partitions are deduplicated in
// canonical form across candidate points; candidate points are independent
// work units merged in deterministic order.
WindingEnumeration enumerate_winding_partitions(const Drawing& d, int q, WindingMode mode,
                                                const WindingEnumOptions& opts = {});

// Counting fast path: same search, dedup on canonical partitions only.
long long count_winding_partitions(const Drawing& d, int q, WindingMode mode,
                                   const WindingEnumOptions& opts = {});

// Checks one partition against one candidate point: every vertex/edge/path
// face image must contain the point; every cycle face must contain it on its
// image or wind around it. Throws OverlappingFacesError on non-disjoint
// faces, std::invalid_argument on malformed faces or point,
// NotInGeneralPosition on degenerate drawings.
std::optional<WindingCertificate> is_winding_partition(const Drawing& d,
                                                       const std::vector<Face>& faces,
                                                       const CandidatePoint& point);

// d=1 winding partitions of labeled values (labels 1..2q-1): q disjoint faces,
// each a singleton with value p or a pair straddling p, for p among the
// values. Returns distinct partitions with one witness p each.
struct WindingPartitionD1 {
    std::vector<std::vector<int>> faces;
    Rat point;
};
std::vector<WindingPartitionD1> enumerate_winding_partitions_d1(const std::vector<Rat>& values,
                                                                int q);

// Filters enumerate_winding_partitions to certificates in which no face
// contains both endpoints of a matching edge; such certificates remain valid
// for the graph minus the matching. The matching must consist of pairwise
// vertex-disjoint edges of the drawing's graph.
WindingEnumeration matching_avoiding_partitions(const Drawing& d, int q,
                                                const std::vector<std::pair<int, int>>& matching,
                                                WindingMode mode,
                                                const WindingEnumOptions& opts = {});

} // namespace tvw
