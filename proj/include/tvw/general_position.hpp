#pragma once

#include "tvw/drawing.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace tvw {

enum class GPViolationKind {
    coincident_points,
    vertex_on_nonincident_edge,
    overlapping_segments,
    tangential_crossing,
    concurrent_triple,
    crossing_hits_vertex,
};

const char* to_string(GPViolationKind k);

struct GPViolation {
    GPViolationKind kind;
    std::vector<int> vertices;               // involved vertex labels, if any
    std::vector<std::pair<int, int>> edges;  // involved edges, if any
    std::optional<Point2> where;
    std::string detail;
};

struct GeneralPositionReport {
    std::vector<GPViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

struct NotInGeneralPosition : std::runtime_error {
    GeneralPositionReport report;
    explicit NotInGeneralPosition(GeneralPositionReport r)
        : std::runtime_error("drawing not in general position: " + r.summary()),
          report(std::move(r)) {}
};

struct PerturbationBudgetExceeded : std::runtime_error {
    PerturbationBudgetExceeded()
        : std::runtime_error("perturbation retry budget exhausted") {}
};

// Checks, for the plane: vertex images pairwise distinct; no vertex image on a
// non-incident edge image (nor on the interior of an incident edge's route);
// any two non-adjacent edge images meet only in transversal crossings;
// adjacent edges meet only at their shared vertex image; no point on three or
// more edge-segment interiors; crossing points distinct from vertex images.
GeneralPositionReport validate_general_position(const Drawing& d);

// Deterministic repair: offsets interior polyline vertices by rational
// displacements derived from (edge, vertex index, round), halving the step
// each failed round. Vertex placements are never moved. Returns the input
// unchanged when it already validates; throws PerturbationBudgetExceeded
// after 'budget' failed rounds. Requires step > 0.
Drawing perturb_to_general_position(const Drawing& d, const Rat& step, int budget = 40);

} // namespace tvw
