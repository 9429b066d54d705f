#pragma once

#include "tvw/polyline.hpp"

#include <stdexcept>

namespace tvw {

struct PointOnCurveError : std::runtime_error {
    PointOnCurveError() : std::runtime_error("winding number undefined: point lies on the curve") {}
};

// Exact incidence of p with any segment of c.
bool point_on_polyline(const Point2& p, const Polyline& c);

// Degree of the closed polyline c around p, counterclockwise positive (the
// sign convention is fixed globally; only zero vs nonzero is contractual).
// Computed by signed crossings of a ray from p whose rational direction
// (1,0), (1,1), (1,2), ... is the first one avoiding all polyline vertices.
// Throws std::invalid_argument if c is not closed, PointOnCurveError if p
// lies on c.
long winding_number(const Polyline& c, const Point2& p);

// Independent implementation via quadrant transition accumulation, used as a
// cross-checking oracle for winding_number.
long winding_number_quadrant(const Polyline& c, const Point2& p);

// d=1 winding evidence: a and b straddle p (opposite components of R minus p).
// Throws std::invalid_argument if a or b equals p.
bool winding_nonzero_d1(const Rat& a, const Rat& b, const Rat& p);

} // namespace tvw
