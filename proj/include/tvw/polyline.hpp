#pragma once

#include "tvw/point.hpp"

#include <vector>

namespace tvw {

// Piecewise-linear curve. At least two vertices, consecutive vertices
// distinct; closed iff first equals last.
struct Polyline {
    std::vector<Point2> pts;
};

// Throws std::invalid_argument on fewer than 2 points or equal consecutive points.
void validate_polyline(const Polyline& c);

bool is_closed(const Polyline& c);

Polyline reversed(const Polyline& c);

} // namespace tvw
