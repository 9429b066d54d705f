#pragma once

#include "tvw/point.hpp"

#include <optional>

namespace tvw {

// Sign of det(b-a, c-a): +1 for counterclockwise a,b,c, -1 clockwise, 0 collinear.
int orient(const Point2& a, const Point2& b, const Point2& c);

// Exact incidence with the closed segment [a,b] (endpoints included). Requires a != b.
bool on_segment(const Point2& p, const Point2& a, const Point2& b);

enum class SegKind {
    disjoint,
    transversal,          // interiors cross in exactly one point
    shared_endpoint,      // touch at a point that is an endpoint of both
    endpoint_on_interior, // an endpoint of one lies in the other's interior
    collinear_overlap,    // common sub-segment of positive length
};

struct SegIntersection {
    SegKind kind = SegKind::disjoint;
    std::optional<Point2> point; // set for transversal and the two touch kinds
};

// Intersection taxonomy of segments [a,b] and [c,d]. Requires distinct
// endpoints within each segment.
SegIntersection segment_intersection(const Point2& a, const Point2& b,
                                     const Point2& c, const Point2& d);

} // namespace tvw
