#include "tvw/predicates.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvw {

int orient(const Point2& a, const Point2& b, const Point2& c) {
    const Rat det = cross(b - a, c - a);
    if (det > 0) return 1;
    if (det < 0) return -1;
    return 0;
}

bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
    if (orient(a, b, p) != 0) return false;
    // Collinear: p is between a and b iff (p-a).(p-b) <= 0.
    return dot(p - a, p - b) <= 0;
}

SegIntersection segment_intersection(const Point2& a, const Point2& b,
                                     const Point2& c, const Point2& d) {
    if (a == b || c == d)
        throw std::invalid_argument("degenerate segment");

    const int d1 = orient(c, d, a);
    const int d2 = orient(c, d, b);
    const int d3 = orient(a, b, c);
    const int d4 = orient(a, b, d);

    if (d1 == 0 && d2 == 0) {
        // All four points collinear: compare intervals in lexicographic order,
        // which is a consistent linear order along any fixed line.
        Point2 p1 = a, p2 = b, q1 = c, q2 = d;
        if (p2 < p1) std::swap(p1, p2);
        if (q2 < q1) std::swap(q1, q2);
        const Point2 lo = std::max(p1, q1);
        const Point2 hi = std::min(p2, q2);
        if (hi < lo) return {SegKind::disjoint, std::nullopt};
        if (lo == hi) return {SegKind::shared_endpoint, lo};
        return {SegKind::collinear_overlap, std::nullopt};
    }

    if (a == c || a == d) return {SegKind::shared_endpoint, a};
    if (b == c || b == d) return {SegKind::shared_endpoint, b};

    if (d1 == 0 && on_segment(a, c, d)) return {SegKind::endpoint_on_interior, a};
    if (d2 == 0 && on_segment(b, c, d)) return {SegKind::endpoint_on_interior, b};
    if (d3 == 0 && on_segment(c, a, b)) return {SegKind::endpoint_on_interior, c};
    if (d4 == 0 && on_segment(d, a, b)) return {SegKind::endpoint_on_interior, d};

    if (d1 * d2 < 0 && d3 * d4 < 0) {
        const Rat t = cross(c - a, d - c) / cross(b - a, d - c);
        return {SegKind::transversal, a + t * (b - a)};
    }
    return {SegKind::disjoint, std::nullopt};
}

} // namespace tvw
