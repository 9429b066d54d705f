#include "tvw/winding_number.hpp"

#include <cassert>
#include <cstddef>

#include "tvw/predicates.hpp"

namespace tvw {

bool point_on_polyline(const Point2& p, const Polyline& c) {
    for (std::size_t i = 0; i + 1 < c.pts.size(); ++i)
        if (on_segment(p, c.pts[i], c.pts[i + 1])) return true;
    return false;
}

long winding_number(const Polyline& c, const Point2& p) {
    validate_polyline(c);
    if (!is_closed(c))
        throw std::invalid_argument("winding_number requires a closed polyline");
    if (point_on_polyline(p, c)) throw PointOnCurveError();

    const std::size_t n = c.pts.size() - 1;

    // Ray direction (1,k): admissible once no vertex satisfies
    // (u.y - p.y) = k (u.x - p.x); each vertex rules out at most one k.
    Rat k = 0;
    for (unsigned trial = 0;; ++trial) {
        k = Rat(trial);
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if ((c.pts[i].y - p.y) - k * (c.pts[i].x - p.x) == 0) ok = false;
        if (ok) break;
    }

    const auto side = [&](const Point2& u) { return (u.y - p.y) - k * (u.x - p.x); };

    long total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 &a = c.pts[i], &b = c.pts[i + 1];
        const Rat fa = side(a), fb = side(b);
        if (sign(fa) == sign(fb)) continue;
        const Rat s = fa / (fa - fb);
        const Point2 x = a + s * (b - a);
        // Keep only crossings on the positive ray.
        if ((x.x - p.x) + k * (x.y - p.y) > 0) total += (fa < 0) ? 1 : -1;
    }
    return total;
}

namespace {

int quadrant(const Point2& d) {
    if (d.x > 0 && d.y >= 0) return 0;
    if (d.x <= 0 && d.y > 0) return 1;
    if (d.x < 0 && d.y <= 0) return 2;
    return 3;
}

} // namespace

long winding_number_quadrant(const Polyline& c, const Point2& p) {
    validate_polyline(c);
    if (!is_closed(c))
        throw std::invalid_argument("winding_number requires a closed polyline");
    if (point_on_polyline(p, c)) throw PointOnCurveError();

    long quarter_turns = 0;
    for (std::size_t i = 0; i + 1 < c.pts.size(); ++i) {
        const Point2 &a = c.pts[i], &b = c.pts[i + 1];
        const int delta = (quadrant(b - p) - quadrant(a - p) + 4) % 4;
        if (delta == 1) {
            quarter_turns += 1;
        } else if (delta == 3) {
            quarter_turns -= 1;
        } else if (delta == 2) {
            // Antipodal quadrant jump: the side of p relative to a->b decides
            // the half-turn's direction; p off the curve rules out orient 0.
            const int o = orient(a, b, p);
            assert(o != 0);
            quarter_turns += (o > 0) ? 2 : -2;
        }
    }
    assert(quarter_turns % 4 == 0);
    return quarter_turns / 4;
}

bool winding_nonzero_d1(const Rat& a, const Rat& b, const Rat& p) {
    if (a == p || b == p)
        throw std::invalid_argument("winding_nonzero_d1: endpoint equals the query point");
    return (a < p && p < b) || (b < p && p < a);
}

} // namespace tvw
