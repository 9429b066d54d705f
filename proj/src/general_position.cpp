#include "tvw/general_position.hpp"

#include <set>
#include <sstream>

#include "tvw/predicates.hpp"
#include "tvw/winding_number.hpp"

namespace tvw {

const char* to_string(GPViolationKind k) {
    switch (k) {
        case GPViolationKind::coincident_points: return "coincident-points";
        case GPViolationKind::vertex_on_nonincident_edge: return "vertex-on-nonincident-edge";
        case GPViolationKind::overlapping_segments: return "overlapping-segments";
        case GPViolationKind::tangential_crossing: return "tangential-crossing";
        case GPViolationKind::concurrent_triple: return "concurrent-triple";
        case GPViolationKind::crossing_hits_vertex: return "crossing-hits-vertex";
    }
    return "?";
}

std::string GeneralPositionReport::summary() const {
    std::ostringstream os;
    os << violations.size() << " violation(s)";
    for (std::size_t i = 0; i < violations.size() && i < 4; ++i)
        os << "; " << to_string(violations[i].kind) << " " << violations[i].detail;
    return os.str();
}

namespace {

struct Collector {
    std::vector<GPViolation> out;
    std::set<std::string> seen;

    void add(GPViolation v) {
        std::ostringstream key;
        key << to_string(v.kind);
        for (int x : v.vertices) key << " v" << x;
        for (auto [a, b] : v.edges) key << " e" << a << "-" << b;
        if (v.where) key << " @" << rat_to_string(v.where->x) << "," << rat_to_string(v.where->y);
        if (seen.insert(key.str()).second) out.push_back(std::move(v));
    }
};

std::string edge_name(std::pair<int, int> e) {
    return std::to_string(e.first) + "-" + std::to_string(e.second);
}

} // namespace

GeneralPositionReport validate_general_position(const Drawing& d) {
    validate_drawing_structure(d);
    Collector col;
    const int n = d.graph.n;

    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (d.point_of(u) == d.point_of(v))
                col.add({GPViolationKind::coincident_points, {u, v}, {}, d.point_of(u),
                         "vertices " + std::to_string(u) + "," + std::to_string(v)});

    // Vertex images against edge routes. For an incident edge the image may
    // appear only as the terminal point of the route's end segment.
    for (int v = 1; v <= n; ++v) {
        const Point2& p = d.point_of(v);
        for (const auto& [e, route] : d.routes) {
            const bool incident = (e.first == v || e.second == v);
            const std::size_t segs = route.pts.size() - 1;
            for (std::size_t i = 0; i < segs; ++i) {
                if (!on_segment(p, route.pts[i], route.pts[i + 1])) continue;
                if (incident) {
                    const bool at_start = (e.first == v && i == 0 && p == route.pts.front());
                    const bool at_end = (e.second == v && i == segs - 1 && p == route.pts.back());
                    if (at_start || at_end) continue;
                    col.add({GPViolationKind::vertex_on_nonincident_edge, {v}, {e}, p,
                             "vertex " + std::to_string(v) + " on interior of incident edge " +
                                 edge_name(e)});
                } else {
                    col.add({GPViolationKind::vertex_on_nonincident_edge, {v}, {e}, p,
                             "vertex " + std::to_string(v) + " on edge " + edge_name(e)});
                }
            }
        }
    }

    struct Crossing {
        Point2 p;
        std::pair<int, int> e1, e2;
    };
    std::vector<Crossing> crossings;

    for (auto it1 = d.routes.begin(); it1 != d.routes.end(); ++it1) {
        for (auto it2 = std::next(it1); it2 != d.routes.end(); ++it2) {
            const auto& e1 = it1->first;
            const auto& e2 = it2->first;
            int shared = -1;
            if (e1.first == e2.first || e1.first == e2.second) shared = e1.first;
            else if (e1.second == e2.first || e1.second == e2.second) shared = e1.second;
            const Polyline& r1 = it1->second;
            const Polyline& r2 = it2->second;
            for (std::size_t i = 0; i + 1 < r1.pts.size(); ++i) {
                for (std::size_t j = 0; j + 1 < r2.pts.size(); ++j) {
                    const auto x = segment_intersection(r1.pts[i], r1.pts[i + 1],
                                                        r2.pts[j], r2.pts[j + 1]);
                    switch (x.kind) {
                        case SegKind::disjoint:
                            break;
                        case SegKind::transversal:
                            if (shared >= 0)
                                col.add({GPViolationKind::tangential_crossing, {shared},
                                         {e1, e2}, x.point,
                                         "adjacent edges " + edge_name(e1) + "," + edge_name(e2) +
                                             " cross away from their shared vertex"});
                            else
                                crossings.push_back({*x.point, e1, e2});
                            break;
                        case SegKind::shared_endpoint:
                            if (shared >= 0 && *x.point == d.point_of(shared)) break;
                            col.add({GPViolationKind::tangential_crossing, {}, {e1, e2}, x.point,
                                     "edges " + edge_name(e1) + "," + edge_name(e2) +
                                         " touch at a polyline vertex"});
                            break;
                        case SegKind::endpoint_on_interior:
                            if (shared >= 0 && *x.point == d.point_of(shared)) break;
                            col.add({GPViolationKind::tangential_crossing, {}, {e1, e2}, x.point,
                                     "edges " + edge_name(e1) + "," + edge_name(e2) +
                                         " meet non-transversally"});
                            break;
                        case SegKind::collinear_overlap:
                            col.add({GPViolationKind::overlapping_segments, {}, {e1, e2},
                                     std::nullopt,
                                     "edges " + edge_name(e1) + "," + edge_name(e2) +
                                         " overlap along a segment"});
                            break;
                    }
                }
            }
        }
    }

    for (const auto& c : crossings) {
        for (int v = 1; v <= n; ++v)
            if (d.point_of(v) == c.p)
                col.add({GPViolationKind::crossing_hits_vertex, {v}, {c.e1, c.e2}, c.p,
                         "crossing of " + edge_name(c.e1) + "," + edge_name(c.e2) +
                             " hits vertex " + std::to_string(v)});
        for (const auto& [e3, route] : d.routes) {
            if (e3 == c.e1 || e3 == c.e2) continue;
            if (point_on_polyline(c.p, route))
                col.add({GPViolationKind::concurrent_triple, {}, {c.e1, c.e2, e3}, c.p,
                         "edges " + edge_name(c.e1) + "," + edge_name(c.e2) + "," +
                             edge_name(e3) + " concurrent"});
        }
    }

    return {std::move(col.out)};
}

Drawing perturb_to_general_position(const Drawing& d, const Rat& step, int budget) {
    if (step <= 0) throw std::invalid_argument("perturbation step must be positive");
    validate_drawing_structure(d);
    if (validate_general_position(d).ok()) return d;

    Rat s = step;
    for (int round = 0; round < budget; ++round, s /= 2) {
        Drawing trial = d;
        for (auto& [e, route] : trial.routes) {
            for (std::size_t j = 1; j + 1 < route.pts.size(); ++j) {
                std::uint64_t h = mix64((static_cast<std::uint64_t>(e.first) << 40) ^
                                        (static_cast<std::uint64_t>(e.second) << 20) ^
                                        (static_cast<std::uint64_t>(j) << 8) ^
                                        static_cast<std::uint64_t>(round));
                long ax = static_cast<long>(h % 2001) - 1000;
                h = mix64(h);
                long ay = static_cast<long>(h % 2001) - 1000;
                if (ax == 0 && ay == 0) ax = 1;
                route.pts[j].x += s * Rat(ax, 1000);
                route.pts[j].y += s * Rat(ay, 1000);
            }
        }
        try {
            if (validate_general_position(trial).ok()) return trial;
        } catch (const std::invalid_argument&) {
            // Offsets can merge consecutive polyline points; treat as a failed round.
        }
    }
    throw PerturbationBudgetExceeded();
}

} // namespace tvw
