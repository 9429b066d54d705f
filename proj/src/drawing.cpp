#include "tvw/drawing.hpp"

#include <stdexcept>

namespace tvw {

void validate_drawing_structure(const Drawing& d) {
    if (static_cast<int>(d.placement.size()) != d.graph.n)
        throw std::invalid_argument("drawing: placement count differs from vertex count");
    if (d.routes.size() != d.graph.edges.size())
        throw std::invalid_argument("drawing: route count differs from edge count");
    for (const auto& [e, route] : d.routes) {
        if (!d.graph.edges.count(e))
            throw std::invalid_argument("drawing: route for a non-edge");
        validate_polyline(route);
        if (route.pts.front() != d.point_of(e.first) || route.pts.back() != d.point_of(e.second))
            throw std::invalid_argument("drawing: route endpoints differ from placements");
    }
}

Polyline route_oriented(const Drawing& d, int from, int to) {
    const Polyline& r = d.route_of(from, to);
    return (from < to) ? r : reversed(r);
}

Polyline path_image(const Drawing& d, const std::vector<int>& path) {
    if (path.size() < 2) throw std::invalid_argument("path_image: need at least one edge");
    Polyline out;
    out.pts.push_back(d.point_of(path[0]));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        const Polyline leg = route_oriented(d, path[i], path[i + 1]);
        out.pts.insert(out.pts.end(), leg.pts.begin() + 1, leg.pts.end());
    }
    return out;
}

Polyline cycle_image(const Drawing& d, const std::vector<int>& cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("cycle_image: need at least 3 vertices");
    std::vector<int> walk = cycle;
    walk.push_back(cycle.front());
    return path_image(d, walk);
}

} // namespace tvw
