#pragma once

#include "tvw/graph.hpp"
#include "tvw/polyline.hpp"

#include <map>

namespace tvw {

// PL realization of a graph in the plane: vertex placements plus one polyline
// per edge, stored oriented from the smaller to the larger endpoint label.
struct Drawing {
    Graph graph;
    std::vector<Point2> placement;                  // placement[v-1] = image of v
    std::map<std::pair<int, int>, Polyline> routes; // key normalized u < v

    const Point2& point_of(int v) const { return placement[static_cast<std::size_t>(v) - 1]; }
    const Polyline& route_of(int u, int v) const { return routes.at(normalized_edge(u, v)); }
};

// Structural consistency: placements for every vertex, exactly one valid route
// per edge, route endpoints equal to the edge endpoints' placements.
// Throws std::invalid_argument on violation.
void validate_drawing_structure(const Drawing& d);

// Route of edge {from,to} oriented from 'from' to 'to'.
Polyline route_oriented(const Drawing& d, int from, int to);

// Image of the open walk v0 v1 ... vk (k >= 1 edges, all present).
Polyline path_image(const Drawing& d, const std::vector<int>& path);

// Closed image of the cycle v0 v1 ... vk v0 (k+1 >= 3 vertices, edges present).
Polyline cycle_image(const Drawing& d, const std::vector<int>& cycle);

} // namespace tvw
