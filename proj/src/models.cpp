#include "tvw/models.hpp"

#include <stdexcept>

#include "tvw/general_position.hpp"

namespace tvw {

Drawing alternating_linear_model(int n) {
    if (n < 2) throw std::invalid_argument("alternating_linear_model needs n >= 2");
    Drawing d;
    d.graph = complete_graph(n);
    for (int i = 1; i <= n; ++i) d.placement.push_back({Rat(i), Rat(0)});
    for (const auto& e : d.graph.edges) {
        const int i = e.first, j = e.second, k = j - i;
        Polyline route;
        if (k == 1) {
            route.pts = {d.point_of(i), d.point_of(j)};
        } else {
            const int s = (i % 2 == 1) ? 1 : -1;
            const Point2 apex{Rat(2 * i + k, 2), Rat(s * k * k)};
            route.pts = {d.point_of(i), apex, d.point_of(j)};
        }
        d.routes.emplace(e, std::move(route));
    }
    return perturb_to_general_position(d, Rat(1, 64));
}

std::pair<Drawing, std::vector<std::pair<int, int>>> star_deletion_drawing(int q) {
    if (q < 2) throw std::invalid_argument("star_deletion_drawing needs q >= 2");
    const int n = 3 * q - 2;
    Drawing d = alternating_linear_model(n);
    std::vector<std::pair<int, int>> star;
    for (int i = 1; i <= 2 * q - 3; i += 2) star.push_back({i, n});
    d.graph = delete_edges(d.graph, star);
    for (const auto& e : star) d.routes.erase(e);
    return {std::move(d), std::move(star)};
}

} // namespace tvw
