#include "tvw/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace tvw {

std::pair<int, int> normalized_edge(int u, int v) {
    return {std::min(u, v), std::max(u, v)};
}

bool Graph::has_edge(int u, int v) const {
    return edges.count(normalized_edge(u, v)) > 0;
}

int Graph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges)
        if (e.first == v || e.second == v) ++d;
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : edges) {
        if (e.first == v) out.push_back(e.second);
        else if (e.second == v) out.push_back(e.first);
    }
    std::sort(out.begin(), out.end());
    return out;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n = n;
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge");
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint out of range");
        if (!g.edges.insert(normalized_edge(u, v)).second)
            throw std::invalid_argument("duplicate edge");
    }
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete_graph needs n >= 1");
    Graph g;
    g.n = n;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.edges.insert({u, v});
    return g;
}

Graph delete_edges(const Graph& g, const std::vector<std::pair<int, int>>& to_delete) {
    Graph out = g;
    for (auto [u, v] : to_delete) {
        if (out.edges.erase(normalized_edge(u, v)) == 0)
            throw std::invalid_argument("delete_edges: edge not present");
    }
    return out;
}

Graph delta_y(const Graph& g, const std::array<int, 3>& triangle) {
    const auto [a, b, c] = triangle;
    if (!g.has_edge(a, b) || !g.has_edge(b, c) || !g.has_edge(a, c))
        throw std::invalid_argument("delta_y: triangle edges not all present");
    Graph out = g;
    out.edges.erase(normalized_edge(a, b));
    out.edges.erase(normalized_edge(b, c));
    out.edges.erase(normalized_edge(a, c));
    out.n = g.n + 1;
    out.edges.insert(normalized_edge(a, out.n));
    out.edges.insert(normalized_edge(b, out.n));
    out.edges.insert(normalized_edge(c, out.n));
    return out;
}

Graph y_delta(const Graph& g, int center) {
    if (center < 1 || center > g.n)
        throw std::invalid_argument("y_delta: center out of range");
    const auto nb = g.neighbors(center);
    if (nb.size() != 3)
        throw std::invalid_argument("y_delta: center degree is not 3");
    const auto relabel = [&](int v) { return v > center ? v - 1 : v; };
    Graph out;
    out.n = g.n - 1;
    for (const auto& e : g.edges) {
        if (e.first == center || e.second == center) continue;
        out.edges.insert(normalized_edge(relabel(e.first), relabel(e.second)));
    }
    out.edges.insert(normalized_edge(relabel(nb[0]), relabel(nb[1])));
    out.edges.insert(normalized_edge(relabel(nb[0]), relabel(nb[2])));
    out.edges.insert(normalized_edge(relabel(nb[1]), relabel(nb[2])));
    return out;
}

std::vector<std::pair<int, int>> maximal_matching(
    const Graph& g, const std::vector<std::pair<int, int>>* order) {
    std::vector<std::pair<int, int>> seq;
    if (order) {
        for (auto [u, v] : *order) {
            if (!g.has_edge(u, v))
                throw std::invalid_argument("maximal_matching: ordered edge not in graph");
            seq.push_back(normalized_edge(u, v));
        }
        if (seq.size() != g.edges.size())
            throw std::invalid_argument("maximal_matching: order must list every edge once");
    } else {
        seq.assign(g.edges.begin(), g.edges.end());
    }
    std::vector<bool> used(g.n + 1, false);
    std::vector<std::pair<int, int>> matching;
    for (auto [u, v] : seq) {
        if (used[u] || used[v]) continue;
        used[u] = used[v] = true;
        matching.push_back({u, v});
    }
    return matching;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<bool> seen(g.n + 1, false);
    std::vector<int> stack{1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.n;
}

} // namespace tvw
