#pragma once

#include <array>
#include <set>
#include <utility>
#include <vector>

namespace tvw {

// Simple undirected graph on vertex labels 1..n; no loops, no parallel edges.
struct Graph {
    int n = 0;
    std::set<std::pair<int, int>> edges; // normalized u < v

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
};

std::pair<int, int> normalized_edge(int u, int v);

// Throws std::invalid_argument on out-of-range endpoints, loops, or duplicates.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

Graph complete_graph(int n);

// Throws std::invalid_argument if any listed edge is absent.
Graph delete_edges(const Graph& g, const std::vector<std::pair<int, int>>& to_delete);

// Replaces the triangle's three edges by a new vertex n+1 joined to its corners.
// Throws std::invalid_argument unless all three triangle edges exist.
Graph delta_y(const Graph& g, const std::array<int, 3>& triangle);

// Reverse operation: removes a degree-3 vertex and adds the triangle on its
// neighbors (already-present edges are kept once; the graph stays simple).
// Vertices above the removed center shift down by one to keep labels 1..n.
// Throws std::invalid_argument unless degree(center) == 3.
Graph y_delta(const Graph& g, int center);

// Greedy maximal matching over the edges in the given order (default:
// lexicographic). Maximal, not maximum-cardinality.
std::vector<std::pair<int, int>> maximal_matching(
    const Graph& g, const std::vector<std::pair<int, int>>* order = nullptr);

bool is_connected(const Graph& g);

} // namespace tvw
