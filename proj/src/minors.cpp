#include "tvw/minors.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace tvw {

namespace {

struct PatternSpec {
    int nodes;
    std::vector<std::pair<int, int>> edges;
};

PatternSpec pattern_spec(MinorPattern h) {
    if (h == MinorPattern::K4)
        return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    return {5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}};
}

struct MinorSearch {
    const PatternSpec pat;
    int n;
    std::vector<std::uint32_t> adj; // adj[v] for v in 0..n-1
    std::vector<std::uint32_t> branch;

    bool adjacent_sets(std::uint32_t a, std::uint32_t b) const {
        for (int v = 0; v < n; ++v)
            if ((a >> v) & 1u)
                if (adj[v] & b) return true;
        return false;
    }

    std::uint32_t neighborhood(std::uint32_t s) const {
        std::uint32_t out = 0;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1u) out |= adj[v];
        return out & ~s;
    }

    bool compatible(int node, std::uint32_t candidate) const {
        for (auto [a, b] : pat.edges) {
            const int other = (a == node) ? b : (b == node) ? a : -1;
            if (other < 0 || other >= static_cast<int>(branch.size())) continue;
            if (!adjacent_sets(candidate, branch[other])) return false;
        }
        return true;
    }

    // Enumerates connected supersets of s within 'remaining', each exactly
    // once via the banned-extension technique, and tries s as the next
    // branch set at every size.
    bool grow(std::uint32_t s, std::uint32_t banned, std::uint32_t remaining, int node) {
        if (compatible(node, s)) {
            branch.push_back(s);
            if (assign(remaining & ~s)) return true;
            branch.pop_back();
        }
        std::uint32_t ext = neighborhood(s) & remaining & ~banned;
        while (ext) {
            const std::uint32_t bit = ext & (~ext + 1);
            ext ^= bit;
            if (grow(s | bit, banned, remaining, node)) return true;
            banned |= bit;
        }
        return false;
    }

    bool assign(std::uint32_t remaining) {
        const int node = static_cast<int>(branch.size());
        if (node == pat.nodes) return true;
        // Un-picked vertices can stay outside every branch set, so any vertex
        // of 'remaining' may seed the next set; minimum-vertex seeding would
        // skip valid assignments here, hence the plain loop with a ban mask.
        std::uint32_t banned = 0;
        std::uint32_t seeds = remaining;
        while (seeds) {
            const std::uint32_t bit = seeds & (~seeds + 1);
            seeds ^= bit;
            if (grow(bit, banned, remaining, node)) return true;
            banned |= bit;
        }
        return false;
    }
};

} // namespace

bool has_minor(const Graph& g, MinorPattern h) {
    const PatternSpec pat = pattern_spec(h);
    if (g.n < pat.nodes) return false;
    if (g.n > 31) throw std::invalid_argument("has_minor: oracle limited to n <= 31");
    MinorSearch s{pat, g.n, std::vector<std::uint32_t>(g.n, 0), {}};
    for (const auto& e : g.edges) {
        s.adj[e.first - 1] |= 1u << (e.second - 1);
        s.adj[e.second - 1] |= 1u << (e.first - 1);
    }
    return s.assign((g.n == 31) ? 0x7fffffffu : ((1u << g.n) - 1u));
}

bool is_outerplanar(const Graph& g) {
    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph bg(static_cast<std::size_t>(g.n) + 1);
    for (const auto& e : g.edges)
        boost::add_edge(e.first - 1, e.second - 1, bg);
    const auto apex = static_cast<std::size_t>(g.n);
    for (int v = 0; v < g.n; ++v)
        boost::add_edge(apex, static_cast<std::size_t>(v), bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool is_2winding(const Graph& g) {
    return !is_outerplanar(g);
}

} // namespace tvw
