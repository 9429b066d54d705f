#include "tvw/graph.hpp"
#include "tvw/minors.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace tvw;

namespace {

std::uint64_t mask_of(const Graph& g) {
    std::uint64_t m = 0;
    int bit = 0;
    for (int u = 1; u <= g.n; ++u)
        for (int v = u + 1; v <= g.n; ++v, ++bit)
            if (g.has_edge(u, v)) m |= 1ULL << bit;
    return m;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    return accept::canonical_mask(a.n, mask_of(a)) == accept::canonical_mask(b.n, mask_of(b));
}

Graph k23() { return make_graph(5, {{1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}); }

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    e.push_back({n, 1});
    return make_graph(n, e);
}

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
    return make_graph(n, e);
}

} // namespace

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);  // loop
    CHECK_THROWS_AS(make_graph(3, {{1, 4}}), std::invalid_argument);  // range
    CHECK_THROWS_AS(make_graph(3, {{1, 2}, {2, 1}}), std::invalid_argument); // duplicate
    Graph g = make_graph(3, {{2, 1}});
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK(g.degree(3) == 0);
}

TEST_CASE("complete graphs and edge deletion") {
    CHECK(complete_graph(4).edges.size() == 6);
    Graph k7 = complete_graph(7);
    CHECK(k7.edges.size() == 21);
    Graph reduced = delete_edges(k7, {{1, 2}, {3, 4}, {5, 6}});
    CHECK(reduced.edges.size() == 18);
    CHECK_THROWS_AS(delete_edges(reduced, {{1, 2}}), std::invalid_argument);
}

TEST_CASE("delta_y replaces a triangle by a degree-3 vertex") {
    Graph dy = delta_y(complete_graph(4), {1, 2, 3});
    CHECK(dy.n == 5);
    CHECK(dy.edges.size() == 6); // edge count preserved
    CHECK(dy.degree(5) == 3);
    CHECK(isomorphic(dy, k23()));

    Graph star = delta_y(cycle(3), {1, 2, 3});
    CHECK(star.edges == std::set<std::pair<int, int>>{{1, 4}, {2, 4}, {3, 4}});

    CHECK_THROWS_AS(delta_y(path(4), {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("y_delta inverts delta_y") {
    Graph k4 = complete_graph(4);
    Graph back = y_delta(delta_y(k4, {1, 2, 3}), 5);
    CHECK(back.n == 4);
    CHECK(back.edges == k4.edges);

    Graph c3 = y_delta(make_graph(4, {{1, 4}, {2, 4}, {3, 4}}), 4);
    CHECK(c3.edges == cycle(3).edges);

    CHECK_THROWS_AS(y_delta(complete_graph(5), 1), std::invalid_argument); // degree 4
}

TEST_CASE("delta_y preserves vertex and edge count invariants on random graphs") {
    accept::Rng rng(17u);
    int tested = 0;
    while (tested < 20) {
        Graph g = accept::graph_from_mask(6, rng.next() & ((1ULL << 15) - 1));
        std::array<int, 3> tri{0, 0, 0};
        bool found = false;
        for (int a = 1; a <= 6 && !found; ++a)
            for (int b = a + 1; b <= 6 && !found; ++b)
                for (int c = b + 1; c <= 6 && !found; ++c)
                    if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c)) {
                        tri = {a, b, c};
                        found = true;
                    }
        if (!found) continue;
        Graph dy = delta_y(g, tri);
        CHECK(dy.n == g.n + 1);
        CHECK(dy.edges.size() == g.edges.size());
        ++tested;
    }
}

TEST_CASE("greedy maximal matching in lexicographic order") {
    auto m7 = maximal_matching(complete_graph(7));
    CHECK(m7 == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {5, 6}});
    auto m4 = maximal_matching(complete_graph(4));
    CHECK(m4 == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
}

TEST_CASE("complete graph minus a maximal matching stays connected") {
    for (int p : {3, 5}) {
        Graph g = complete_graph(3 * p - 2);
        Graph reduced = delete_edges(g, maximal_matching(g));
        CHECK(is_connected(reduced));
    }
    CHECK_FALSE(is_connected(make_graph(4, {{1, 2}, {3, 4}})));
    CHECK(is_connected(make_graph(1, {})));
}

TEST_CASE("minor detection on the named small graphs") {
    CHECK(has_minor(complete_graph(4), MinorPattern::K4));
    CHECK_FALSE(has_minor(cycle(5), MinorPattern::K4));
    CHECK_FALSE(has_minor(k23(), MinorPattern::K4));
    CHECK(has_minor(k23(), MinorPattern::K23));
    CHECK_FALSE(has_minor(cycle(5), MinorPattern::K23));
    CHECK(has_minor(complete_graph(5), MinorPattern::K23));
}

TEST_CASE("outerplanarity by apex planarity") {
    for (int n : {3, 4, 5, 6, 7}) CHECK(is_outerplanar(cycle(n)));
    CHECK_FALSE(is_outerplanar(complete_graph(4)));
    CHECK_FALSE(is_outerplanar(k23()));
    CHECK(is_outerplanar(path(6)));
}

TEST_CASE("2-winding equals non-outerplanar equals minor characterization") {
    Graph w5 = make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 2}});
    CHECK(is_2winding(complete_graph(4)));
    CHECK(is_2winding(k23()));
    CHECK(is_2winding(w5));
    CHECK_FALSE(is_2winding(path(5)));
    CHECK_FALSE(is_2winding(cycle(6)));

    accept::Rng rng(0xFACEull);
    for (int t = 0; t < 120; ++t) {
        Graph g = accept::graph_from_mask(6, rng.next() & ((1ULL << 15) - 1));
        CHECK(is_2winding(g) ==
              (has_minor(g, MinorPattern::K4) || has_minor(g, MinorPattern::K23)));
    }
}

TEST_CASE("a wye-delta move can destroy 2-winding-ness") {
    // K4 is 2-winding with a degree-3 vertex; collapsing it yields the
    // outerplanar triangle
    Graph k4 = complete_graph(4);
    REQUIRE(is_2winding(k4));
    REQUIRE(k4.degree(4) == 3);
    Graph collapsed = y_delta(k4, 4);
    CHECK(is_outerplanar(collapsed));
    CHECK_FALSE(is_2winding(collapsed));
}

TEST_CASE("delta-wye moves preserve 2-winding-ness on sample graphs") {
    std::vector<Graph> winding = {complete_graph(4), complete_graph(5),
                                  make_graph(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                                 {3, 4}, {4, 5}, {5, 2}})};
    for (const Graph& g : winding) {
        REQUIRE(is_2winding(g));
        for (int a = 1; a <= g.n; ++a)
            for (int b = a + 1; b <= g.n; ++b)
                for (int c = b + 1; c <= g.n; ++c)
                    if (g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c))
                        CHECK(is_2winding(delta_y(g, {a, b, c})));
    }
}
