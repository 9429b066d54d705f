#include "tvw/general_position.hpp"
#include "tvw/models.hpp"
#include "tvw/tverberg.hpp"
#include "tvw/winding_partitions.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace tvw;

namespace {

using EdgePair = std::pair<std::pair<int, int>, std::pair<int, int>>;

std::set<EdgePair> crossing_pairs(const Drawing& d) {
    std::set<EdgePair> out;
    for (const CandidatePoint& c : candidate_points(d))
        if (c.kind == CandidatePoint::Kind::crossing) out.insert({c.e1, c.e2});
    return out;
}

// Restriction of a drawing to a subgraph: drop routes of deleted edges.
Drawing without_edges(Drawing d, const std::vector<std::pair<int, int>>& gone) {
    d.graph = delete_edges(d.graph, gone);
    for (const auto& e : gone) d.routes.erase(normalized_edge(e.first, e.second));
    return d;
}

} // namespace

TEST_CASE("alternating model crossings follow the interleaving rule") {
    for (int n : {4, 5, 6, 7, 10}) {
        Drawing d = alternating_linear_model(n);
        CHECK(crossing_pairs(d) == accept::altmodel_interleaving_pairs(n));
    }
}

TEST_CASE("alternating model K4 has no crossings") {
    Drawing d = alternating_linear_model(4);
    auto cands = candidate_points(d);
    CHECK(cands.size() == 4);
    for (const CandidatePoint& c : cands) CHECK(c.kind == CandidatePoint::Kind::vertex);
}

TEST_CASE("crossing-free tree drawings have vertex candidates only") {
    Drawing d;
    d.graph = make_graph(4, {{1, 2}, {1, 3}, {1, 4}});
    d.placement = {Point2{Rat(0), Rat(0)}, Point2{Rat(2), Rat(0)}, Point2{Rat(0), Rat(2)},
                   Point2{Rat(-2), Rat(-1)}};
    for (const auto& [u, v] : d.graph.edges)
        d.routes[{u, v}] = Polyline{{d.placement[u - 1], d.placement[v - 1]}};
    auto cands = candidate_points(d);
    CHECK(cands.size() == 4);
    for (const CandidatePoint& c : cands) CHECK(c.kind == CandidatePoint::Kind::vertex);
}

TEST_CASE("candidate enumeration requires general position") {
    Drawing d;
    d.graph = make_graph(2, {});
    d.placement = {Point2{Rat(0), Rat(0)}, Point2{Rat(0), Rat(0)}};
    CHECK_THROWS_AS(candidate_points(d), NotInGeneralPosition);
}

TEST_CASE("star deletion removes a star at the right-end vertex") {
    auto [d3, n3] = star_deletion_drawing(3);
    CHECK(n3 == std::vector<std::pair<int, int>>{{1, 7}, {3, 7}});
    CHECK(d3.graph.n == 7);
    CHECK(d3.graph.edges.size() == 19);
    CHECK_FALSE(d3.graph.has_edge(1, 7));
    CHECK_FALSE(d3.graph.has_edge(3, 7));
    CHECK(validate_general_position(d3).ok());

    auto [d2, n2] = star_deletion_drawing(2);
    CHECK(n2 == std::vector<std::pair<int, int>>{{1, 4}});
    CHECK(d2.graph.edges.size() == 5);
    CHECK(count_winding_partitions(d2, 2, WindingMode::graph) == 0);
}

TEST_CASE("sierksma configurations have the advertised shape") {
    PointConfiguration c12 = sierksma_config(1, 2);
    CHECK(c12.d == 1);
    CHECK(c12.points.size() == 3);
    CHECK(check_affine_general_position(c12));

    PointConfiguration c23 = sierksma_config(2, 3);
    CHECK(c23.d == 2);
    CHECK(c23.points.size() == 7);
    CHECK(check_affine_general_position(c23));
}

TEST_CASE("no edge of K7 minus a maximal matching is deletable") {
    // Removing any further edge e admits a drawing with no 3-winding
    // partition: relabel so that e and an adjacent matching edge m form a
    // 2-edge star at the right-end vertex, draw the star-deleted model, and
    // drop the rest of M u {e}. The result draws a supergraph of the
    // relabeled K7 - M - e, so zero partitions there excludes any below.
    Graph k7 = complete_graph(7);
    auto matching = maximal_matching(k7);
    REQUIRE(matching == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}, {5, 6}});
    Graph target = delete_edges(k7, matching);

    auto canonical_star = star_deletion_drawing(3).first;
    for (const auto& e : target.edges) {
        // maximality: e touches some matching edge
        const std::pair<int, int>* m = nullptr;
        int center = 0;
        for (const auto& cand : matching) {
            if (e.first == cand.first || e.first == cand.second) { m = &cand; center = e.first; }
            if (e.second == cand.first || e.second == cand.second) { m = &cand; center = e.second; }
            if (m) break;
        }
        REQUIRE(m != nullptr);
        int u = e.first == center ? e.second : e.first;
        int w = m->first == center ? m->second : m->first;

        // relabel: center -> 7, star leaves -> {1, 3}, rest ascending
        std::map<int, int> sigma;
        sigma[center] = 7;
        sigma[u] = 1;
        sigma[w] = 3;
        int next_free = 2;
        for (int v = 1; v <= 7; ++v) {
            if (sigma.count(v)) continue;
            while (next_free == 3) ++next_free;
            sigma[v] = next_free++;
        }

        std::vector<std::pair<int, int>> extra;
        for (const auto& other : matching)
            if (&other != m)
                extra.push_back(normalized_edge(sigma[other.first], sigma[other.second]));
        Drawing witness = without_edges(canonical_star, extra);
        CHECK(count_winding_partitions(witness, 3, WindingMode::graph) == 0);
    }
}
