#include <doctest.h>

#include <algorithm>

#include "testutil.hpp"
#include "wturan/detect.hpp"
#include "wturan/errors.hpp"
#include "wturan/extremal.hpp"
#include "wturan/io.hpp"
#include "wturan/stability.hpp"

using namespace wturan;
using wtest::Rng;

namespace {

WeightVector weights_of(std::initializer_list<long> values) {
    std::vector<Rational> w;
    for (long v : values) w.emplace_back(v);
    return WeightVector(std::move(w));
}

} // namespace

TEST_CASE("weight relabel moves the heaviest weight to the highest degree") {
    // star K_{1,3}, center first
    const SimpleGraph star = SimpleGraph::from_edges(
        4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}});
    const WeightedGraph g(star, weights_of({1, 2, 3, 4}));
    const WeightedGraph relabeled = weight_relabel(g);
    CHECK(relabeled.weights[0] == Rational(4));
    CHECK(sum_edge_weight(relabeled) >= sum_edge_weight(g));
}

TEST_CASE("weight relabel keeps regular graphs at the same total") {
    const WeightedGraph c5(*named_graph("C5"), weights_of({9, 2, 5, 7, 3}));
    CHECK(sum_edge_weight(weight_relabel(c5)) == sum_edge_weight(c5));
}

TEST_CASE("relabeled path beats every other weight permutation is matched") {
    // P_3 with weights (5,1,9) on (end, middle, end): the middle must get 9
    const SimpleGraph p3 = *named_graph("P3");
    const WeightedGraph g(p3, weights_of({5, 1, 9}));
    const WeightedGraph relabeled = weight_relabel(g);
    CHECK(relabeled.weights[1] == Rational(9));
    CHECK(sum_edge_weight(relabeled) == Rational(24));

    // enumerate all six weight assignments; 24 is the maximum
    std::vector<Rational> vals{5, 1, 9};
    std::sort(vals.begin(), vals.end());
    Rational best = 0;
    do {
        const WeightedGraph h(p3, WeightVector(std::vector<Rational>(vals)));
        best = std::max(best, sum_edge_weight(h));
    } while (std::next_permutation(vals.begin(), vals.end()));
    CHECK(best == Rational(24));
}

TEST_CASE("relabel never lowers the total on random graphs") {
    Rng rng(0x5eed2001);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = rng.uniform(1, 12);
        const WeightedGraph g(wtest::random_graph(rng, n, 0.5),
                              wtest::random_rational_weights(rng, n));
        CHECK(sum_edge_weight(weight_relabel(g)) >= sum_edge_weight(g));
    }
}

TEST_CASE("peel of a complete bipartite graph removes nothing") {
    std::vector<std::pair<int, int>> e24;
    for (int u : {0, 1})
        for (int v : {2, 3, 4, 5}) e24.emplace_back(u, v);
    const WeightedGraph k24(SimpleGraph::from_edges(6, e24), WeightVector::unit(6));
    const PeelResult peel = greedy_peel(k24, 2);
    CHECK(peel.blocks.size() == 2);
    CHECK(peel.removed_edges.empty());
    CHECK(peel.removed_weight == Rational(0));
}

TEST_CASE("peel of the unit-weight 5-cycle is tight") {
    const WeightedGraph c5(*named_graph("C5"), WeightVector::unit(5));
    const PeelResult peel = greedy_peel(c5, 2);
    CHECK(peel.deficit == Rational(2));
    CHECK(peel.removed_weight == Rational(2));
    REQUIRE(peel.blocks.size() == 2);
    CHECK(peel.blocks[0] == std::vector<int>{0, 2, 3});
    CHECK(peel.blocks[1] == std::vector<int>{1, 4});
    CHECK(peel.pivots == std::vector<int>{0, 1});
    REQUIRE(peel.removed_edges.size() == 1);
    CHECK(peel.removed_edges[0] == std::pair<int, int>{2, 3});
}

TEST_CASE("peel handles the empty graph") {
    const WeightedGraph empty(SimpleGraph(4), weights_of({4, 3, 2, 1}));
    const PeelResult peel = greedy_peel(empty, 2);
    CHECK(peel.blocks.size() == 1);
    CHECK(peel.blocks[0] == std::vector<int>{0, 1, 2, 3});
    CHECK(peel.removed_weight == Rational(0));
    CHECK(peel.removed_weight <= peel.deficit);
}

TEST_CASE("peel refuses graphs that contain the clique") {
    const WeightedGraph k3(SimpleGraph::complete(3), WeightVector::unit(3));
    CHECK_THROWS_AS(greedy_peel(k3, 2), CliquePresentError);
    CHECK_THROWS_AS(verify_stability(k3, 2), CliquePresentError);
}

TEST_CASE("peel structure invariants on random clique-free graphs") {
    Rng rng(0x5eed2002);
    for (int trial = 0; trial < 150; ++trial) {
        const int l = rng.uniform(2, 3);
        const int n = rng.uniform(2, 14);
        const SimpleGraph g = wtest::random_multipartite_subgraph(rng, n, l, 0.35);
        const WeightVector w = trial % 4 == 0 ? WeightVector::unit(n)
                                              : wtest::random_int_weights(rng, n, 40);
        const PeelResult peel = greedy_peel(WeightedGraph(g, w), l);

        CHECK(static_cast<int>(peel.blocks.size()) <= l);
        CHECK(peel.removed_weight <= peel.deficit);

        // blocks partition the vertex set
        std::vector<int> all;
        for (const auto& block : peel.blocks) all.insert(all.end(), block.begin(), block.end());
        std::sort(all.begin(), all.end());
        std::vector<int> expect(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) expect[static_cast<std::size_t>(v)] = v;
        CHECK(all == expect);

        // each pivot sits in its own block with no neighbor inside it after removal
        REQUIRE(peel.blocks.size() == peel.pivots.size());
        for (std::size_t i = 0; i < peel.pivots.size(); ++i)
            CHECK(std::find(peel.blocks[i].begin(), peel.blocks[i].end(), peel.pivots[i]) !=
                  peel.blocks[i].end());

        // removing the reported edges leaves nothing inside any block
        SimpleGraph stripped = g;
        for (auto [u, v] : peel.removed_edges) stripped = stripped.without_edge(u, v);
        for (const auto& block : peel.blocks)
            for (std::size_t a = 0; a < block.size(); ++a)
                for (std::size_t b = a + 1; b < block.size(); ++b)
                    CHECK_FALSE(stripped.adjacent(block[a], block[b]));
    }
}

TEST_CASE("peel is deterministic") {
    Rng rng(0x5eed2003);
    const SimpleGraph g = wtest::random_multipartite_subgraph(rng, 10, 2, 0.3);
    const WeightVector w = wtest::random_int_weights(rng, 10, 25);
    const PeelResult first = greedy_peel(WeightedGraph(g, w), 2);
    const PeelResult second = greedy_peel(WeightedGraph(g, w), 2);
    CHECK(first.blocks == second.blocks);
    CHECK(first.pivots == second.pivots);
    CHECK(first.removed_edges == second.removed_edges);
    CHECK(first.removed_weight == second.removed_weight);
    CHECK(first.deficit == second.deficit);
}

TEST_CASE("verify_stability passes on random triangle-free graphs") {
    Rng rng(0x5eed2004);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = rng.uniform(2, 12);
        const SimpleGraph g = wtest::random_multipartite_subgraph(rng, n, 2, 0.3);
        const StabilityReport report = verify_stability(WeightedGraph(g, WeightVector::unit(n)), 2);
        CHECK(report.pass);
    }
}

TEST_CASE("verify_stability on an extremal witness sees zero deficit") {
    const WeightVector w = weights_of({41, 33, 29, 13, 11, 7});
    const ExtremalResult extremal = optimal_sum_partition(w, 2);
    const StabilityReport report = verify_stability(extremal.graph, 2);
    CHECK(report.pass);
    CHECK(report.peel.deficit == Rational(0));
    CHECK(report.peel.removed_weight == Rational(0));

    const WeightedGraph c5(*named_graph("C5"), WeightVector::unit(5));
    const StabilityReport tight = verify_stability(c5, 2);
    CHECK(tight.pass);
    CHECK(tight.peel.removed_weight == tight.peel.deficit);
}
