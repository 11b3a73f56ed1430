#include "wturan/stability.hpp"

#include <algorithm>
#include <string>

#include "wturan/detect.hpp"
#include "wturan/errors.hpp"
#include "wturan/extremal.hpp"

namespace wturan {

WeightedGraph weight_relabel(const WeightedGraph& g) {
    const int n = g.graph.vertex_count();
    std::vector<int> by_degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) by_degree[static_cast<std::size_t>(v)] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return g.graph.degree(a) > g.graph.degree(b); });

    std::vector<Rational> sorted(g.weights.begin(), g.weights.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<Rational>());

    std::vector<Rational> relabeled(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        relabeled[static_cast<std::size_t>(by_degree[static_cast<std::size_t>(i)])] =
            sorted[static_cast<std::size_t>(i)];
    return WeightedGraph(g.graph, WeightVector(std::move(relabeled)));
}

PeelResult greedy_peel(const WeightedGraph& g, int l) {
    if (l < 1) throw std::invalid_argument("l must be at least 1");
    if (contains_clique(g.graph, l + 1))
        throw CliquePresentError("input contains K" + std::to_string(l + 1) +
                                 "; the peel guarantee does not apply");

    WeightedGraph relabeled = weight_relabel(g);
    const SimpleGraph& graph = relabeled.graph;
    const WeightVector& w = relabeled.weights;

    std::vector<std::vector<int>> blocks;
    std::vector<int> pivots;
    std::vector<std::pair<int, int>> removed;
    Rational removed_weight = 0;

    std::uint64_t residual = graph.full_mask();
    while (residual) {
        int pivot = -1, best_deg = -1;
        std::uint64_t bits = residual;
        while (bits) {
            const int v = lowest_bit(bits);
            bits &= bits - 1;
            const int deg = degree_in(graph, v, residual);
            if (deg > best_deg) { // ascending scan keeps the smallest index on ties
                best_deg = deg;
                pivot = v;
            }
        }
        const std::uint64_t block = residual & ~graph.neighbors(pivot);
        pivots.push_back(pivot);

        std::vector<int> members;
        std::uint64_t rest = block;
        while (rest) {
            const int u = lowest_bit(rest);
            rest &= rest - 1;
            std::uint64_t later = graph.neighbors(u) & block;
            later >>= u; // edges inside the block, counted once
            later &= ~std::uint64_t{1};
            while (later) {
                const int v = u + lowest_bit(later);
                later &= later - 1;
                removed.emplace_back(u, v);
                removed_weight += w[u] + w[v];
            }
            members.push_back(u);
        }
        blocks.push_back(std::move(members));
        residual &= graph.neighbors(pivot); // X_{i+1} = N_{X_i}(pivot)
    }

    const Rational extremal = ex_sum(w, ForbiddenPattern::clique(l + 1)).objective_value;
    Rational deficit = extremal - sum_edge_weight(relabeled);
    return PeelResult{std::move(blocks), std::move(pivots),    std::move(removed),
                      removed_weight,    std::move(deficit),   std::move(relabeled)};
}

StabilityReport verify_stability(const WeightedGraph& g, int l) {
    PeelResult peel = greedy_peel(g, l);

    // Recompute the removed weight through the plain edge-weight evaluator on
    // the removed-edge graph, and the deficit from the extremal formula.
    const int n = g.graph.vertex_count();
    const WeightedGraph removed_only(SimpleGraph::from_edges(n, peel.removed_edges),
                                     peel.relabeled.weights);
    const Rational removed_check = sum_edge_weight(removed_only);
    const Rational extremal =
        ex_sum(peel.relabeled.weights, ForbiddenPattern::clique(l + 1)).objective_value;
    const Rational graph_weight = sum_edge_weight(peel.relabeled);
    const Rational deficit_check = extremal - graph_weight;

    StabilityReport report{std::move(peel), l, extremal, graph_weight, false};
    report.pass = removed_check == report.peel.removed_weight &&
                  deficit_check == report.peel.deficit && removed_check <= deficit_check;
    return report;
}

} // namespace wturan
