#ifndef WTURAN_STABILITY_HPP
#define WTURAN_STABILITY_HPP

#include <utility>
#include <vector>

#include "wturan/weighted_graph.hpp"

namespace wturan {

/// Outcome of the greedy peel: blocks V_1..V_p with their pivots, the
/// intra-block edges whose removal makes the graph p-partite, and the two
/// sides of the removed-weight guarantee.
struct PeelResult {
    std::vector<std::vector<int>> blocks;
    std::vector<int> pivots;
    std::vector<std::pair<int, int>> removed_edges;
    Rational removed_weight; // sum-edge-weight of removed_edges
    Rational deficit;        // extremal value minus the relabeled graph's weight
    WeightedGraph relabeled; // input graph with the permuted weight assignment
};

/// Permutes the weight assignment (the graph is untouched) so that vertices in
/// descending degree order receive weights in descending order. Never
/// decreases the total sum-edge-weight.
WeightedGraph weight_relabel(const WeightedGraph& g);

/// Greedy peel of a K_{l+1}-free graph: step i picks the vertex of maximum
/// residual degree (smallest index on ties) and splits off its residual
/// non-neighborhood as block V_i. Removing the intra-block edges leaves a
/// p-partite graph with p <= l, and their total weight is at most the deficit.
/// Throws CliquePresentError when the input contains K_{l+1}.
PeelResult greedy_peel(const WeightedGraph& g, int l);

struct StabilityReport {
    PeelResult peel;
    int l = 0;
    Rational extremal_value; // ex(n, w+, K_{l+1})
    Rational graph_weight;   // sum-edge-weight of the relabeled graph
    bool pass = false;       // removed_weight <= deficit, recomputed independently
};

/// Runs the peel and recomputes both sides of the guarantee from scratch.
StabilityReport verify_stability(const WeightedGraph& g, int l);

} // namespace wturan

#endif
