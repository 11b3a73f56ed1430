#include "wturan/weighted_graph.hpp"

#include <stdexcept>

namespace wturan {

WeightedGraph::WeightedGraph(SimpleGraph g, WeightVector w)
    : graph(std::move(g)), weights(std::move(w)) {
    if (weights.size() != graph.vertex_count())
        throw std::invalid_argument("weight vector length does not match vertex count");
}

Rational sum_edge_weight(const WeightedGraph& g) {
    Rational total = 0;
    for (auto [u, v] : g.graph.edges()) total += g.weights[u] + g.weights[v];
    return total;
}

Rational product_edge_weight(const WeightedGraph& g) {
    Rational total = 0;
    for (auto [u, v] : g.graph.edges()) total += g.weights[u] * g.weights[v];
    return total;
}

} // namespace wturan
