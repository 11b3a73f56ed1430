#ifndef WTURAN_WEIGHTED_GRAPH_HPP
#define WTURAN_WEIGHTED_GRAPH_HPP

#include "wturan/graph.hpp"
#include "wturan/weights.hpp"

namespace wturan {

/// A graph paired with a weight vector of matching length.
struct WeightedGraph {
    WeightedGraph(SimpleGraph g, WeightVector w);

    SimpleGraph graph;
    WeightVector weights;

    bool operator==(const WeightedGraph&) const = default;
};

/// Total weight when each edge uv carries w(u)+w(v).
Rational sum_edge_weight(const WeightedGraph& g);

/// Total weight when each edge uv carries w(u)*w(v).
Rational product_edge_weight(const WeightedGraph& g);

} // namespace wturan

#endif
