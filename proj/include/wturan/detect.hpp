#ifndef WTURAN_DETECT_HPP
#define WTURAN_DETECT_HPP

#include <optional>

#include "wturan/graph.hpp"
#include "wturan/partition.hpp"
#include "wturan/pattern.hpp"

namespace wturan {

/// True iff g has l pairwise-adjacent vertices (l >= 2).
bool contains_clique(const SimpleGraph& g, int l);

/// True iff some injective vertex map carries every edge of h onto an edge of
/// g. Subgraph containment, not induced: extra edges in g never hurt.
bool contains_subgraph(const SimpleGraph& g, const SimpleGraph& h);

bool contains_pattern(const SimpleGraph& g, const ForbiddenPattern& pattern);

/// If non-adjacency is an equivalence relation on V(g), g is complete
/// multipartite; returns the partition into non-adjacency classes, ordered by
/// smallest member. Otherwise nullopt. A complete graph yields n singletons.
std::optional<Partition> complete_multipartite_structure(const SimpleGraph& g);

/// Exact chromatic number via iterative-deepening backtracking.
/// Throws PatternTooLargeError when h has more than 16 vertices.
int chromatic_number(const SimpleGraph& h);

} // namespace wturan

#endif
