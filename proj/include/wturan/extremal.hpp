#ifndef WTURAN_EXTREMAL_HPP
#define WTURAN_EXTREMAL_HPP

#include <vector>

#include "wturan/partition.hpp"
#include "wturan/pattern.hpp"
#include "wturan/weighted_graph.hpp"

namespace wturan {

enum class ObjectiveKind { Sum, Product };

/// Optimal partition plus its complete multipartite witness graph.
struct ExtremalResult {
    Rational objective_value;
    Partition partition;
    WeightedGraph graph;
    ObjectiveKind kind;
    // Set when the value is the chromatic leading term for a non-complete
    // pattern rather than the exact extremal number.
    bool leading_term_only = false;
};

/// Non-increasing positive block sizes summing to n, at most max_parts of
/// them, in reverse-lexicographic order: (n), (n-1,1), ...
std::vector<std::vector<int>> enumerate_size_vectors(int n, int max_parts);

/// Maximizes sum_P (n-|P|) w(P) over partitions into at most `parts`
/// non-empty blocks. Heaviest weights go to the smallest block; among value
/// ties the lexicographically smallest size vector wins. The objective equals
/// the sum-edge-weight extremal number for forbidden clique K_{parts+1}.
ExtremalResult optimal_sum_partition(const WeightVector& w, int parts);

/// Two-part special case: scans every prefix split r of the weights sorted
/// descending. Always matches optimal_sum_partition(w, 2) in value.
ExtremalResult optimal_bipartition_threshold(const WeightVector& w);

struct ProductSolveOptions {
    bool heuristic_only = false; // return the greedy seed without exact search
};

/// Maximizes sum over unordered block pairs of w(P) w(P'), equivalently
/// minimizes sum_P w(P)^2 for the fixed total. Exact branch-and-bound seeded
/// by a longest-processing-time greedy; the seed alone is returned under
/// heuristic_only (intended for n beyond ~24 where exact search may crawl).
ExtremalResult optimal_product_partition(const WeightVector& w, int parts,
                                         const ProductSolveOptions& options = {});

/// Edges exactly between distinct blocks, none inside a block.
WeightedGraph build_complete_multipartite(const Partition& p, const WeightVector& w);

/// Rebuilds a K_l-free graph into a complete (<= l-1)-partite graph on the
/// same vertices in which no vertex loses degree: repeatedly split off the
/// non-neighborhood of a maximum-degree vertex as one block and recurse into
/// its neighborhood with the clique bound lowered by one. Degree sequences
/// are preserved exactly when the input is already complete multipartite.
WeightedGraph upgrade_to_multipartite(const WeightedGraph& g, int l);

/// Erdos-Stone leading term: the optimal partition value on chi(H)-1 parts.
/// Rejects patterns with chromatic number at most 2.
ExtremalResult erdos_stone_sum_leading_term(const WeightVector& w, const SimpleGraph& h);
ExtremalResult erdos_stone_product_leading_term(const WeightVector& w, const SimpleGraph& h,
                                                const ProductSolveOptions& options = {});

/// Extremal number dispatch: exact for cliques, chromatic leading term
/// (flagged leading_term_only) for general patterns.
ExtremalResult ex_sum(const WeightVector& w, const ForbiddenPattern& pattern);
ExtremalResult ex_product(const WeightVector& w, const ForbiddenPattern& pattern,
                          const ProductSolveOptions& options = {});

} // namespace wturan

#endif
