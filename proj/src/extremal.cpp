#include "wturan/extremal.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <utility>

#include "wturan/detect.hpp"
#include "wturan/errors.hpp"

namespace wturan {

namespace {

// Vertex indices sorted by weight descending, index ascending on ties.
std::vector<int> weight_order(const WeightVector& w) {
    std::vector<int> order(static_cast<std::size_t>(w.size()));
    for (int i = 0; i < w.size(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] > w[b]; });
    return order;
}

void size_vectors_rec(int remaining, int max_part, int slots, std::vector<int>& current,
                      const std::function<void(const std::vector<int>&)>& emit) {
    if (remaining == 0) {
        emit(current);
        return;
    }
    if (slots == 0) return;
    const int high = std::min(remaining, max_part);
    for (int part = high; part >= 1; --part) {
        if (static_cast<long long>(part) * slots < remaining) break; // cannot finish
        current.push_back(part);
        size_vectors_rec(remaining - part, part, slots - 1, current, emit);
        current.pop_back();
    }
}

void for_each_size_vector(int n, int max_parts,
                          const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> current;
    size_vectors_rec(n, n, max_parts, current, emit);
}

} // namespace

std::vector<std::vector<int>> enumerate_size_vectors(int n, int max_parts) {
    std::vector<std::vector<int>> out;
    for_each_size_vector(n, max_parts, [&](const std::vector<int>& s) { out.push_back(s); });
    return out;
}

WeightedGraph build_complete_multipartite(const Partition& p, const WeightVector& w) {
    const int n = p.vertex_count();
    if (w.size() != n)
        throw std::invalid_argument("weight vector length does not match partition");
    std::vector<std::pair<int, int>> edges;
    const auto& blocks = p.blocks();
    for (std::size_t a = 0; a < blocks.size(); ++a)
        for (std::size_t b = a + 1; b < blocks.size(); ++b)
            for (int u : blocks[a])
                for (int v : blocks[b]) edges.emplace_back(std::min(u, v), std::max(u, v));
    return WeightedGraph(SimpleGraph::from_edges(n, edges), w);
}

ExtremalResult optimal_sum_partition(const WeightVector& w, int parts) {
    if (parts < 1) throw std::invalid_argument("part count must be at least 1");
    const int n = w.size();
    if (n == 0) throw EmptyWeightsError("cannot partition an empty weight vector");

    const std::vector<int> order = weight_order(w);
    std::vector<Rational> prefix(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i < n; ++i)
        prefix[static_cast<std::size_t>(i) + 1] =
            prefix[static_cast<std::size_t>(i)] + w[order[static_cast<std::size_t>(i)]];

    bool have_best = false;
    Rational best_value = 0;
    std::vector<int> best_sizes;
    for_each_size_vector(n, parts, [&](const std::vector<int>& sizes) {
        // heaviest weights into the smallest block: slice the descending
        // weight order by block sizes taken ascending
        Rational value = 0;
        int start = 0;
        for (auto it = sizes.rbegin(); it != sizes.rend(); ++it) {
            const int s = *it;
            value += (prefix[static_cast<std::size_t>(start + s)] -
                      prefix[static_cast<std::size_t>(start)]) *
                     (n - s);
            start += s;
        }
        if (!have_best || value > best_value ||
            (value == best_value &&
             std::lexicographical_compare(sizes.begin(), sizes.end(), best_sizes.begin(),
                                          best_sizes.end()))) {
            have_best = true;
            best_value = value;
            best_sizes = sizes;
        }
    });
    assert(have_best);

    std::vector<std::vector<int>> blocks;
    int start = 0;
    for (auto it = best_sizes.rbegin(); it != best_sizes.rend(); ++it) {
        blocks.emplace_back(order.begin() + start, order.begin() + start + *it);
        start += *it;
    }
    Partition partition(n, std::move(blocks), parts);
    WeightedGraph witness = build_complete_multipartite(partition, w);
    return ExtremalResult{best_value, std::move(partition), std::move(witness),
                          ObjectiveKind::Sum, false};
}

ExtremalResult optimal_bipartition_threshold(const WeightVector& w) {
    const int n = w.size();
    if (n < 2) throw EmptyWeightsError("threshold scan needs at least two vertices");

    const std::vector<int> order = weight_order(w);
    std::vector<Rational> prefix(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 0; i < n; ++i)
        prefix[static_cast<std::size_t>(i) + 1] =
            prefix[static_cast<std::size_t>(i)] + w[order[static_cast<std::size_t>(i)]];
    const Rational total = prefix[static_cast<std::size_t>(n)];

    int best_r = 1;
    Rational best_value = -1;
    for (int r = 1; r < n; ++r) {
        const Rational left = prefix[static_cast<std::size_t>(r)];
        const Rational value = left * (n - r) + (total - left) * r;
        if (value > best_value) {
            best_value = value;
            best_r = r;
        }
    }

    std::vector<std::vector<int>> blocks;
    blocks.emplace_back(order.begin(), order.begin() + best_r);
    blocks.emplace_back(order.begin() + best_r, order.end());
    Partition partition(n, std::move(blocks), 2);
    WeightedGraph witness = build_complete_multipartite(partition, w);
    return ExtremalResult{best_value, std::move(partition), std::move(witness),
                          ObjectiveKind::Sum, false};
}

namespace {

// Branch-and-bound minimizer of sum of squared block sums. S holds block
// sums, Q holds squares; (int64, int128) when the scaled weights are small,
// (bignum, bignum) otherwise.
template <class S, class Q>
class SquareMinimizer {
public:
    SquareMinimizer(std::vector<S> values, int blocks)
        : vals_(std::move(values)), n_(static_cast<int>(vals_.size())), k_(blocks),
          suffix_(static_cast<std::size_t>(n_) + 1, S(0)),
          sums_(static_cast<std::size_t>(k_), S(0)),
          assign_(static_cast<std::size_t>(n_), 0) {
        for (int i = n_ - 1; i >= 0; --i)
            suffix_[static_cast<std::size_t>(i)] =
                suffix_[static_cast<std::size_t>(i) + 1] + vals_[static_cast<std::size_t>(i)];
    }

    // Longest-processing-time greedy: each value to the lowest-sum block.
    std::vector<int> lpt_seed() const {
        std::vector<S> sums(static_cast<std::size_t>(k_), S(0));
        std::vector<int> assign(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            int target = 0;
            for (int b = 1; b < k_; ++b)
                if (sums[static_cast<std::size_t>(b)] < sums[static_cast<std::size_t>(target)])
                    target = b;
            assign[static_cast<std::size_t>(i)] = target;
            sums[static_cast<std::size_t>(target)] += vals_[static_cast<std::size_t>(i)];
        }
        return assign;
    }

    Q squares_of(const std::vector<int>& assign) const {
        std::vector<S> sums(static_cast<std::size_t>(k_), S(0));
        for (int i = 0; i < n_; ++i)
            sums[static_cast<std::size_t>(assign[static_cast<std::size_t>(i)])] +=
                vals_[static_cast<std::size_t>(i)];
        Q total(0);
        for (const S& s : sums) total += Q(s) * Q(s);
        return total;
    }

    std::vector<int> solve(std::vector<int> seed, bool exact) {
        best_assign_ = std::move(seed);
        best_sq_ = squares_of(best_assign_);
        if (exact && n_ > 0 && k_ > 1) descend(0);
        return best_assign_;
    }

private:
    void descend(int depth) {
        if (depth == n_) {
            Q total(0);
            for (const S& s : sums_) total += Q(s) * Q(s);
            if (total < best_sq_) {
                best_sq_ = total;
                best_assign_ = assign_;
            }
            return;
        }
        if (bound_prunes(depth)) return;
        for (int b = 0; b < k_; ++b) {
            // blocks with equal sums lead to identical completions; keep the first
            bool duplicate = false;
            for (int prior = 0; prior < b && !duplicate; ++prior)
                duplicate = sums_[static_cast<std::size_t>(prior)] ==
                            sums_[static_cast<std::size_t>(b)];
            if (duplicate) continue;
            sums_[static_cast<std::size_t>(b)] += vals_[static_cast<std::size_t>(depth)];
            assign_[static_cast<std::size_t>(depth)] = b;
            descend(depth + 1);
            sums_[static_cast<std::size_t>(b)] -= vals_[static_cast<std::size_t>(depth)];
        }
    }

    // Water-filling relaxation: spread the remaining total over the lowest
    // blocks as if values were divisible. Valid lower bound on the final
    // sum of squares; prune when it cannot beat the incumbent.
    bool bound_prunes(int depth) {
        const S remaining = suffix_[static_cast<std::size_t>(depth)];
        scratch_ = sums_;
        std::sort(scratch_.begin(), scratch_.end());
        S running(0);
        for (int m = 1; m <= k_; ++m) {
            running += scratch_[static_cast<std::size_t>(m - 1)];
            const S level_num = running + remaining; // level = level_num / m
            if (m < k_ && level_num > scratch_[static_cast<std::size_t>(m)] * m) continue;
            Q rest(0);
            for (int i = m; i < k_; ++i)
                rest += Q(scratch_[static_cast<std::size_t>(i)]) *
                        Q(scratch_[static_cast<std::size_t>(i)]);
            // bound = level_num^2 / m + rest; compare scaled by m
            return Q(level_num) * Q(level_num) + Q(m) * rest >= Q(m) * best_sq_;
        }
        return false;
    }

    std::vector<S> vals_;
    int n_;
    int k_;
    std::vector<S> suffix_;
    std::vector<S> sums_;
    std::vector<int> assign_;
    std::vector<int> best_assign_;
    std::vector<S> scratch_;
    Q best_sq_{};
};

template <class S, class Q>
std::vector<int> minimize_squares(std::vector<S> values, int blocks, bool exact) {
    SquareMinimizer<S, Q> solver(std::move(values), blocks);
    return solver.solve(solver.lpt_seed(), exact);
}

} // namespace

ExtremalResult optimal_product_partition(const WeightVector& w, int parts,
                                         const ProductSolveOptions& options) {
    if (parts < 1) throw std::invalid_argument("part count must be at least 1");
    const int n = w.size();
    if (n == 0) throw EmptyWeightsError("cannot partition an empty weight vector");

    const std::vector<int> order = weight_order(w);
    const int k = std::min(parts, n);
    const bool exact = !options.heuristic_only;

    const ScaledWeights scaled = scale_weights(w);
    std::vector<int> assign;
    if (scaled.fits64) {
        std::vector<long long> vals;
        vals.reserve(order.size());
        for (int idx : order) vals.push_back(scaled.small[static_cast<std::size_t>(idx)]);
        assign = minimize_squares<long long, __int128>(std::move(vals), k, exact);
    } else {
        std::vector<Int> vals;
        vals.reserve(order.size());
        for (int idx : order) vals.push_back(scaled.scaled[static_cast<std::size_t>(idx)]);
        assign = minimize_squares<Int, Int>(std::move(vals), k, exact);
    }

    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < order.size(); ++i)
        blocks[static_cast<std::size_t>(assign[i])].push_back(order[i]);

    // canonical order: heaviest block first, ties by smallest member
    std::vector<std::pair<Rational, std::vector<int>>> keyed;
    for (auto& block : blocks) {
        if (block.empty()) continue;
        std::sort(block.begin(), block.end());
        Rational sum = 0;
        for (int v : block) sum += w[v];
        keyed.emplace_back(std::move(sum), std::move(block));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second.front() < b.second.front();
    });

    Rational value = 0;
    for (std::size_t a = 0; a < keyed.size(); ++a)
        for (std::size_t b = a + 1; b < keyed.size(); ++b)
            value += keyed[a].first * keyed[b].first;

    std::vector<std::vector<int>> ordered;
    ordered.reserve(keyed.size());
    for (auto& [sum, block] : keyed) ordered.push_back(std::move(block));
    Partition partition(n, std::move(ordered), parts);
    WeightedGraph witness = build_complete_multipartite(partition, w);
    return ExtremalResult{std::move(value), std::move(partition), std::move(witness),
                          ObjectiveKind::Product, false};
}

namespace {

int pick_split_vertex(const WeightedGraph& g, std::uint64_t active) {
    int best = -1, best_deg = -1;
    std::uint64_t bits = active;
    while (bits) {
        const int v = lowest_bit(bits);
        bits &= bits - 1;
        const int deg = degree_in(g.graph, v, active);
        if (best < 0 || deg > best_deg ||
            (deg == best_deg && g.weights[v] > g.weights[best])) {
            best = v;
            best_deg = deg;
        }
    }
    return best;
}

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(lowest_bit(mask));
        mask &= mask - 1;
    }
    return out;
}

} // namespace

WeightedGraph upgrade_to_multipartite(const WeightedGraph& g, int l) {
    if (l < 3) throw std::invalid_argument("forbidden clique size must be at least 3");
    if (contains_clique(g.graph, l))
        throw CliquePresentError("input already contains K" + std::to_string(l));

    const int n = g.graph.vertex_count();
    std::vector<std::vector<int>> blocks;
    std::uint64_t active = g.graph.full_mask();
    int bound = l;
    while (active) {
        const int pivot = pick_split_vertex(g, active);
        const std::uint64_t inner = g.graph.neighbors(pivot) & active;
        if (inner == 0) {
            // residual graph is edgeless; it forms the final block unchanged
            blocks.push_back(mask_to_vertices(active));
            break;
        }
        assert(bound > 2);
        blocks.push_back(mask_to_vertices(active & ~inner));
        active = inner;
        --bound;
    }
    Partition partition(n, std::move(blocks), std::max(1, l - 1));
    return build_complete_multipartite(partition, g.weights);
}

ExtremalResult erdos_stone_sum_leading_term(const WeightVector& w, const SimpleGraph& h) {
    const int chi = chromatic_number(h);
    if (chi <= 2)
        throw BipartitePatternError(
            "pattern has chromatic number " + std::to_string(chi) +
            "; the partition leading term degenerates below chromatic number 3");
    ExtremalResult r = optimal_sum_partition(w, chi - 1);
    r.leading_term_only = true;
    return r;
}

ExtremalResult erdos_stone_product_leading_term(const WeightVector& w, const SimpleGraph& h,
                                                const ProductSolveOptions& options) {
    const int chi = chromatic_number(h);
    if (chi <= 2)
        throw BipartitePatternError(
            "pattern has chromatic number " + std::to_string(chi) +
            "; the partition leading term degenerates below chromatic number 3");
    ExtremalResult r = optimal_product_partition(w, chi - 1, options);
    r.leading_term_only = true;
    return r;
}

ExtremalResult ex_sum(const WeightVector& w, const ForbiddenPattern& pattern) {
    if (pattern.is_clique()) return optimal_sum_partition(w, pattern.clique_size() - 1);
    return erdos_stone_sum_leading_term(w, pattern.graph());
}

ExtremalResult ex_product(const WeightVector& w, const ForbiddenPattern& pattern,
                          const ProductSolveOptions& options) {
    if (pattern.is_clique())
        return optimal_product_partition(w, pattern.clique_size() - 1, options);
    return erdos_stone_product_leading_term(w, pattern.graph(), options);
}

} // namespace wturan
