#include "wturan/detect.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "wturan/errors.hpp"

namespace wturan {

namespace {

// Looks for `need` pairwise-adjacent vertices inside `cand`.
bool clique_in(const SimpleGraph& g, std::uint64_t cand, int need) {
    if (need == 0) return true;
    if (popcount64(cand) < need) return false;
    while (cand) {
        const int v = lowest_bit(cand);
        cand &= cand - 1; // only candidates above v remain, breaking symmetry
        if (clique_in(g, cand & g.neighbors(v), need - 1)) return true;
    }
    return false;
}

struct EmbedPlan {
    std::vector<int> order;                    // pattern vertices, placement order
    std::vector<std::vector<int>> prior_nbrs;  // indices into `order` already placed
};

EmbedPlan make_embed_plan(const SimpleGraph& h) {
    const int hn = h.vertex_count();
    EmbedPlan plan;
    std::uint64_t placed = 0;
    for (int step = 0; step < hn; ++step) {
        int best = -1, best_attached = -1, best_degree = -1;
        for (int v = 0; v < hn; ++v) {
            if (placed & (std::uint64_t{1} << v)) continue;
            const int attached = popcount64(h.neighbors(v) & placed);
            const int degree = h.degree(v);
            if (attached > best_attached ||
                (attached == best_attached && degree > best_degree)) {
                best = v;
                best_attached = attached;
                best_degree = degree;
            }
        }
        plan.order.push_back(best);
        std::vector<int> nbrs;
        for (int j = 0; j < step; ++j)
            if (h.adjacent(plan.order[static_cast<std::size_t>(j)], best)) nbrs.push_back(j);
        plan.prior_nbrs.push_back(std::move(nbrs));
        placed |= std::uint64_t{1} << best;
    }
    return plan;
}

bool extend_embedding(const SimpleGraph& g, const SimpleGraph& h, const EmbedPlan& plan,
                      std::vector<int>& image, std::uint64_t used, int step) {
    const int hn = h.vertex_count();
    if (step == hn) return true;
    const int hv = plan.order[static_cast<std::size_t>(step)];

    std::uint64_t cand = g.full_mask() & ~used;
    for (int j : plan.prior_nbrs[static_cast<std::size_t>(step)])
        cand &= g.neighbors(image[static_cast<std::size_t>(j)]);

    const int hdeg = h.degree(hv);
    while (cand) {
        const int gv = lowest_bit(cand);
        cand &= cand - 1;
        if (g.degree(gv) < hdeg) continue;
        image[static_cast<std::size_t>(step)] = gv;
        if (extend_embedding(g, h, plan, image, used | (std::uint64_t{1} << gv), step + 1))
            return true;
    }
    return false;
}

} // namespace

bool contains_clique(const SimpleGraph& g, int l) {
    if (l < 2) throw std::invalid_argument("clique size must be at least 2");
    if (l > g.vertex_count()) return false;
    return clique_in(g, g.full_mask(), l);
}

bool contains_subgraph(const SimpleGraph& g, const SimpleGraph& h) {
    if (h.vertex_count() > g.vertex_count()) return false;
    if (h.edge_count() > g.edge_count()) return false;
    if (h.vertex_count() == 0) return true;
    const EmbedPlan plan = make_embed_plan(h);
    std::vector<int> image(static_cast<std::size_t>(h.vertex_count()), -1);
    return extend_embedding(g, h, plan, image, 0, 0);
}

bool contains_pattern(const SimpleGraph& g, const ForbiddenPattern& pattern) {
    if (pattern.is_clique()) return contains_clique(g, pattern.clique_size());
    return contains_subgraph(g, pattern.graph());
}

std::optional<Partition> complete_multipartite_structure(const SimpleGraph& g) {
    const int n = g.vertex_count();
    // In a complete multipartite graph two vertices share a block exactly when
    // their neighbor rows coincide, and each row is everything outside the block.
    std::vector<std::vector<int>> blocks;
    std::vector<std::uint64_t> rows;
    for (int v = 0; v < n; ++v) {
        bool placed = false;
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            if (rows[b] == g.neighbors(v)) {
                blocks[b].push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) {
            blocks.push_back({v});
            rows.push_back(g.neighbors(v));
        }
    }
    const std::uint64_t full = g.full_mask();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        std::uint64_t block_mask = 0;
        for (int v : blocks[b]) block_mask |= std::uint64_t{1} << v;
        if (rows[b] != (full & ~block_mask)) return std::nullopt;
    }
    return Partition(n, blocks, static_cast<int>(blocks.size()));
}

namespace {

bool color_with(const SimpleGraph& h, const std::vector<int>& order, int k,
                std::vector<int>& color, int step, int used) {
    if (step == h.vertex_count()) return true;
    const int v = order[static_cast<std::size_t>(step)];
    // a fresh color is interchangeable with any other fresh color, so allow
    // at most one color beyond those already used
    const int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int j = 0; j < step && ok; ++j) {
            const int u = order[static_cast<std::size_t>(j)];
            if (h.adjacent(u, v) && color[static_cast<std::size_t>(u)] == c) ok = false;
        }
        if (!ok) continue;
        color[static_cast<std::size_t>(v)] = c;
        if (color_with(h, order, k, color, step + 1, std::max(used, c + 1))) return true;
    }
    color[static_cast<std::size_t>(v)] = -1;
    return false;
}

} // namespace

int chromatic_number(const SimpleGraph& h) {
    const int n = h.vertex_count();
    if (n > 16)
        throw PatternTooLargeError("chromatic number search capped at 16 vertices, got " +
                                   std::to_string(n));
    if (n == 0) return 0;
    if (h.edge_count() == 0) return 1;

    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });

    for (int k = 2; k <= n; ++k) {
        std::vector<int> color(static_cast<std::size_t>(n), -1);
        if (color_with(h, order, k, color, 0, 0)) return k;
    }
    return n; // unreachable: n colors always suffice
}

} // namespace wturan
