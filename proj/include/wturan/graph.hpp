#ifndef WTURAN_GRAPH_HPP
#define WTURAN_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace wturan {

/// Undirected simple graph on at most 64 vertices, one 64-bit neighbor mask
/// per vertex. Values are immutable after construction; edge edits return a
/// new graph, which keeps sharing across threads trivially safe.
class SimpleGraph {
public:
    static constexpr int kMaxVertices = 64;

    SimpleGraph() = default; // no vertices
    explicit SimpleGraph(int n);
    static SimpleGraph from_edges(int n, std::span<const std::pair<int, int>> edges);
    static SimpleGraph complete(int n);

    SimpleGraph with_edge(int u, int v) const;
    SimpleGraph without_edge(int u, int v) const;

    int vertex_count() const { return n_; }
    bool adjacent(int u, int v) const;
    std::uint64_t neighbors(int v) const;
    int degree(int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const; // sorted, u < v

    /// Mask with the low n bits set.
    std::uint64_t full_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    bool operator==(const SimpleGraph&) const = default;

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

inline int popcount64(std::uint64_t m) { return std::popcount(m); }
inline int lowest_bit(std::uint64_t m) { return std::countr_zero(m); }

/// Number of neighbors of v inside the vertex subset `mask`.
inline int degree_in(const SimpleGraph& g, int v, std::uint64_t mask) {
    return popcount64(g.neighbors(v) & mask);
}

} // namespace wturan

#endif
