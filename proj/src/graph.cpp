#include "wturan/graph.hpp"

#include <stdexcept>
#include <string>

namespace wturan {

namespace {
int checked_vertex_count(int n) {
    if (n < 0 || n > SimpleGraph::kMaxVertices)
        throw std::invalid_argument("vertex count must be in [0, 64], got " + std::to_string(n));
    return n;
}
} // namespace

SimpleGraph::SimpleGraph(int n)
    : n_(checked_vertex_count(n)), adj_(static_cast<std::size_t>(n_), 0) {}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    SimpleGraph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    return g;
}

SimpleGraph SimpleGraph::complete(int n) {
    SimpleGraph g(n);
    const std::uint64_t full = g.full_mask();
    for (int v = 0; v < n; ++v)
        g.adj_[static_cast<std::size_t>(v)] = full & ~(std::uint64_t{1} << v);
    return g;
}

SimpleGraph SimpleGraph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    SimpleGraph g(*this);
    g.adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
    g.adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    return g;
}

SimpleGraph SimpleGraph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    SimpleGraph g(*this);
    g.adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
    g.adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    return g;
}

bool SimpleGraph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

std::uint64_t SimpleGraph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int SimpleGraph::degree(int v) const { return popcount64(neighbors(v)); }

int SimpleGraph::edge_count() const {
    int total = 0;
    for (std::uint64_t row : adj_) total += popcount64(row);
    return total / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u) {
        // keep only neighbors with index above u; shift by 64 would be UB
        std::uint64_t higher =
            u + 1 >= 64 ? 0 : (adj_[static_cast<std::size_t>(u)] >> (u + 1)) << (u + 1);
        while (higher) {
            int v = lowest_bit(higher);
            higher &= higher - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range [0, " +
                                std::to_string(n_) + ")");
}

} // namespace wturan
