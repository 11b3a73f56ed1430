#include "wturan/pattern.hpp"

#include <stdexcept>

#include "wturan/errors.hpp"

namespace wturan {

ForbiddenPattern ForbiddenPattern::clique(int size) {
    if (size < 2) throw ParseError("forbidden clique size must be at least 2");
    if (size > SimpleGraph::kMaxVertices)
        throw ParseError("forbidden clique size exceeds the 64-vertex cap");
    ForbiddenPattern p;
    p.clique_size_ = size;
    return p;
}

ForbiddenPattern ForbiddenPattern::general(SimpleGraph h) {
    if (h.edge_count() == 0)
        throw ParseError("forbidden pattern must contain at least one edge");
    ForbiddenPattern p;
    p.h_ = std::move(h);
    return p;
}

int ForbiddenPattern::clique_size() const {
    if (!is_clique()) throw std::logic_error("pattern is not a clique");
    return clique_size_;
}

const SimpleGraph& ForbiddenPattern::graph() const {
    if (is_clique() || !h_) throw std::logic_error("pattern has no explicit graph");
    return *h_;
}

std::string ForbiddenPattern::name() const {
    if (is_clique()) return "K" + std::to_string(clique_size_);
    return "H(n=" + std::to_string(h_->vertex_count()) +
           ",m=" + std::to_string(h_->edge_count()) + ")";
}

} // namespace wturan
