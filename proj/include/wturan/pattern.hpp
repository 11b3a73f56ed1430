#ifndef WTURAN_PATTERN_HPP
#define WTURAN_PATTERN_HPP

#include <optional>
#include <string>

#include "wturan/graph.hpp"

namespace wturan {

/// Forbidden subgraph: either a clique K_l (handled by the exact partition
/// formulas) or an arbitrary small graph H with at least one edge.
class ForbiddenPattern {
public:
    static ForbiddenPattern clique(int size);
    static ForbiddenPattern general(SimpleGraph h);

    bool is_clique() const { return clique_size_ > 0; }
    int clique_size() const;
    const SimpleGraph& graph() const;

    /// Short label for reports, e.g. "K3" or "H(n=5,m=5)".
    std::string name() const;

private:
    ForbiddenPattern() = default;

    int clique_size_ = 0;
    std::optional<SimpleGraph> h_;
};

} // namespace wturan

#endif
