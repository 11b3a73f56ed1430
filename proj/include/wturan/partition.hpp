#ifndef WTURAN_PARTITION_HPP
#define WTURAN_PARTITION_HPP

#include <cstdint>
#include <vector>

#include "wturan/rational.hpp"
#include "wturan/weights.hpp"

namespace wturan {

/// Ordered list of disjoint vertex blocks covering {0..n-1}. Empty blocks are
/// accepted and canonically dropped; members are stored sorted ascending while
/// block order is preserved as given.
class Partition {
public:
    Partition(int n, std::vector<std::vector<int>> blocks, int block_count_cap);

    int vertex_count() const { return n_; }
    int block_count_cap() const { return cap_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    std::uint64_t block_mask(std::size_t b) const;

    bool operator==(const Partition&) const = default;

private:
    int n_ = 0;
    int cap_ = 0;
    std::vector<std::vector<int>> blocks_;
};

/// Sum of the weights of one block.
Rational block_weight(const Partition& p, std::size_t b, const WeightVector& w);

} // namespace wturan

#endif
