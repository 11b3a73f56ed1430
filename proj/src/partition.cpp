#include "wturan/partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wturan {

Partition::Partition(int n, std::vector<std::vector<int>> blocks, int block_count_cap)
    : n_(n), cap_(block_count_cap) {
    if (n < 0 || n > 64) throw std::invalid_argument("partition vertex count out of range");
    std::uint64_t seen = 0;
    for (auto& block : blocks) {
        if (block.empty()) continue;
        std::sort(block.begin(), block.end());
        for (int v : block) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("partition vertex " + std::to_string(v) +
                                            " out of range");
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (seen & bit)
                throw std::invalid_argument("partition blocks overlap at vertex " +
                                            std::to_string(v));
            seen |= bit;
        }
        blocks_.push_back(std::move(block));
    }
    const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    if (seen != full) throw std::invalid_argument("partition does not cover every vertex");
    if (cap_ < static_cast<int>(blocks_.size()))
        throw std::invalid_argument("partition has more non-empty blocks than its cap");
}

std::uint64_t Partition::block_mask(std::size_t b) const {
    std::uint64_t mask = 0;
    for (int v : blocks_.at(b)) mask |= std::uint64_t{1} << v;
    return mask;
}

Rational block_weight(const Partition& p, std::size_t b, const WeightVector& w) {
    Rational sum = 0;
    for (int v : p.blocks().at(b)) sum += w[v];
    return sum;
}

} // namespace wturan
