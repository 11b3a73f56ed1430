#ifndef WTURAN_WEIGHTS_HPP
#define WTURAN_WEIGHTS_HPP

#include <cstdint>
#include <vector>

#include "wturan/rational.hpp"

namespace wturan {

/// Non-negative rational weight per vertex. Entries are kept in lowest terms
/// with positive denominators (the rational type normalizes on construction).
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<Rational> weights);

    static WeightVector unit(int n);

    int size() const { return static_cast<int>(weights_.size()); }
    bool empty() const { return weights_.empty(); }
    const Rational& operator[](int i) const { return weights_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& values() const { return weights_; }
    Rational total() const;

    auto begin() const { return weights_.begin(); }
    auto end() const { return weights_.end(); }

    bool operator==(const WeightVector&) const = default;

private:
    std::vector<Rational> weights_;
};

/// Weights rescaled to exact integers by the common denominator. The fast
/// search paths run on the int64 view when every entry fits below 2^31;
/// otherwise callers fall back to bignum arithmetic on `scaled`.
struct ScaledWeights {
    Int denom = 1;                   // positive lcm of all denominators
    std::vector<Int> scaled;         // weight[i] * denom, exact
    bool fits64 = false;
    std::vector<std::int64_t> small; // valid iff fits64
};

ScaledWeights scale_weights(const WeightVector& w);

} // namespace wturan

#endif
