#include "wturan/weights.hpp"

#include <stdexcept>
#include <string>

namespace wturan {

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i] < 0)
            throw std::invalid_argument("weight " + std::to_string(i + 1) + " is negative");
    }
}

WeightVector WeightVector::unit(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return WeightVector(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

Rational WeightVector::total() const {
    Rational sum = 0;
    for (const Rational& w : weights_) sum += w;
    return sum;
}

ScaledWeights scale_weights(const WeightVector& w) {
    ScaledWeights out;
    for (const Rational& r : w) out.denom = lcm(out.denom, denominator(r));
    out.scaled.reserve(static_cast<std::size_t>(w.size()));
    for (const Rational& r : w)
        out.scaled.push_back(numerator(r) * (out.denom / denominator(r)));

    const Int limit = Int(1) << 31;
    out.fits64 = true;
    for (const Int& s : out.scaled) {
        if (s >= limit) {
            out.fits64 = false;
            break;
        }
    }
    if (out.fits64) {
        out.small.reserve(out.scaled.size());
        for (const Int& s : out.scaled)
            out.small.push_back(s.convert_to<std::int64_t>());
    }
    return out;
}

} // namespace wturan
