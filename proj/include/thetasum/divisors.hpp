#ifndef THETASUM_DIVISORS_HPP
#define THETASUM_DIVISORS_HPP

#include "thetasum/rational.hpp"

#include <cstdint>
#include <vector>

namespace thetasum {

/// Complete ascending divisor list of n, by trial division up to sqrt(n).
struct DivisorSet {
    std::uint64_t n;
    std::vector<std::uint64_t> divisors;
};

/// Throws std::invalid_argument for n = 0.
DivisorSet divisors(std::uint64_t n);

/// sum of 1/d over the odd divisors d of n.
Rational odd_divisor_inverse_sum(std::uint64_t n);

/// sum over d | n of (1 - (-1)^d) / d. Even divisors contribute nothing.
Rational mixed_divisor_sum(std::uint64_t n);

} // namespace thetasum

#endif
