#include "thetasum/divisors.hpp"

#include <algorithm>
#include <stdexcept>

namespace thetasum {

DivisorSet divisors(std::uint64_t n)
{
    if (n == 0)
        throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::uint64_t> low, high;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        low.push_back(d);
        if (d != n / d)
            high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return {n, std::move(low)};
}

Rational odd_divisor_inverse_sum(std::uint64_t n)
{
    // sum of n/d over odd d, then a single reduction by n
    BigInt numer = 0;
    for (auto d : divisors(n).divisors)
        if (d % 2 == 1)
            numer += static_cast<unsigned long>(n / d);
    return Rational(numer, BigInt(static_cast<unsigned long>(n)));
}

Rational mixed_divisor_sum(std::uint64_t n)
{
    Rational sum;
    for (auto d : divisors(n).divisors) {
        long parity = d % 2 == 0 ? 1 : -1;  // (-1)^d
        sum += Rational(1 - parity) / Rational(BigInt(static_cast<unsigned long>(d)));
    }
    return sum;
}

} // namespace thetasum
