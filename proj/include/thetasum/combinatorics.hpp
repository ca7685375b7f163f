#ifndef THETASUM_COMBINATORICS_HPP
#define THETASUM_COMBINATORICS_HPP

#include "thetasum/rational.hpp"

#include <cstddef>
#include <vector>

namespace thetasum {

/// C(n, r); zero when r > n.
BigInt binomial(unsigned long n, unsigned long r);

BigInt factorial(unsigned long n);

/// Factorials and Pascal rows 0..N, built once and then read-only, so a
/// single table may be shared by concurrent readers. Lookups past N fall
/// back to direct computation.
class CombTable {
public:
    explicit CombTable(std::size_t N);

    std::size_t order() const { return order_; }
    BigInt factorial(std::size_t n) const;
    BigInt binomial(std::size_t n, std::size_t r) const;

private:
    std::size_t order_;
    std::vector<BigInt> fact_;
    std::vector<std::vector<BigInt>> pascal_;
};

} // namespace thetasum

#endif
