#ifndef THETASUM_BELL_HPP
#define THETASUM_BELL_HPP

#include "thetasum/combinatorics.hpp"
#include "thetasum/rational.hpp"
#include "thetasum/repcount.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

namespace thetasum {

/// Argument sequence x_1, x_2, ..., x_m for partial Bell polynomials.
/// Indexing through x() is 1-based.
class ArgSeq {
public:
    ArgSeq() = default;
    explicit ArgSeq(std::vector<Rational> values) : values_(std::move(values)) {}

    std::size_t size() const { return values_.size(); }
    const Rational& x(std::size_t i) const { return values_.at(i - 1); }
    const std::vector<Rational>& values() const { return values_; }

    /// Throws std::invalid_argument unless B_{n,k} can be evaluated, i.e.
    /// size() >= n - k + 1 whenever n >= k >= 1.
    void require_for(std::size_t n, std::size_t k) const;

private:
    std::vector<Rational> values_;
};

/// theta^{(j)}(0) for j = 1..N. Zero unless j is a perfect square.
class ThetaDerivs {
public:
    ThetaDerivs(std::size_t N, std::vector<BigInt> values);

    std::size_t order() const { return values_.size(); }
    const BigInt& at(std::size_t j) const { return values_.at(j - 1); }
    ArgSeq as_args() const;

private:
    std::vector<BigInt> values_;
};

/// values[j] = j! * [q^j] theta_sum(N). Requires N >= 1.
ThetaDerivs theta_derivs(std::size_t N);

/// Memoized evaluation of B_{n,k} for one fixed argument sequence via
///   B_{n,k} = sum_{i=1}^{n-k+1} C(n-1, i-1) x_i B_{n-i,k-1}.
/// Not thread-safe; give each thread its own evaluator.
class BellEvaluator {
public:
    explicit BellEvaluator(ArgSeq xs, std::shared_ptr<const CombTable> comb = nullptr);

    /// 0 for k > n.
    const Rational& operator()(std::size_t n, std::size_t k);

    const ArgSeq& args() const { return xs_; }

private:
    const Rational& compute(std::size_t n, std::size_t k);

    ArgSeq xs_;
    std::shared_ptr<const CombTable> comb_;
    std::vector<std::vector<std::optional<Rational>>> memo_;  // memo_[n][k]
    Rational zero_;
};

Rational bell_recurrence(std::size_t n, std::size_t k, const ArgSeq& xs);

/// Largest n accepted by bell_partition_sum.
inline constexpr std::size_t kPartitionSumGuard = 25;

/// B_{n,k} as the explicit sum over (l_1, l_2, ...) with sum i*l_i = n and
/// sum l_i = k of n! / prod(l_i!) * prod (x_i / i!)^{l_i}.
Rational bell_partition_sum(std::size_t n, std::size_t k, const ArgSeq& xs);

/// B_{n,k}(theta'(0), theta''(0), ...) for n = 0..N, read off as
/// n! [q^n] (theta(q) - 1)^k / k!. Entries with n < k are zero.
/// Requires 1 <= k <= N.
std::vector<Rational> bell_theta_genfunc(std::size_t k, std::size_t N);

/// (-1)^n (n!/k!) sum_{r=1}^{k} (-1)^{k-r} C(k,r) c_r(n).
/// Requires 1 <= k <= n <= table.order().
Rational bell_lemma2_rhs(std::size_t n, std::size_t k, const RepTable& table);

} // namespace thetasum

#endif
