#include "thetasum/bell.hpp"

#include "thetasum/series.hpp"

#include <stdexcept>
#include <string>

namespace thetasum {

BigInt binomial(unsigned long n, unsigned long r)
{
    BigInt out;
    if (r > n)
        return out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

BigInt factorial(unsigned long n)
{
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

CombTable::CombTable(std::size_t N) : order_(N), fact_(N + 1), pascal_(N + 1)
{
    fact_[0] = 1;
    for (std::size_t i = 1; i <= N; ++i)
        fact_[i] = fact_[i - 1] * static_cast<unsigned long>(i);
    for (std::size_t n = 0; n <= N; ++n) {
        auto& row = pascal_[n];
        row.resize(n + 1);
        row[0] = row[n] = 1;
        for (std::size_t r = 1; r < n; ++r)
            row[r] = pascal_[n - 1][r - 1] + pascal_[n - 1][r];
    }
}

BigInt CombTable::factorial(std::size_t n) const
{
    return n <= order_ ? fact_[n] : thetasum::factorial(n);
}

BigInt CombTable::binomial(std::size_t n, std::size_t r) const
{
    if (r > n)
        return 0;
    return n <= order_ ? pascal_[n][r] : thetasum::binomial(n, r);
}

void ArgSeq::require_for(std::size_t n, std::size_t k) const
{
    if (k >= 1 && n >= k && values_.size() < n - k + 1)
        throw std::invalid_argument("B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " +
                                    std::to_string(n - k + 1) + " arguments, got " +
                                    std::to_string(values_.size()));
}

ThetaDerivs::ThetaDerivs(std::size_t N, std::vector<BigInt> values) : values_(std::move(values))
{
    if (N == 0 || values_.size() != N)
        throw std::invalid_argument("ThetaDerivs: expected N >= 1 values");
}

ArgSeq ThetaDerivs::as_args() const
{
    std::vector<Rational> xs;
    xs.reserve(values_.size());
    for (const auto& v : values_)
        xs.emplace_back(v);
    return ArgSeq(std::move(xs));
}

ThetaDerivs theta_derivs(std::size_t N)
{
    if (N == 0)
        throw std::invalid_argument("theta_derivs: N must be positive");
    auto coeffs = detail::theta_sum_coeffs(N);
    std::vector<BigInt> values(N);
    BigInt fact = 1;
    for (std::size_t j = 1; j <= N; ++j) {
        fact *= static_cast<unsigned long>(j);
        values[j - 1] = fact * coeffs[j];
    }
    return ThetaDerivs(N, std::move(values));
}

BellEvaluator::BellEvaluator(ArgSeq xs, std::shared_ptr<const CombTable> comb)
    : xs_(std::move(xs)), comb_(std::move(comb))
{
    if (!comb_)
        comb_ = std::make_shared<const CombTable>(xs_.size() + 1);
}

const Rational& BellEvaluator::operator()(std::size_t n, std::size_t k)
{
    if (k > n)
        return zero_;
    xs_.require_for(n, k);
    if (memo_.size() <= n) {
        std::size_t old = memo_.size();
        memo_.resize(n + 1);
        for (std::size_t m = old; m <= n; ++m)
            memo_[m].resize(m + 1);
    }
    return compute(n, k);
}

const Rational& BellEvaluator::compute(std::size_t n, std::size_t k)
{
    if (k > n)
        return zero_;
    auto& slot = memo_[n][k];
    if (slot)
        return *slot;
    Rational value;
    if (n == 0 && k == 0) {
        value = 1;
    } else if (k == 0 || n == 0) {
        value = 0;
    } else {
        for (std::size_t i = 1; i <= n - k + 1; ++i) {
            const Rational& xi = xs_.x(i);
            if (xi.is_zero())
                continue;
            const Rational& tail = compute(n - i, k - 1);
            if (tail.is_zero())
                continue;
            value += Rational(comb_->binomial(n - 1, i - 1)) * xi * tail;
        }
    }
    slot = std::move(value);
    return *slot;
}

Rational bell_recurrence(std::size_t n, std::size_t k, const ArgSeq& xs)
{
    BellEvaluator eval(xs);
    return eval(n, k);
}

namespace {

struct PartitionWalk {
    const ArgSeq& xs;
    std::size_t max_part;
    std::vector<Rational> scaled;  // scaled[i] = x_i / i!
    Rational total;

    // Choose l_i for part sizes i, i+1, ..., max_part.
    void descend(std::size_t i, std::size_t size_left, std::size_t count_left, const Rational& weight)
    {
        if (size_left == 0 && count_left == 0) {
            total += weight;
            return;
        }
        if (i > max_part || count_left == 0 || size_left < i * count_left)
            return;
        Rational w = weight;
        BigInt l_fact = 1;
        for (std::size_t l = 0; l * i <= size_left && l <= count_left; ++l) {
            if (l > 0) {
                l_fact *= static_cast<unsigned long>(l);
                w *= scaled[i];
            }
            descend(i + 1, size_left - l * i, count_left - l, w / Rational(l_fact));
        }
    }
};

} // namespace

Rational bell_partition_sum(std::size_t n, std::size_t k, const ArgSeq& xs)
{
    if (n > kPartitionSumGuard)
        throw std::invalid_argument("bell_partition_sum: n = " + std::to_string(n) + " exceeds guard " +
                                    std::to_string(kPartitionSumGuard));
    if (k > n)
        return 0;
    if (n == 0)
        return 1;  // k == 0: the empty partition
    if (k == 0)
        return 0;
    xs.require_for(n, k);

    PartitionWalk walk{xs, n - k + 1, {}, {}};
    walk.scaled.resize(walk.max_part + 1);
    BigInt fact = 1;
    for (std::size_t i = 1; i <= walk.max_part; ++i) {
        fact *= static_cast<unsigned long>(i);
        walk.scaled[i] = xs.x(i) / Rational(fact);
    }
    walk.descend(1, n, k, Rational(factorial(n)));
    return walk.total;
}

std::vector<Rational> bell_theta_genfunc(std::size_t k, std::size_t N)
{
    if (k == 0 || k > N)
        throw std::invalid_argument("bell_theta_genfunc: need 1 <= k <= N");
    auto shifted = detail::theta_sum_coeffs(N);
    shifted[0] = 0;
    auto power = detail::int_pow(shifted, k);
    BigInt k_fact = factorial(k);
    std::vector<Rational> out(N + 1);
    BigInt n_fact = 1;
    for (std::size_t n = 1; n <= N; ++n) {
        n_fact *= static_cast<unsigned long>(n);
        out[n] = Rational(BigInt(n_fact * power[n]), k_fact);
    }
    return out;
}

Rational bell_lemma2_rhs(std::size_t n, std::size_t k, const RepTable& table)
{
    if (n == 0)
        throw std::invalid_argument("bell_lemma2_rhs: n must be positive");
    if (k == 0 || k > n || n > table.order())
        throw std::invalid_argument("bell_lemma2_rhs: need 1 <= k <= n <= table order");
    BigInt sum = 0;
    for (std::size_t r = 1; r <= k; ++r) {
        BigInt term = binomial(k, r) * table.at(r, n);
        if ((k - r) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    Rational out(BigInt(factorial(n) * sum), factorial(k));
    return n % 2 == 0 ? out : -out;
}

} // namespace thetasum
