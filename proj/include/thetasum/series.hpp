#ifndef THETASUM_SERIES_HPP
#define THETASUM_SERIES_HPP

#include "thetasum/rational.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace thetasum {

/// Truncated formal power series sum_{m=0}^{N} c_m q^m over exact rationals.
///
/// The truncation order N travels with the value. Binary operations on
/// series of orders N1 and N2 produce a result of order min(N1, N2).
class Series {
public:
    /// Zero series of the given order.
    explicit Series(std::size_t order) : coeffs_(order + 1) {}
    /// Takes coeffs[0..N]; throws if coeffs is empty.
    explicit Series(std::vector<Rational> coeffs);

    static Series zero(std::size_t order) { return Series(order); }
    static Series one(std::size_t order);
    static Series from_integers(std::span<const BigInt> coeffs);

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t m) const { return coeffs_[m]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_integral() const;
    /// Integer coefficients; throws std::domain_error if any is not integral.
    std::vector<BigInt> integer_coeffs() const;

    /// Same series cut down to a smaller order.
    Series truncated(std::size_t order) const;

    friend bool operator==(const Series&, const Series&) = default;

    /// {"order": N, "coeffs": ["p/q", ...]}
    std::string to_json() const;
    static Series from_json(const std::string& text);

private:
    std::vector<Rational> coeffs_;
};

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_scale(const Series& a, const Rational& c);

/// Cauchy product truncated to min(order(a), order(b)). Uses an integer
/// convolution when both operands have integral coefficients.
Series series_mul(const Series& a, const Series& b);

/// a^r truncated to order(a), by binary exponentiation; a^0 is the one-series.
Series series_pow(const Series& a, unsigned long r);

/// Formal logarithm of a series with constant term 1, from L' = a'/a:
///   n L_n = n a_n - sum_{m=1}^{n-1} m L_m a_{n-m}.
/// Throws std::domain_error when a[0] != 1.
Series series_log(const Series& a);

/// sum_{k in Z} (-1)^k q^{k^2} truncated at q^N.
Series theta_sum(std::size_t N);

/// prod_{j=1}^{N} (1 - q^j) / (1 + q^j) truncated at q^N, with each
/// reciprocal expanded as the alternating geometric series in q^j.
Series theta_product(std::size_t N);

namespace detail {

/// Truncated integer Cauchy product of length out_len; iterates over the
/// nonzero entries of the sparser operand.
std::vector<BigInt> int_convolve(std::span<const BigInt> a, std::span<const BigInt> b,
                                 std::size_t out_len);

std::vector<BigInt> int_pow(std::span<const BigInt> a, unsigned long r);

std::vector<BigInt> theta_sum_coeffs(std::size_t N);

} // namespace detail

} // namespace thetasum

#endif
