#ifndef THETASUM_RATIONAL_HPP
#define THETASUM_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace thetasum {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Thin value wrapper over a GMP rational.
class Rational {
public:
    Rational() = default;
    Rational(long v) : v_(v) {}                     // NOLINT: implicit by intent
    Rational(const BigInt& v) : v_(v) {}             // NOLINT
    Rational(const BigInt& num, const BigInt& den);  // throws on den == 0
    Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    const mpq_class& raw() const { return v_; }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { Rational r; r.v_ = -v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    /// "p/q" with the denominator omitted when it is 1, e.g. "-2", "13/9".
    std::string to_string() const;

    /// Inverse of to_string. Only the canonical spelling is accepted, so
    /// "2/4", "3/1", "-0" and "+1" are all rejected.
    static Rational parse(std::string_view text);

private:
    mpq_class v_;
};

/// Exact power x^e for e >= 0.
Rational pow(const Rational& x, unsigned long e);

} // namespace thetasum

#endif
