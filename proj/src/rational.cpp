#include "thetasum/rational.hpp"

#include <stdexcept>

namespace thetasum {

Rational::Rational(const BigInt& num, const BigInt& den) : v_(num, den)
{
    if (den == 0)
        throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o)
{
    if (o.is_zero())
        throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::string Rational::to_string() const { return v_.get_str(10); }

namespace {

bool is_decimal(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (c < '0' || c > '9')
            return false;
    // no leading zeros except the literal "0"
    return s.size() == 1 || s.front() != '0';
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!is_decimal(num) || (slash != std::string_view::npos && !is_decimal(den)))
        throw std::invalid_argument("Rational::parse: malformed '" + std::string(text) + "'");

    BigInt n(std::string(num), 10);
    BigInt d = den.empty() ? BigInt(1) : BigInt(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("Rational::parse: zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    Rational r(n, d);
    if (r.to_string() != text)
        throw std::invalid_argument("Rational::parse: non-canonical '" + std::string(text) + "'");
    return r;
}

Rational pow(const Rational& x, unsigned long e)
{
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), x.numerator().get_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), x.denominator().get_mpz_t(), e);
    return Rational(num, den);
}

} // namespace thetasum
