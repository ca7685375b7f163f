#include "thetasum/series.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace thetasum {

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("Series: need at least the constant coefficient");
}

Series Series::one(std::size_t order)
{
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::from_integers(std::span<const BigInt> coeffs)
{
    std::vector<Rational> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs)
        out.emplace_back(c);
    return Series(std::move(out));
}

bool Series::is_integral() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

std::vector<BigInt> Series::integer_coeffs() const
{
    std::vector<BigInt> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        if (!c.is_integer())
            throw std::domain_error("Series: coefficient " + c.to_string() + " is not an integer");
        out.push_back(c.numerator());
    }
    return out;
}

Series Series::truncated(std::size_t order) const
{
    if (order > this->order())
        throw std::invalid_argument("Series::truncated: cannot extend a truncated series");
    return Series(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

std::string Series::to_json() const
{
    nlohmann::ordered_json j;
    j["order"] = order();
    auto& arr = j["coeffs"] = nlohmann::ordered_json::array();
    for (const auto& c : coeffs_)
        arr.push_back(c.to_string());
    return j.dump();
}

Series Series::from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    auto order = j.at("order").get<std::size_t>();
    const auto& arr = j.at("coeffs");
    if (!arr.is_array() || arr.size() != order + 1)
        throw std::invalid_argument("Series::from_json: coeffs length must be order + 1");
    std::vector<Rational> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& c : arr)
        coeffs.push_back(Rational::parse(c.get<std::string>()));
    return Series(std::move(coeffs));
}

Series series_add(const Series& a, const Series& b)
{
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t m = 0; m <= n; ++m)
        out[m] = a[m] + b[m];
    return Series(std::move(out));
}

Series series_sub(const Series& a, const Series& b)
{
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t m = 0; m <= n; ++m)
        out[m] = a[m] - b[m];
    return Series(std::move(out));
}

Series series_scale(const Series& a, const Rational& c)
{
    std::vector<Rational> out(a.coeffs());
    for (auto& x : out)
        x *= c;
    return Series(std::move(out));
}

namespace detail {

std::vector<BigInt> int_convolve(std::span<const BigInt> a, std::span<const BigInt> b,
                                 std::size_t out_len)
{
    auto nonzeros = [](std::span<const BigInt> s) {
        return std::count_if(s.begin(), s.end(), [](const BigInt& x) { return x != 0; });
    };
    if (nonzeros(a) < nonzeros(b))
        std::swap(a, b);
    // b is now the sparser side

    std::vector<BigInt> out(out_len);
    for (std::size_t j = 0; j < b.size() && j < out_len; ++j) {
        const BigInt& bj = b[j];
        if (bj == 0)
            continue;
        std::size_t limit = std::min(a.size(), out_len - j);
        mpz_srcptr bp = bj.get_mpz_t();
        if (bj == 1) {
            for (std::size_t i = 0; i < limit; ++i)
                mpz_add(out[i + j].get_mpz_t(), out[i + j].get_mpz_t(), a[i].get_mpz_t());
        } else if (bj == -1) {
            for (std::size_t i = 0; i < limit; ++i)
                mpz_sub(out[i + j].get_mpz_t(), out[i + j].get_mpz_t(), a[i].get_mpz_t());
        } else {
            for (std::size_t i = 0; i < limit; ++i)
                mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), bp);
        }
    }
    return out;
}

std::vector<BigInt> int_pow(std::span<const BigInt> a, unsigned long r)
{
    std::size_t len = a.size();
    std::vector<BigInt> result(len);
    result[0] = 1;
    std::vector<BigInt> base(a.begin(), a.end());
    while (r > 0) {
        if (r & 1)
            result = int_convolve(result, base, len);
        r >>= 1;
        if (r > 0)
            base = int_convolve(base, base, len);
    }
    return result;
}

std::vector<BigInt> theta_sum_coeffs(std::size_t N)
{
    std::vector<BigInt> c(N + 1);
    c[0] = 1;
    for (std::size_t k = 1; k * k <= N; ++k)
        c[k * k] = (k % 2 == 0) ? 2 : -2;
    return c;
}

} // namespace detail

namespace {

Series rational_mul(const Series& a, const Series& b)
{
    std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> out(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (!b[j].is_zero())
                out[i + j] += a[i] * b[j];
        }
    }
    return Series(std::move(out));
}

} // namespace

Series series_mul(const Series& a, const Series& b)
{
    if (a.is_integral() && b.is_integral()) {
        auto ai = a.integer_coeffs();
        auto bi = b.integer_coeffs();
        std::size_t n = std::min(a.order(), b.order());
        return Series::from_integers(detail::int_convolve(ai, bi, n + 1));
    }
    return rational_mul(a, b);
}

Series series_pow(const Series& a, unsigned long r)
{
    if (a.is_integral())
        return Series::from_integers(detail::int_pow(a.integer_coeffs(), r));
    Series result = Series::one(a.order());
    Series base = a;
    while (r > 0) {
        if (r & 1)
            result = series_mul(result, base);
        r >>= 1;
        if (r > 0)
            base = series_mul(base, base);
    }
    return result;
}

Series series_log(const Series& a)
{
    if (a[0] != Rational(1))
        throw std::domain_error("series_log: constant term must be 1, got " + a[0].to_string());
    std::size_t N = a.order();
    std::vector<Rational> L(N + 1);
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc = Rational(static_cast<long>(n)) * a[n];
        for (std::size_t m = 1; m < n; ++m) {
            const Rational& tail = a[n - m];
            if (tail.is_zero() || L[m].is_zero())
                continue;
            acc -= Rational(static_cast<long>(m)) * L[m] * tail;
        }
        L[n] = acc / Rational(static_cast<long>(n));
    }
    return Series(std::move(L));
}

Series theta_sum(std::size_t N) { return Series::from_integers(detail::theta_sum_coeffs(N)); }

Series theta_product(std::size_t N)
{
    std::vector<BigInt> acc(N + 1);
    acc[0] = 1;
    std::vector<BigInt> numer(N + 1), recip(N + 1);
    for (std::size_t j = 1; j <= N; ++j) {
        // 1 - q^j
        std::fill(numer.begin(), numer.end(), 0);
        numer[0] = 1;
        numer[j] = -1;
        // (1 + q^j)^{-1} = sum_m (-1)^m q^{jm}
        std::fill(recip.begin(), recip.end(), 0);
        long sign = 1;
        for (std::size_t m = 0; m <= N; m += j, sign = -sign)
            recip[m] = sign;
        acc = detail::int_convolve(acc, numer, N + 1);
        acc = detail::int_convolve(acc, recip, N + 1);
    }
    return Series::from_integers(acc);
}

} // namespace thetasum
