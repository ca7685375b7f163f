#include "thetasum/repcount.hpp"

#include "thetasum/series.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace thetasum {

std::vector<BigInt> c1_row(std::size_t N)
{
    std::vector<BigInt> s(N + 1);
    s[0] = 1;
    for (std::size_t k = 1; k * k <= N; ++k)
        s[k * k] = 2;
    return s;
}

RepTable::RepTable(std::size_t N) : order_(N)
{
    if (N == 0)
        throw std::invalid_argument("rep_table: N must be positive");
    const auto base = c1_row(N);
    rows_.reserve(N);
    rows_.push_back(base);
    for (std::size_t r = 2; r <= N; ++r)
        rows_.push_back(detail::int_convolve(rows_.back(), base, N + 1));
}

RepTable::RepTable(std::size_t N, std::vector<std::vector<BigInt>> rows)
    : order_(N), rows_(std::move(rows))
{
    if (N == 0 || rows_.size() != N)
        throw std::invalid_argument("RepTable: expected N >= 1 rows");
    for (const auto& row : rows_)
        if (row.size() != N + 1)
            throw std::invalid_argument("RepTable: every row needs N + 1 entries");
}

const std::vector<BigInt>& RepTable::row(std::size_t r) const
{
    if (r < 1 || r > order_)
        throw std::out_of_range("RepTable: row " + std::to_string(r) + " outside 1.." + std::to_string(order_));
    return rows_[r - 1];
}

const BigInt& RepTable::at(std::size_t r, std::size_t n) const
{
    const auto& rw = row(r);
    if (n > order_)
        throw std::out_of_range("RepTable: n = " + std::to_string(n) + " exceeds order " + std::to_string(order_));
    return rw[n];
}

RepTable RepTable::with_entry(std::size_t r, std::size_t n, BigInt value) const
{
    (void)at(r, n);
    RepTable copy = *this;
    copy.rows_[r - 1][n] = std::move(value);
    return copy;
}

std::string RepTable::to_csv() const
{
    std::ostringstream os;
    os << "r,n,c\n";
    for (std::size_t r = 1; r <= order_; ++r)
        for (std::size_t n = 0; n <= order_; ++n)
            os << r << ',' << n << ',' << rows_[r - 1][n].get_str() << '\n';
    return os.str();
}

std::string RepTable::to_json() const
{
    nlohmann::ordered_json j;
    j["N"] = order_;
    auto& rows = j["rows"] = nlohmann::ordered_json::object();
    for (std::size_t r = 1; r <= order_; ++r) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& c : rows_[r - 1])
            arr.push_back(c.get_str());
        rows[std::to_string(r)] = std::move(arr);
    }
    return j.dump();
}

RepTable RepTable::from_json(const std::string& text)
{
    auto j = nlohmann::json::parse(text);
    auto N = j.at("N").get<std::size_t>();
    std::vector<std::vector<BigInt>> rows;
    for (std::size_t r = 1; r <= N; ++r) {
        std::vector<BigInt> row;
        for (const auto& c : j.at("rows").at(std::to_string(r)))
            row.emplace_back(c.get<std::string>(), 10);
        rows.push_back(std::move(row));
    }
    return RepTable(N, std::move(rows));
}

namespace {

std::size_t isqrt(std::size_t n)
{
    std::size_t s = 0;
    while ((s + 1) * (s + 1) <= n)
        ++s;
    return s;
}

// Number of ways to fill the remaining `left` coordinates from [-bound, bound]
// so that their squares sum to `target`.
std::uint64_t enumerate(std::size_t left, long bound, long target)
{
    if (left == 0)
        return target == 0 ? 1 : 0;
    std::uint64_t count = 0;
    for (long x = -bound; x <= bound; ++x)
        count += enumerate(left - 1, bound, target - x * x);
    return count;
}

} // namespace

BigInt rep_bruteforce(std::size_t r, std::size_t n)
{
    if (r == 0)
        throw std::invalid_argument("rep_bruteforce: r must be positive");
    const std::size_t s = isqrt(n);
    const std::uint64_t width = 2 * s + 1;
    std::uint64_t points = 1;
    for (std::size_t i = 0; i < r; ++i) {
        points *= width;
        if (points > kBruteforceGuard)
            throw std::invalid_argument("rep_bruteforce: (2*isqrt(" + std::to_string(n) + ")+1)^" +
                                        std::to_string(r) + " exceeds the enumeration guard");
    }
    return BigInt(static_cast<unsigned long>(enumerate(r, static_cast<long>(s), static_cast<long>(n))));
}

std::vector<BigInt> rep_from_theta(std::size_t r, std::size_t N)
{
    if (r == 0)
        throw std::invalid_argument("rep_from_theta: r must be positive");
    auto coeffs = series_pow(theta_sum(N), r).integer_coeffs();
    for (std::size_t n = 1; n <= N; n += 2)
        coeffs[n] = -coeffs[n];
    return coeffs;
}

} // namespace thetasum
