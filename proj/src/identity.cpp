#include "thetasum/identity.hpp"

#include "parallel.hpp"
#include "thetasum/divisors.hpp"
#include "thetasum/series.hpp"

#include <json.hpp>

#include <memory>
#include <sstream>
#include <stdexcept>

namespace thetasum {

std::string_view to_string(IdentityName id)
{
    switch (id) {
    case IdentityName::theorem1: return "theorem1";
    case IdentityName::lemma1: return "lemma1";
    case IdentityName::lemma2: return "lemma2";
    case IdentityName::log_theta: return "log_theta";
    case IdentityName::binomial_aux: return "binomial_aux";
    case IdentityName::swap_equivalence: return "swap_equivalence";
    }
    return "unknown";
}

Record make_record(std::vector<std::size_t> index, Rational lhs, Rational rhs)
{
    bool pass = lhs == rhs;
    return {std::move(index), std::move(lhs), std::move(rhs), pass};
}

VerificationReport::VerificationReport(IdentityName id, std::size_t lo, std::size_t hi,
                                       std::vector<Record> recs)
    : identity(id), n_min(lo), n_max(hi), records(std::move(recs)), all_pass(true)
{
    for (const auto& r : records)
        all_pass = all_pass && r.pass;
}

std::vector<const Record*> VerificationReport::failures() const
{
    std::vector<const Record*> out;
    for (const auto& r : records)
        if (!r.pass)
            out.push_back(&r);
    return out;
}

std::string VerificationReport::to_json() const
{
    nlohmann::ordered_json j;
    j["identity"] = to_string(identity);
    j["range"] = {n_min, n_max};
    j["all_pass"] = all_pass;
    auto& fails = j["failures"] = nlohmann::ordered_json::array();
    for (const Record* r : failures())
        fails.push_back({{"index", r->index}, {"lhs", r->lhs.to_string()}, {"rhs", r->rhs.to_string()}});
    return j.dump();
}

std::string VerificationReport::to_csv_rows() const
{
    std::ostringstream os;
    for (const auto& r : records) {
        os << to_string(identity) << ',';
        for (std::size_t i = 0; i < r.index.size(); ++i)
            os << (i ? ":" : "") << r.index[i];
        os << ',' << r.lhs.to_string() << ',' << r.rhs.to_string() << ',' << (r.pass ? "true" : "false")
           << '\n';
    }
    return os.str();
}

namespace {

void require_positive(std::size_t n, const char* what)
{
    if (n == 0)
        throw std::invalid_argument(std::string(what) + ": n must be a positive integer");
}

Rational sign_power(std::size_t e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational inverse(std::size_t k) { return Rational(1, static_cast<long>(k)); }

} // namespace

Rational theorem1_rhs(std::size_t n, const RepTable& table)
{
    require_positive(n, "theorem1_rhs");
    if (n > table.order())
        throw std::invalid_argument("theorem1_rhs: n exceeds table order");
    Rational sum;
    for (std::size_t r = 1; r <= n; ++r) {
        const BigInt& c = table.at(r, n);
        if (c == 0)
            continue;
        sum += sign_power(n + r) * inverse(r) * Rational(BigInt(binomial(n, r) * c));
    }
    return sum / Rational(2);
}

Rational lemma1_rhs(std::size_t n, const ThetaDerivs& derivs)
{
    require_positive(n, "lemma1_rhs");
    if (n > derivs.order())
        throw std::invalid_argument("lemma1_rhs: n exceeds derivative order");
    BellEvaluator bell(derivs.as_args());
    Rational sum;
    BigInt k_minus_1_fact = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        if (k > 1)
            k_minus_1_fact *= static_cast<unsigned long>(k - 1);
        sum += sign_power(k) * Rational(k_minus_1_fact) * bell(n, k);
    }
    return sum / Rational(factorial(n));
}

Rational double_sum_by_k(std::size_t n, const RepTable& table)
{
    require_positive(n, "double_sum_by_k");
    Rational outer;
    for (std::size_t k = 1; k <= n; ++k) {
        BigInt inner = 0;
        for (std::size_t r = 1; r <= k; ++r) {
            BigInt term = binomial(k, r) * table.at(r, n);
            if (r % 2 == 0)
                inner += term;
            else
                inner -= term;
        }
        outer += inverse(k) * Rational(inner);
    }
    return outer;
}

Rational double_sum_by_r(std::size_t n, const RepTable& table)
{
    require_positive(n, "double_sum_by_r");
    Rational outer;
    for (std::size_t r = 1; r <= n; ++r) {
        Rational inner;
        for (std::size_t k = r; k <= n; ++k)
            inner += inverse(k) * Rational(binomial(k, r));
        outer += sign_power(r) * Rational(table.at(r, n)) * inner;
    }
    return outer;
}

namespace {

template <typename Check>
std::vector<Record> per_n(std::size_t N, unsigned jobs, Check&& check)
{
    std::vector<std::optional<Record>> slots(N);
    detail::parallel_for(N, jobs, [&](std::size_t i) { slots[i] = check(i + 1); });
    std::vector<Record> out;
    out.reserve(N);
    for (auto& s : slots)
        out.push_back(std::move(*s));
    return out;
}

void require_range(std::size_t N, const RepTable* table, const char* what)
{
    if (N == 0)
        throw std::invalid_argument(std::string(what) + ": N must be positive");
    if (table && N > table->order())
        throw std::invalid_argument(std::string(what) + ": N exceeds table order");
}

} // namespace

VerificationReport verify_theorem1(std::size_t N, unsigned jobs)
{
    require_range(N, nullptr, "verify_theorem1");
    return verify_theorem1(RepTable(N), N, jobs);
}

VerificationReport verify_theorem1(const RepTable& table, std::size_t N, unsigned jobs)
{
    require_range(N, &table, "verify_theorem1");
    auto records = per_n(N, jobs, [&](std::size_t n) {
        return make_record({n}, odd_divisor_inverse_sum(n), theorem1_rhs(n, table));
    });
    return {IdentityName::theorem1, 1, N, std::move(records)};
}

VerificationReport verify_lemma1(std::size_t N, unsigned jobs)
{
    require_range(N, nullptr, "verify_lemma1");
    const ThetaDerivs derivs = theta_derivs(N);
    auto records = per_n(N, jobs, [&](std::size_t n) {
        return make_record({n}, Rational(2) * odd_divisor_inverse_sum(n), lemma1_rhs(n, derivs));
    });
    return {IdentityName::lemma1, 1, N, std::move(records)};
}

VerificationReport verify_lemma2(std::size_t N, unsigned jobs)
{
    require_range(N, nullptr, "verify_lemma2");
    return verify_lemma2(RepTable(N), N, jobs);
}

VerificationReport verify_lemma2(const RepTable& table, std::size_t N, unsigned jobs)
{
    require_range(N, &table, "verify_lemma2");
    const ArgSeq args = theta_derivs(N).as_args();
    auto comb = std::make_shared<const CombTable>(N);

    std::vector<std::vector<Record>> rows(N);
    detail::parallel_for(N, jobs, [&](std::size_t i) {
        std::size_t n = i + 1;
        BellEvaluator bell(args, comb);
        for (std::size_t k = 1; k <= n; ++k)
            rows[i].push_back(make_record({n, k}, bell(n, k), bell_lemma2_rhs(n, k, table)));
    });
    std::vector<Record> records;
    for (auto& row : rows)
        for (auto& r : row)
            records.push_back(std::move(r));
    return {IdentityName::lemma2, 1, N, std::move(records)};
}

VerificationReport verify_log_theta(std::size_t N, unsigned jobs)
{
    require_range(N, nullptr, "verify_log_theta");
    const Series log_theta = series_log(theta_sum(N));
    auto records = per_n(N, jobs, [&](std::size_t n) {
        return make_record({n}, log_theta[n], -mixed_divisor_sum(n));
    });
    return {IdentityName::log_theta, 1, N, std::move(records)};
}

VerificationReport verify_binomial_aux(std::size_t N, unsigned jobs)
{
    require_range(N, nullptr, "verify_binomial_aux");
    const CombTable comb(N);
    // partial[r-1][n-r] = sum_{k=r}^{n} C(k,r)/k, accumulated along n for fixed r
    std::vector<std::vector<Rational>> partial(N);
    detail::parallel_for(N, jobs, [&](std::size_t i) {
        std::size_t r = i + 1;
        Rational acc;
        for (std::size_t k = r; k <= N; ++k) {
            acc += Rational(comb.binomial(k, r)) * inverse(k);
            partial[i].push_back(acc);
        }
    });
    std::vector<Record> records;
    records.reserve(N * (N + 1) / 2);
    for (std::size_t n = 1; n <= N; ++n)
        for (std::size_t r = 1; r <= n; ++r)
            records.push_back(make_record({n, r}, partial[r - 1][n - r],
                                          Rational(comb.binomial(n, r)) * inverse(r)));
    return {IdentityName::binomial_aux, 1, N, std::move(records)};
}

VerificationReport verify_swap_equivalence(std::size_t N, unsigned jobs)
{
    require_range(N, nullptr, "verify_swap_equivalence");
    return verify_swap_equivalence(RepTable(N), N, jobs);
}

VerificationReport verify_swap_equivalence(const RepTable& table, std::size_t N, unsigned jobs)
{
    require_range(N, &table, "verify_swap_equivalence");
    auto records = per_n(N, jobs, [&](std::size_t n) {
        return make_record({n}, double_sum_by_k(n, table), double_sum_by_r(n, table));
    });
    return {IdentityName::swap_equivalence, 1, N, std::move(records)};
}

} // namespace thetasum
