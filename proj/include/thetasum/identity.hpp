#ifndef THETASUM_IDENTITY_HPP
#define THETASUM_IDENTITY_HPP

#include "thetasum/bell.hpp"
#include "thetasum/combinatorics.hpp"
#include "thetasum/rational.hpp"
#include "thetasum/repcount.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thetasum {

enum class IdentityName {
    theorem1,         // odd-divisor inverse sum vs. the alternating c_r(n) sum
    lemma1,           // 2 * odd-divisor inverse sum vs. the Bell-polynomial sum
    lemma2,           // B_{n,k} at theta derivatives vs. the c_r(n) combination
    log_theta,        // [q^n] log theta vs. -sum_{d|n} (1 - (-1)^d)/d
    binomial_aux,     // sum_{k=r}^{n} C(k,r)/k vs. C(n,r)/r
    swap_equivalence  // the double sum before and after exchanging k and r
};

std::string_view to_string(IdentityName id);

struct Record {
    std::vector<std::size_t> index;
    Rational lhs;
    Rational rhs;
    bool pass;
};

/// Result of checking one identity on a finite index range. pass on a
/// record means lhs == rhs exactly; all_pass means every record passed.
struct VerificationReport {
    VerificationReport(IdentityName id, std::size_t n_min, std::size_t n_max, std::vector<Record> records);

    IdentityName identity;
    std::size_t n_min;
    std::size_t n_max;
    std::vector<Record> records;
    bool all_pass;

    std::vector<const Record*> failures() const;

    /// {"identity": ..., "range": [a, b], "all_pass": ..., "failures": [...]}
    std::string to_json() const;
    /// One "identity,index,lhs,rhs,pass" line per record, no header.
    /// Index components are joined by ':'.
    std::string to_csv_rows() const;
};

Record make_record(std::vector<std::size_t> index, Rational lhs, Rational rhs);

/// (1/2) sum_{r=1}^{n} (-1)^{n+r}/r * C(n,r) * c_r(n). Requires 1 <= n <= table.order().
Rational theorem1_rhs(std::size_t n, const RepTable& table);

/// (1/n!) sum_{k=1}^{n} (-1)^k (k-1)! B_{n,k}(theta'(0), ...).
/// Requires 1 <= n <= derivs.order().
Rational lemma1_rhs(std::size_t n, const ThetaDerivs& derivs);

/// sum_{k=1}^{n} (1/k) sum_{r=1}^{k} (-1)^r C(k,r) c_r(n)
Rational double_sum_by_k(std::size_t n, const RepTable& table);
/// sum_{r=1}^{n} (-1)^r c_r(n) sum_{k=r}^{n} (1/k) C(k,r)
Rational double_sum_by_r(std::size_t n, const RepTable& table);

// Each verify_* checks indices 1..N (or the triangle 1 <= k <= n <= N) and
// throws std::invalid_argument for N = 0. `jobs` bounds the number of
// worker threads; records always come back in index order.

VerificationReport verify_theorem1(std::size_t N, unsigned jobs = 1);
VerificationReport verify_theorem1(const RepTable& table, std::size_t N, unsigned jobs = 1);

VerificationReport verify_lemma1(std::size_t N, unsigned jobs = 1);

VerificationReport verify_lemma2(std::size_t N, unsigned jobs = 1);
VerificationReport verify_lemma2(const RepTable& table, std::size_t N, unsigned jobs = 1);

VerificationReport verify_log_theta(std::size_t N, unsigned jobs = 1);

VerificationReport verify_binomial_aux(std::size_t N, unsigned jobs = 1);

VerificationReport verify_swap_equivalence(std::size_t N, unsigned jobs = 1);
VerificationReport verify_swap_equivalence(const RepTable& table, std::size_t N, unsigned jobs = 1);

} // namespace thetasum

#endif
