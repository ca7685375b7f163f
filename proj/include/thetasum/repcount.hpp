#ifndef THETASUM_REPCOUNT_HPP
#define THETASUM_REPCOUNT_HPP

#include "thetasum/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace thetasum {

/// c_r(n): the number of integer vectors (x_1..x_r), order and signs
/// distinguished, with x_1^2 + ... + x_r^2 = n.
///
/// Holds rows r = 1..N, each with entries n = 0..N. Immutable once built.
class RepTable {
public:
    /// Builds the table by repeated convolution with c1_row(N). Requires N >= 1.
    explicit RepTable(std::size_t N);
    /// Wraps precomputed rows (rows[r-1] is row r). Used for fixtures and
    /// for perturbed tables in mutation tests; shape is checked, contents are not.
    RepTable(std::size_t N, std::vector<std::vector<BigInt>> rows);

    std::size_t order() const { return order_; }
    const BigInt& at(std::size_t r, std::size_t n) const;
    const std::vector<BigInt>& row(std::size_t r) const;

    /// Copy with one entry replaced.
    RepTable with_entry(std::size_t r, std::size_t n, BigInt value) const;

    /// "r,n,c" header then one line per entry, r = 1..N, n = 0..N.
    std::string to_csv() const;
    /// {"N": N, "rows": {"1": ["1","2",...], ...}}. Counts are decimal strings.
    std::string to_json() const;
    static RepTable from_json(const std::string& text);

    friend bool operator==(const RepTable&, const RepTable&) = default;

private:
    std::size_t order_;
    std::vector<std::vector<BigInt>> rows_;
};

/// s[0] = 1, s[k^2] = 2 for k >= 1, else 0.
std::vector<BigInt> c1_row(std::size_t N);

inline RepTable rep_table(std::size_t N) { return RepTable(N); }

/// Largest enumeration size (2 floor(sqrt n) + 1)^r accepted by rep_bruteforce.
inline constexpr std::uint64_t kBruteforceGuard = 100'000'000;

/// Counts lattice points on the sphere of radius sqrt(n) in Z^r by direct
/// enumeration. Throws std::invalid_argument past kBruteforceGuard or for r = 0.
BigInt rep_bruteforce(std::size_t r, std::size_t n);

/// c_r(n) for n = 0..N read off as (-1)^n [q^n] theta(q)^r.
std::vector<BigInt> rep_from_theta(std::size_t r, std::size_t N);

} // namespace thetasum

#endif
