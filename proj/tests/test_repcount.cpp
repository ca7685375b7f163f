#include "thetasum/repcount.hpp"
#include "thetasum/series.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace thetasum;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> v)
{
    std::vector<BigInt> out;
    for (long x : v)
        out.emplace_back(x);
    return out;
}

} // namespace

TEST_CASE("c1_row")
{
    CHECK(c1_row(0) == ints({1}));
    CHECK(c1_row(5) == ints({1, 2, 0, 0, 2, 0}));
    CHECK(c1_row(10) == ints({1, 2, 0, 0, 2, 0, 0, 0, 0, 2, 0}));
}

TEST_CASE("rep_bruteforce")
{
    CHECK(rep_bruteforce(1, 9) == 2);
    CHECK(rep_bruteforce(2, 1) == 4);
    CHECK(rep_bruteforce(4, 4) == 24);
    CHECK(rep_bruteforce(3, 0) == 1);
    // frozen from an independent enumeration
    CHECK(rep_bruteforce(4, 10) == 144);
    CHECK(rep_bruteforce(5, 10) == 560);
    CHECK_THROWS_AS(rep_bruteforce(0, 4), std::invalid_argument);
    CHECK_THROWS_AS(rep_bruteforce(10, 10000), std::invalid_argument);
}

TEST_CASE("rep_table small values")
{
    CHECK_THROWS_AS(RepTable(0), std::invalid_argument);
    CHECK(RepTable(2).at(2, 2) == 4);
    CHECK(RepTable(4).at(2, 4) == 4);
    CHECK(RepTable(3).at(3, 3) == 8);
    RepTable t(10);
    CHECK(t.row(2) == ints({1, 4, 4, 0, 4, 8, 0, 0, 4, 4, 8}));
    CHECK_THROWS_AS(t.at(0, 1), std::out_of_range);
    CHECK_THROWS_AS(t.at(11, 1), std::out_of_range);
    CHECK_THROWS_AS(t.at(1, 11), std::out_of_range);
}

TEST_CASE("rep_table row invariants")
{
    const std::size_t N = 40;
    RepTable t(N);
    CHECK(t.row(1) == c1_row(N));
    for (std::size_t r = 1; r <= N; ++r) {
        CHECK(t.at(r, 0) == 1);
        for (std::size_t n = 0; n <= N; ++n) {
            CHECK(t.at(r, n) >= 0);
            if (r >= n)
                CHECK(t.at(r, n) > 0);
        }
        if (r > 1)
            CHECK(t.row(r) == detail::int_convolve(t.row(r - 1), t.row(1), N + 1));
    }
}

TEST_CASE("rep_table agrees with lattice enumeration")
{
    RepTable t(30);
    for (std::size_t r = 1; r <= 5; ++r)
        for (std::size_t n = 0; n <= 30; ++n)
            CHECK(t.at(r, n) == rep_bruteforce(r, n));
}

TEST_CASE("rep_from_theta")
{
    CHECK(rep_from_theta(1, 5) == c1_row(5));
    CHECK(rep_from_theta(2, 2) == ints({1, 4, 4}));
    CHECK(rep_from_theta(3, 3).back() == 8);
    CHECK_THROWS_AS(rep_from_theta(0, 3), std::invalid_argument);

    const std::size_t N = 30;
    RepTable t(N);
    for (std::size_t r = 1; r <= N; ++r) {
        CHECK(rep_from_theta(r, N) == t.row(r));
        // sign convention: raw theta^r coefficients alternate as (-1)^n c_r(n)
        auto raw = series_pow(theta_sum(N), r).integer_coeffs();
        for (std::size_t n = 0; n <= N; ++n)
            CHECK(raw[n] == (n % 2 == 0 ? t.at(r, n) : BigInt(-t.at(r, n))));
    }
}

TEST_CASE("serialization")
{
    RepTable t(3);
    CHECK(t.to_csv() ==
          "r,n,c\n"
          "1,0,1\n1,1,2\n1,2,0\n1,3,0\n"
          "2,0,1\n2,1,4\n2,2,4\n2,3,0\n"
          "3,0,1\n3,1,6\n3,2,12\n3,3,8\n");
    CHECK(t.to_json() == R"({"N":3,"rows":{"1":["1","2","0","0"],"2":["1","4","4","0"],"3":["1","6","12","8"]}})");

    RepTable big(120);
    CHECK(RepTable::from_json(big.to_json()) == big);
}

TEST_CASE("with_entry")
{
    RepTable t(5);
    auto u = t.with_entry(3, 4, t.at(3, 4) + 1);
    CHECK(u.at(3, 4) == t.at(3, 4) + 1);
    CHECK_FALSE(u == t);
    CHECK_THROWS_AS(t.with_entry(6, 0, 1), std::out_of_range);
}
