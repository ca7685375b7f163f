#include "thetasum/rational.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using thetasum::BigInt;
using thetasum::Rational;

TEST_CASE("construction canonicalizes")
{
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, 7).denominator() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("string form")
{
    CHECK(Rational(-2).to_string() == "-2");
    CHECK(Rational(13, 9).to_string() == "13/9");
    CHECK(Rational(-4, 6).to_string() == "-2/3");
    CHECK(Rational::parse("13/9") == Rational(13, 9));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("0") == Rational(0));

    for (const char* bad : {"", "-", "2/4", "3/1", "-0", "+1", "1/-2", "01", "1/0", "1/", "/2", "1.5", "a"})
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
}

TEST_CASE("parse inverts to_string on random values")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1'000'000, 1'000'000), den(1, 1'000'000);
    for (int i = 0; i < 2000; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.to_string()) == r);
    }
    BigInt huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 3, 400);
    Rational big(huge, BigInt(huge + 1));
    CHECK(Rational::parse(big.to_string()) == big);
}

TEST_CASE("arithmetic and ordering")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
    CHECK(-Rational(2, 3) == Rational(-2, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(thetasum::pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(thetasum::pow(Rational(5, 7), 0) == Rational(1));
}
