#include "comppoly/combinatorics.hpp"

#include <doctest.h>

using namespace comppoly;

TEST_CASE("generalized binomials") {
    CHECK(gen_binom(Rational(-2), 2) == Rational(3));
    CHECK(gen_binom(Rational(5, 2), 2) == Rational(15, 8));
    CHECK(gen_binom(Rational(7), 0) == Rational(1));
    // integer agreement
    for (long n = 0; n <= 10; ++n)
        for (unsigned k = 0; k <= 12; ++k) {
            BigInt expected;
            mpz_bin_uiui(expected.get_mpz_t(), static_cast<unsigned long>(n), k);
            CHECK(gen_binom(Rational(n), k) == Rational(expected));
        }
}

TEST_CASE("rising factorials") {
    CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
    CHECK(pochhammer(Rational(-2), 3) == Rational(0));
    CHECK(pochhammer(Rational(17, 5), 0) == Rational(1));
    for (long n = 0; n <= 6; ++n)
        for (unsigned k = static_cast<unsigned>(n) + 1; k <= 8; ++k)
            CHECK(pochhammer(Rational(-n), k) == Rational(0));
}

TEST_CASE("double factorials") {
    CHECK(double_fact(-1) == 1);
    CHECK(double_fact(0) == 1);
    CHECK(double_fact(5) == 15);
    CHECK(double_fact(6) == 48);
    CHECK_THROWS_AS(double_fact(-2), std::invalid_argument);
}
