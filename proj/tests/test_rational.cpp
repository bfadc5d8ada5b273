#include "comppoly/rational.hpp"

#include <doctest.h>

#include <random>

using namespace comppoly;

TEST_CASE("rationals reduce and keep positive denominators") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(-10, 5).str() == "-2");
    CHECK(Rational(1, 2).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("string round trip") {
    for (const char* s : {"0", "1", "-1", "7/3", "-22/7", "1000000000000000000000/7"}) {
        Rational r = Rational::from_string(s);
        CHECK(r.str() == s);
    }
    CHECK(Rational::from_string("+3").str() == "3");
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
}

TEST_CASE("arithmetic and comparisons") {
    Rational a(1, 2), b(1, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 6));
    CHECK(a / b == Rational(3, 2));
    CHECK(a > b);
    CHECK(Rational(-1, 2).abs() == a);
    CHECK_THROWS_AS(a / Rational(0), std::invalid_argument);
}

TEST_CASE("integer powers") {
    CHECK(Rational(2, 3).pow_int(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow_int(-2) == Rational(9, 4));
    CHECK(Rational(5).pow_int(0) == Rational(1));
    CHECK_THROWS_AS(Rational(0).pow_int(-1), std::invalid_argument);
}

TEST_CASE("exact rational roots") {
    CHECK(*rational_pow(Rational(4, 9), Rational(1, 2)) == Rational(2, 3));
    CHECK(*rational_pow(Rational(8, 27), Rational(-1, 3)) == Rational(3, 2));
    CHECK(*rational_pow(Rational(-8), Rational(1, 3)) == Rational(-2));
    CHECK(!rational_pow(Rational(2), Rational(1, 2)).has_value());
    CHECK(!rational_pow(Rational(-4), Rational(1, 2)).has_value());
    CHECK(*rational_pow(Rational(0), Rational(3, 2)) == Rational(0));
    CHECK(!rational_pow(Rational(0), Rational(-1, 2)).has_value());
}

TEST_CASE("random field identities") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
    for (int i = 0; i < 200; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - b) + b == a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}
