#include "comppoly/poly.hpp"

#include "comppoly/errors.hpp"

#include <doctest.h>

#include <random>

using namespace comppoly;

namespace {

Poly make(std::vector<long> cs) {
    std::vector<Rational> v;
    for (long c : cs) v.emplace_back(c);
    return Poly(std::move(v));
}

Poly random_poly(std::mt19937& rng, int maxdeg) {
    std::uniform_int_distribution<int> deg(0, maxdeg);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    int d = deg(rng);
    std::vector<Rational> v;
    for (int i = 0; i <= d; ++i) v.emplace_back(num(rng), den(rng));
    return Poly(std::move(v));
}

} // namespace

TEST_CASE("canonical trimming") {
    CHECK(Poly(std::vector<Rational>{Rational(1), Rational(0)}).degree() == 0);
    CHECK(Poly().is_zero());
    CHECK(make({0, 0, 0}).is_zero());
    CHECK(make({-4, 0, 12}).degree() == 2);
}

TEST_CASE("derivative") {
    // x^3 - x
    CHECK(make({0, -1, 0, 1}).derivative() == make({-1, 0, 3}));
    CHECK(Poly(Rational(5)).derivative().is_zero());
}

TEST_CASE("exact quotient and gcd") {
    CHECK(exact_quotient(make({-1, 0, 1}), make({-1, 1})) == make({1, 1}));
    CHECK(gcd(make({-1, 0, 1}), make({1, -2, 1})) == make({-1, 1}));
    CHECK_THROWS_AS(exact_quotient(make({1, 1}), make({0, 1})), NonDivisibleError);
    CHECK_THROWS_AS(gcd(Poly(), Poly()), std::invalid_argument);
}

TEST_CASE("evaluation shift and power") {
    Poly p = make({2, -3, 1});  // (x-1)(x-2)
    CHECK(p.eval(Rational(1)) == Rational(0));
    CHECK(p.eval(Rational(1, 2)) == Rational(3, 4));
    CHECK(p.shift(Rational(1)) == make({0, -1, 1}));
    CHECK(make({0, 1}).pow(3) == make({0, 0, 0, 1}));
    CHECK(p.shift(Rational(0)) == p);
}

TEST_CASE("multiplicativity at random points") {
    std::mt19937 rng(77001);
    std::uniform_int_distribution<long> num(-12, 12), den(1, 7);
    for (int i = 0; i < 120; ++i) {
        Poly p = random_poly(rng, 8), q = random_poly(rng, 8);
        Rational r(num(rng), den(rng));
        CHECK((p * q).eval(r) == p.eval(r) * q.eval(r));
        CHECK((p + q).eval(r) == p.eval(r) + q.eval(r));
        if (!q.is_zero()) CHECK(exact_quotient(p * q, q) == p);
    }
}

TEST_CASE("degree adds under multiplication") {
    std::mt19937 rng(5150);
    for (int i = 0; i < 60; ++i) {
        Poly p = random_poly(rng, 6), q = random_poly(rng, 6);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).degree() == p.degree() + q.degree());
    }
}

TEST_CASE("rendering") {
    CHECK(make({-4, 0, 12}).str() == "12*x^2 - 4");
    CHECK(make({0, -4}).str() == "-4*x");
    CHECK(make({1, 1}).str() == "x + 1");
    CHECK(Poly().str() == "0");
}
