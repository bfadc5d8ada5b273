#include "comppoly/genfun.hpp"

#include "comppoly/combinatorics.hpp"
#include "comppoly/errors.hpp"
#include "comppoly/families.hpp"

#include <doctest.h>

using namespace comppoly;

namespace {

Poly make(std::vector<Rational> cs) { return Poly(std::move(cs)); }

} // namespace

TEST_CASE("Legendre expansion") {
    auto polys = expand_gf(family_gf(FamilySpec::legendre(2)), 2);
    CHECK(polys[0] == Poly(Rational(1)));
    CHECK(polys[1] == make({Rational(0), Rational(-4)}));
    CHECK(polys[2] == make({Rational(-4), Rational(0), Rational(12)}));
}

TEST_CASE("confluent values at the origin") {
    for (unsigned l = 0; l <= 4; ++l) {
        Rational c(1, 3);
        auto polys = expand_gf(family_gf(FamilySpec::confluent(c, l)), 5);
        for (unsigned nu = 0; nu <= 5; ++nu) {
            Rational expected = Rational(BigInt(factorial(nu))) *
                                gen_binom(c - Rational(1) + Rational(static_cast<long>(l)), nu);
            CHECK(polys[nu].eval(Rational(0)) == expected);
        }
    }
}

TEST_CASE("pre-Laguerre values at x = -N") {
    Rational N(2);
    auto polys = expand_gf(family_gf(FamilySpec::pre_laguerre(N, 3)), 5);
    for (unsigned nu = 0; nu <= 5; ++nu) {
        Rational sign(nu % 2 == 0 ? 1 : -1);
        Rational expected = Rational(BigInt(factorial(nu))) * sign * gen_binom(-N, nu);
        CHECK(polys[nu].eval(-N) == expected);
    }
}

TEST_CASE("truncation coherence") {
    GFSpec spec = family_gf(FamilySpec::confluent(Rational(5, 2), 3));
    auto lo = expand_gf(spec, 4);
    auto hi = expand_gf(spec, 9);
    for (unsigned nu = 0; nu <= 4; ++nu) CHECK(lo[nu] == hi[nu]);
}

TEST_CASE("series expansion matches the differentiate-and-cancel route") {
    std::vector<FamilySpec> specs = {
        FamilySpec::legendre(3),
        FamilySpec::confluent(Rational(1, 2), 3),
        FamilySpec::hypergeometric(Rational(0), Rational(0), Rational(1, 2), 3),
        FamilySpec::rel_hermite(Rational(2)),
        FamilySpec::pre_laguerre(Rational(7, 2), 3),
    };
    for (const auto& spec : specs) {
        unsigned numax = spec.family == Family::Legendre ? spec.l : 5;
        auto series_route = cp_upto(spec, numax, Route::GenFunc);
        auto kernel_route = cp_upto(spec, numax, Route::Rodrigues);
        for (unsigned nu = 0; nu <= numax; ++nu) CHECK(series_route[nu] == kernel_route[nu]);
    }
}

TEST_CASE("closed form from sigma and weight reproduces the family forms") {
    Poly x = Poly::x();
    Poly w_pl = make({Rational(1), Rational(1, 2)});  // 1 + x/2
    GFSpec gen = gf_sigma_weight(x, w_pl, Rational(2), 2, 1);
    GFSpec hand = family_gf(FamilySpec::pre_laguerre(Rational(2), 2));
    CHECK(gf_same_factors(gen, hand));

    GFSpec genh = gf_weight_pair(x, make({Rational(1), Rational(-1)}), Rational(-1, 2),
                                 Rational(-1, 2), 2);
    GFSpec handh = family_gf(
        FamilySpec::hypergeometric(Rational(0), Rational(0), Rational(1, 2), 2));
    CHECK(gf_same_factors(genh, handh));
}

TEST_CASE("malformed factors are reported") {
    GFSpec spec;
    // (1 + y/x)^2 leaves a denominator in the y coefficient
    spec.factors.push_back(
        {{RatFunc(Rational(1)), RatFunc(Poly(Rational(1)), Poly::x())}, Rational(2)});
    CHECK_THROWS_AS(expand_gf(spec, 2), NonPolynomialCoefficientError);

    GFSpec zero_const;
    zero_const.factors.push_back({{RatFunc(Rational(0)), RatFunc(Rational(1))}, Rational(1)});
    CHECK_THROWS_AS(expand_gf(zero_const, 2), DegenerateParameterError);
}
