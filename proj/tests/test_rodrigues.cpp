#include "comppoly/rodrigues.hpp"

#include "comppoly/errors.hpp"
#include "comppoly/families.hpp"

#include <doctest.h>

using namespace comppoly;

namespace {

Poly make(std::vector<Rational> cs) { return Poly(std::move(cs)); }

} // namespace

TEST_CASE("Legendre kernel") {
    RodriguesSpec spec = family_rodrigues(FamilySpec::legendre(2));
    CHECK(rodrigues_cp(spec, 2) == make({Rational(-4), Rational(0), Rational(12)}));
    CHECK(rodrigues_cp(spec, 0) == Poly(Rational(1)));
    CHECK(rodrigues_cp(spec, 1) == make({Rational(0), Rational(-4)}));
}

TEST_CASE("confluent kernel") {
    RodriguesSpec spec = family_rodrigues(FamilySpec::confluent(Rational(1), 2));
    CHECK(rodrigues_cp(spec, 2) == make({Rational(2), Rational(-4), Rational(1)}));
    CHECK(rodrigues_cp(spec, 0) == Poly(Rational(1)));
}

TEST_CASE("pre-Laguerre kernel") {
    RodriguesSpec spec = family_rodrigues(FamilySpec::pre_laguerre(Rational(2), 2));
    CHECK(rodrigues_cp(spec, 2) == make({Rational(2), Rational(-2)}));
    CHECK(rodrigues_cp(spec, 0) == Poly(Rational(1)));
}

TEST_CASE("relativistic Hermite kernel") {
    RodriguesSpec spec = family_rodrigues(FamilySpec::rel_hermite(Rational(1)));
    CHECK(rodrigues_cp(spec, 2) == make({Rational(-2), Rational(0), Rational(6)}));
    CHECK(rodrigues_cp(spec, 1) == make({Rational(0), Rational(2)}));
}

TEST_CASE("index nu = l recovers the primary polynomial") {
    // confluent at c=1: e^x d^l (x^l e^-x)
    for (unsigned l = 0; l <= 5; ++l) {
        FamilySpec spec = FamilySpec::confluent(Rational(1), l);
        Poly pl = cp(spec, l, Route::Rodrigues);
        CHECK(pl.degree() == static_cast<int>(l));
        // leading coefficient of e^x d^l (x^l e^-x) is (-1)^l
        CHECK(pl.leading() == Rational(l % 2 == 0 ? 1 : -1));
    }
    // relativistic Hermite matches the classical limit shape at N=1, n=1
    CHECK(cp(FamilySpec::rel_hermite(Rational(1)), 1, Route::Rodrigues) ==
          make({Rational(0), Rational(2)}));
}

TEST_CASE("fractional parameters survive the cancellation") {
    RodriguesSpec spec = family_rodrigues(FamilySpec::confluent(Rational(1, 2), 2));
    Poly p = rodrigues_cp(spec, 2);
    CHECK(p.degree() == 2);
    // against the explicit route
    CHECK(p == cp(FamilySpec::confluent(Rational(1, 2), 2), 2, Route::Explicit));
    RodriguesSpec half = family_rodrigues(FamilySpec::rel_hermite(Rational(7, 2)));
    CHECK(rodrigues_cp(half, 3).degree() == 3);
}

TEST_CASE("degenerate specs are rejected") {
    RodriguesSpec constant_base;
    constant_base.l = 1;
    constant_base.weight_bases = {{Poly(Rational(2)), Rational(1, 2)}};
    CHECK_THROWS_AS(rodrigues_cp(constant_base, 1), DegenerateParameterError);
}

TEST_CASE("omitting l from the two-weight prefactor breaks the reproduction") {
    // inner x^{c-1+l} (1-x)^{a+b-c+l} with the prefactor exponents nu-(c-1),
    // nu-(a+b-c) instead of the nu-(c-1)-l, nu-(a+b-c)-l that cancel
    Rational a(0), b(0), c(1, 2);
    unsigned l = 2, nu = 1;
    FamilySpec spec = FamilySpec::hypergeometric(a, b, c, l);
    FactoredExpr inner = rodrigues_inner(family_rodrigues(spec));
    FactoredExpr d = fe_diff(inner);
    Rational nr(static_cast<long>(nu));
    FactoredExpr wrong_prefactor = FactoredExpr::make_term(
        Poly(Rational(1)),
        {{Poly::x(), nr - (c - Rational(1))},
         {make({Rational(1), Rational(-1)}), nr - (a + b - c)}});
    Poly wrong = (wrong_prefactor * d).expect_poly();
    CHECK(wrong != cp(spec, nu, Route::GenFunc));
}
