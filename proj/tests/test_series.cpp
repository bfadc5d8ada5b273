#include "comppoly/series.hpp"

#include <doctest.h>

using namespace comppoly;

namespace {

SeriesY y_series(unsigned K) {
    SeriesY s(K);
    s[1] = RatFunc(Rational(1));
    return s;
}

} // namespace

TEST_CASE("binomial powers of 1+y") {
    SeriesY u = y_series(2);
    SeriesY half = series_binpow(u, Rational(1, 2), 2);
    CHECK(half[0] == RatFunc(Rational(1)));
    CHECK(half[1] == RatFunc(Rational(1, 2)));
    CHECK(half[2] == RatFunc(Rational(-1, 8)));

    SeriesY inv2 = series_binpow(u, Rational(-2), 2);
    CHECK(inv2[1] == RatFunc(Rational(-2)));
    CHECK(inv2[2] == RatFunc(Rational(3)));

    SeriesY cube = series_binpow(y_series(5), Rational(3), 5);
    CHECK(cube[3] == RatFunc(Rational(1)));
    CHECK(cube[4].is_zero());
    CHECK(cube[5].is_zero());
}

TEST_CASE("exponential series") {
    SeriesY u(2);
    u[1] = RatFunc(-Poly::x());
    SeriesY e = series_exp(u, 2);
    CHECK(e[0] == RatFunc(Rational(1)));
    CHECK(e[1] == RatFunc(-Poly::x()));
    CHECK(e[2] == RatFunc(Rational(1, 2) * (Poly::x() * Poly::x())));

    CHECK(series_exp(SeriesY(3), 3) == SeriesY::one(3));

    SeriesY u2(3);
    u2[2] = RatFunc(Rational(1));
    SeriesY e2 = series_exp(u2, 3);
    CHECK(e2[2] == RatFunc(Rational(1)));
    CHECK(e2[3].is_zero());
}

TEST_CASE("nonzero constant terms are rejected") {
    SeriesY bad = SeriesY::one(2);
    CHECK_THROWS_AS(series_binpow(bad, Rational(1, 2), 2), std::invalid_argument);
    CHECK_THROWS_AS(series_exp(bad, 2), std::invalid_argument);
}

TEST_CASE("mixed-order arithmetic truncates to the smaller order") {
    SeriesY a = series_binpow(y_series(6), Rational(5), 6);
    SeriesY b = series_binpow(y_series(3), Rational(5), 3);
    SeriesY prod = a * b;
    CHECK(prod.order() == 3);
    for (unsigned i = 0; i <= 3; ++i)
        CHECK(prod[i] == series_binpow(y_series(3), Rational(10), 3)[i]);
}
