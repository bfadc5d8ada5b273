#include "comppoly/report_io.hpp"

#include <doctest.h>

using namespace comppoly;

namespace {

Poly make(std::vector<Rational> cs) { return Poly(std::move(cs)); }

} // namespace

TEST_CASE("records round-trip through JSON") {
    std::vector<OutputRecord> records;
    FamilySpec spec = FamilySpec::hypergeometric(Rational(-1, 2), Rational(1), Rational(1, 2), 3);
    auto polys = cp_upto(spec, 3, Route::GenFunc);
    for (unsigned nu = 0; nu <= 3; ++nu)
        records.push_back(make_record(spec, nu, Route::GenFunc, polys[nu]));
    std::string text = records_to_json(records);
    CHECK(records_from_json(text) == records);
    CHECK(text.find("\"-1/2\"") != std::string::npos);
}

TEST_CASE("coefficients stay canonical in records") {
    FamilySpec spec = FamilySpec::legendre(2);
    OutputRecord rec = make_record(spec, 1, Route::GenFunc, cp(spec, 1, Route::GenFunc));
    CHECK(rec.coeffs == std::vector<std::string>{"0", "-4"});
    OutputRecord zero = make_record(spec, 0, Route::GenFunc, Poly());
    CHECK(zero.coeffs.empty());
}

TEST_CASE("LaTeX rendering") {
    CHECK(poly_to_latex(make({Rational(-4), Rational(0), Rational(12)})) == "12x^{2} - 4");
    CHECK(poly_to_latex(make({Rational(3, 4), Rational(-6), Rational(6)})) ==
          "6x^{2} - 6x + \\frac{3}{4}");
    CHECK(poly_to_latex(make({Rational(0), Rational(-1)})) == "-x");
    CHECK(poly_to_latex(Poly()) == "0");
}

TEST_CASE("CSV rows are one coefficient each") {
    FamilySpec spec = FamilySpec::pre_laguerre(Rational(2), 2);
    std::vector<OutputRecord> records = {
        make_record(spec, 2, Route::GenFunc, cp(spec, 2, Route::GenFunc))};
    std::string csv = records_to_csv(records);
    CHECK(csv == "family,params,l,nu,degree,coefficient\n"
                 "prelaguerre,N=2,2,2,0,2\n"
                 "prelaguerre,N=2,2,2,1,-2\n");
}

TEST_CASE("norms and probe serialization") {
    std::string norms = norms_to_json({{2, 0, Rational(8)}, {2, 1, Rational(4, 3)}});
    CHECK(norms.find("\"4/3\"") != std::string::npos);
    TranslationProbe tp = probe_translation(0, Rational(0), Rational(1, 2), 1);
    std::string probe = probe_to_json(tp);
    CHECK(probe.find("\"residual\": \"0\"") != std::string::npos);
}
