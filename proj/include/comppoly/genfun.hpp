#ifndef COMPPOLY_GENFUN_HPP
#define COMPPOLY_GENFUN_HPP

#include "comppoly/series.hpp"

#include <optional>
#include <vector>

namespace comppoly {

/// One closed-form factor inner(x,y)^exponent; inner is a polynomial in y
/// with rational-function coefficients and nonzero value at y = 0.
struct GFFactor {
    std::vector<RatFunc> inner;  // index = power of y
    Rational exponent;
};

/// Product of factors times an optional exp(arg) with arg(x,0) = 0.
struct GFSpec {
    std::vector<GFFactor> factors;
    std::vector<RatFunc> exp_arg;  // empty means no exponential factor
};

/// Series of the closed form, truncated at order K.
SeriesY gf_series(const GFSpec& spec, unsigned K);

/// [P_0, ..., P_K] with P_nu = nu! * (y^nu coefficient); every coefficient
/// must reduce to a polynomial or NonPolynomialCoefficientError is thrown.
std::vector<Poly> expand_gf(const GFSpec& spec, unsigned K);

/// Substitute x -> x + h throughout a spec.
GFSpec gf_shift(const GFSpec& spec, const Rational& h);

/// Closed form (w(x)/w(X))^{npow} (sigma(X)/sigma(x))^l, X = x + s*y*sigma*w.
/// sign -1 builds the variant with y replaced by -y.
GFSpec gf_sigma_weight(const Poly& sigma, const Poly& w, const Rational& npow,
                       unsigned l, int sign = 1);

/// Closed form (w(X)/w(x))^{a+l} (sigma(X)/sigma(x))^{b+l}, X = x + y*sigma*w.
GFSpec gf_weight_pair(const Poly& w, const Poly& sigma, const Rational& a,
                      const Rational& b, unsigned l);

/// Structural equality up to factor order (inner lists compared reduced).
bool gf_same_factors(const GFSpec& a, const GFSpec& b);

} // namespace comppoly

#endif
