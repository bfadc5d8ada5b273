#include "comppoly/genfun.hpp"

#include "comppoly/combinatorics.hpp"
#include "comppoly/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace comppoly {

namespace {

SeriesY to_series(const std::vector<RatFunc>& coeffs, unsigned K) {
    SeriesY s(K);
    for (size_t i = 0; i < coeffs.size() && i <= K; ++i) s[i] = coeffs[i];
    return s;
}

SeriesY factor_series(const GFFactor& f, unsigned K) {
    if (f.inner.empty() || f.inner[0].is_zero())
        throw DegenerateParameterError("generating function factor vanishes at y=0");
    SeriesY inner = to_series(f.inner, K);
    RatFunc c0 = inner[0];
    SeriesY u(K);
    bool unit = c0 == RatFunc(Rational(1));
    for (size_t i = 1; i <= K; ++i) u[i] = unit ? inner[i] : inner[i] / c0;
    SeriesY s = series_binpow(u, f.exponent, K);
    if (unit) return s;
    // c0^exponent stays rational only for integer exponents.
    if (!f.exponent.is_integer())
        throw DegenerateParameterError(
            "generating function factor with non-unit constant term and fractional exponent");
    long e = f.exponent.to_long();
    RatFunc scale(Rational(1));
    RatFunc base = e >= 0 ? c0 : RatFunc(Rational(1)) / c0;
    for (long i = 0; i < std::abs(e); ++i) scale *= base;
    return scale * s;
}

} // namespace

SeriesY gf_series(const GFSpec& spec, unsigned K) {
    SeriesY acc = SeriesY::one(K);
    for (const auto& f : spec.factors) acc *= factor_series(f, K);
    if (!spec.exp_arg.empty()) {
        SeriesY arg = to_series(spec.exp_arg, K);
        if (!arg.constant_term_zero())
            throw DegenerateParameterError("generating function exp argument nonzero at y=0");
        acc *= series_exp(arg, K);
    }
    return acc;
}

std::vector<Poly> expand_gf(const GFSpec& spec, unsigned K) {
    SeriesY s = gf_series(spec, K);
    std::vector<Poly> out;
    out.reserve(K + 1);
    for (unsigned nu = 0; nu <= K; ++nu) {
        if (!s[nu].is_polynomial())
            throw NonPolynomialCoefficientError("non-polynomial GF coefficient at order " +
                                                std::to_string(nu) + ": " + s[nu].str());
        out.push_back(Rational(factorial(nu)) * s[nu].num());
    }
    return out;
}

GFSpec gf_shift(const GFSpec& spec, const Rational& h) {
    GFSpec out = spec;
    for (auto& f : out.factors)
        for (auto& c : f.inner) c = RatFunc(c.num().shift(h), c.den().shift(h));
    for (auto& c : out.exp_arg) c = RatFunc(c.num().shift(h), c.den().shift(h));
    return out;
}

namespace {

// Ratio p(X)/p(x) with X = x + s*y*g as a polynomial in y; every coefficient
// must clear p(x) exactly.
std::vector<RatFunc> composed_ratio(const Poly& p, const Poly& g, int sign) {
    unsigned deg = static_cast<unsigned>(std::max(p.degree(), 0));
    SeriesY X(deg);
    X[0] = RatFunc(Poly::x());
    if (deg >= 1) X[1] = RatFunc(sign < 0 ? -g : g);
    SeriesY comp = SeriesY::constant(RatFunc(Rational(0)), deg);
    for (size_t i = p.coeffs().size(); i-- > 0;)
        comp = comp * X + SeriesY::constant(RatFunc(Poly(p[i])), deg);
    std::vector<RatFunc> out(deg + 1);
    RatFunc px{p};
    for (unsigned i = 0; i <= deg; ++i) out[i] = comp[i] / px;
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

} // namespace

GFSpec gf_sigma_weight(const Poly& sigma, const Poly& w, const Rational& npow,
                       unsigned l, int sign) {
    if (sigma.is_zero() || w.is_zero())
        throw DegenerateParameterError("general closed form: zero sigma or weight");
    GFSpec spec;
    Poly g = sigma * w;
    if (!w.is_constant() && !npow.is_zero())
        spec.factors.push_back({composed_ratio(w, g, sign), -npow});
    if (!sigma.is_constant() && l > 0)
        spec.factors.push_back({composed_ratio(sigma, g, sign), Rational(static_cast<long>(l))});
    if (spec.factors.empty())
        spec.factors.push_back({{RatFunc(Rational(1))}, Rational(1)});
    return spec;
}

GFSpec gf_weight_pair(const Poly& w, const Poly& sigma, const Rational& a,
                      const Rational& b, unsigned l) {
    if (sigma.is_zero() || w.is_zero())
        throw DegenerateParameterError("general closed form: zero sigma or weight");
    GFSpec spec;
    Poly g = sigma * w;
    Rational lr(static_cast<long>(l));
    if (!w.is_constant() && a + lr != Rational(0))
        spec.factors.push_back({composed_ratio(w, g, 1), a + lr});
    if (!sigma.is_constant() && b + lr != Rational(0))
        spec.factors.push_back({composed_ratio(sigma, g, 1), b + lr});
    if (spec.factors.empty())
        spec.factors.push_back({{RatFunc(Rational(1))}, Rational(1)});
    return spec;
}

bool gf_same_factors(const GFSpec& a, const GFSpec& b) {
    auto canon = [](const GFSpec& s) {
        std::vector<std::pair<std::vector<RatFunc>, Rational>> fs;
        for (const auto& f : s.factors) {
            std::vector<RatFunc> inner = f.inner;
            while (inner.size() > 1 && inner.back().is_zero()) inner.pop_back();
            // trivial factors carry no content
            if (f.exponent.is_zero() || inner.size() <= 1) continue;
            fs.emplace_back(std::move(inner), f.exponent);
        }
        std::sort(fs.begin(), fs.end(), [](const auto& x, const auto& y) {
            if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
            for (size_t i = 0; i < x.first.size(); ++i) {
                int c = Poly::cmp(x.first[i].num(), y.first[i].num());
                if (c != 0) return c < 0;
                c = Poly::cmp(x.first[i].den(), y.first[i].den());
                if (c != 0) return c < 0;
            }
            return cmp(x.second, y.second) < 0;
        });
        return fs;
    };
    auto fa = canon(a), fb = canon(b);
    if (fa.size() != fb.size()) return false;
    for (size_t i = 0; i < fa.size(); ++i) {
        if (fa[i].second != fb[i].second) return false;
        if (fa[i].first.size() != fb[i].first.size()) return false;
        for (size_t j = 0; j < fa[i].first.size(); ++j)
            if (fa[i].first[j] != fb[i].first[j]) return false;
    }
    auto ea = a.exp_arg, eb = b.exp_arg;
    while (!ea.empty() && ea.back().is_zero()) ea.pop_back();
    while (!eb.empty() && eb.back().is_zero()) eb.pop_back();
    if (ea.size() != eb.size()) return false;
    for (size_t i = 0; i < ea.size(); ++i)
        if (ea[i] != eb[i]) return false;
    return true;
}

} // namespace comppoly
