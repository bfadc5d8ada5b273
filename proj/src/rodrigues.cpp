#include "comppoly/rodrigues.hpp"

#include "comppoly/errors.hpp"

namespace comppoly {

namespace {

// sigma factors folded into the weight list: proportional polynomials
// accumulate exponents so the prefactor exponent nu - eff(b) comes out right.
std::vector<std::pair<Poly, Rational>> effective_bases(const RodriguesSpec& spec) {
    std::vector<std::pair<Poly, Rational>> eff;
    auto add = [&eff](const Poly& b, const Rational& e) {
        if (b.is_constant())
            throw DegenerateParameterError("rodrigues spec: constant base");
        for (auto& [ob, oe] : eff) {
            if (ob == b) {
                oe += e;
                return;
            }
        }
        eff.emplace_back(b, e);
    };
    for (const Poly& f : spec.sigma_factors) {
        if (f.is_one() || f == Poly(Rational(1))) continue;
        add(f, Rational(static_cast<long>(spec.l)));
    }
    for (const auto& [b, e] : spec.weight_bases) add(b, e);
    return eff;
}

} // namespace

FactoredExpr rodrigues_inner(const RodriguesSpec& spec) {
    auto eff = effective_bases(spec);
    std::vector<std::pair<Poly, Rational>> bases;
    for (auto& [b, e] : eff)
        if (!e.is_zero()) bases.emplace_back(b, e);
    return FactoredExpr::make_term(Poly(Rational(1)), std::move(bases), spec.exp_arg);
}

Poly rodrigues_cp(const RodriguesSpec& spec, unsigned nu) {
    auto eff = effective_bases(spec);
    FactoredExpr d = rodrigues_inner(spec);
    for (unsigned i = 0; i < nu; ++i) d = fe_diff(d);

    std::vector<std::pair<Poly, Rational>> pre;
    Rational nur(static_cast<long>(nu));
    for (auto& [b, e] : eff) {
        Rational pe = nur - e;
        if (!pe.is_zero()) pre.emplace_back(b, pe);
    }
    FactoredExpr prefactor = FactoredExpr::make_term(Poly(Rational(1)), std::move(pre), -spec.exp_arg);
    Poly result = (prefactor * d).expect_poly();
    if (spec.sign < 0 && nu % 2 == 1) result = -result;
    return result;
}

} // namespace comppoly
