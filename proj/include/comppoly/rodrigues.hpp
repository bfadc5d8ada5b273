#ifndef COMPPOLY_RODRIGUES_HPP
#define COMPPOLY_RODRIGUES_HPP

#include "comppoly/factored.hpp"

namespace comppoly {

/// Differentiate-and-cancel pattern shared by every family here:
///
///   P_nu = sign^nu * prod_b b^{nu - eff(b)} * exp(-exp_arg)
///          * d^nu [ prod_f f^l * prod_b b^{e_b} * exp(exp_arg) ]
///
/// where eff(b) accumulates l for each sigma factor proportional to b plus
/// the weight exponents e_b. Covers sigma^{nu-l} w^{-1} d^nu (sigma^l w)
/// kernels as well as sigma^{nu-l} w^{N+nu} d^nu (sigma^l w^{-N}) ones.
struct RodriguesSpec {
    std::vector<Poly> sigma_factors;                    // each enters to the power l
    unsigned l = 0;
    std::vector<std::pair<Poly, Rational>> weight_bases;
    Poly exp_arg;
    int sign = 1;                                       // +1 or -1, applied per derivative
};

/// nu-th complementary polynomial of the spec. Throws
/// NonPolynomialResidueError when cancellation fails and
/// DegenerateParameterError on exponent collisions.
Poly rodrigues_cp(const RodriguesSpec& spec, unsigned nu);

/// Inner object prod f^l * prod b^e * exp(q) as a factored expression.
FactoredExpr rodrigues_inner(const RodriguesSpec& spec);

} // namespace comppoly

#endif
