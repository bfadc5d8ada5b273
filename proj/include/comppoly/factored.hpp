#ifndef COMPPOLY_FACTORED_HPP
#define COMPPOLY_FACTORED_HPP

#include "comppoly/poly.hpp"
#include "comppoly/ratfunc.hpp"

#include <utility>
#include <vector>

namespace comppoly {

/// One term m(x) * prod base_i(x)^{e_i} * exp(q(x)).
/// After normalization, bases are integer-primitive, pairwise distinct,
/// carry no exponent that is a non-negative integer, and the multiplier
/// is not divisible by any base.
struct FactoredTerm {
    Poly multiplier;
    std::vector<std::pair<Poly, Rational>> bases;
    Poly exp_arg;
};

/// Finite sum of factored terms, closed under d/dx. Kept normalized:
/// terms with the same exponential argument whose base exponents differ
/// by integers are merged, aligned to the minimum exponent.
class FactoredExpr {
public:
    FactoredExpr() = default;

    static FactoredExpr from_poly(const Poly& p);
    static FactoredExpr make_term(Poly multiplier,
                                  std::vector<std::pair<Poly, Rational>> bases,
                                  Poly exp_arg = Poly());

    const std::vector<FactoredTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend FactoredExpr operator+(const FactoredExpr& a, const FactoredExpr& b);
    friend FactoredExpr operator-(const FactoredExpr& a, const FactoredExpr& b);
    friend FactoredExpr operator*(const FactoredExpr& a, const FactoredExpr& b);
    friend FactoredExpr operator*(const Poly& p, const FactoredExpr& e);
    friend FactoredExpr operator*(const Rational& s, const FactoredExpr& e);
    FactoredExpr operator-() const;

    friend bool operator==(const FactoredExpr& a, const FactoredExpr& b);
    friend bool operator!=(const FactoredExpr& a, const FactoredExpr& b) { return !(a == b); }

    /// Extracts a plain polynomial; throws NonPolynomialResidueError when
    /// bases or exponentials survive normalization.
    Poly expect_poly() const;

    /// Numeric evaluation for spot checks; bases must be positive at x.
    double eval_double(double x) const;

    std::string str() const;

    friend FactoredExpr fe_diff(const FactoredExpr& e);

private:
    explicit FactoredExpr(std::vector<FactoredTerm> terms);
    void normalize();
    std::vector<FactoredTerm> terms_;
};

/// Formal derivative of a factored expression.
FactoredExpr fe_diff(const FactoredExpr& e);

/// Which Pearson form the stated right side belongs to:
/// WeightPrime checks sigma*w' = rhs*w, ProductPrime checks (sigma*w)' = rhs*w.
enum class PearsonForm { WeightPrime, ProductPrime };

bool pearson_check(const Poly& sigma, const FactoredExpr& w, const RatFunc& rhs,
                   PearsonForm form);

} // namespace comppoly

#endif
