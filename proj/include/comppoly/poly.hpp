#ifndef COMPPOLY_POLY_HPP
#define COMPPOLY_POLY_HPP

#include "comppoly/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace comppoly {

/// Univariate polynomial over Rational, dense ascending coefficients.
/// Canonical: trailing zeros trimmed; the zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& constant);
    Poly(long constant) : Poly(Rational(constant)) {}
    explicit Poly(std::vector<Rational> coeffs);

    static Poly x() { return monomial(1); }
    static Poly monomial(unsigned k, const Rational& c = Rational(1));

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == Rational(1); }

    /// Coefficient of x^i (zero beyond the degree).
    const Rational& operator[](size_t i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const { return is_zero() ? Rational(0) : c_.back(); }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend Poly operator*(const Rational& s, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly derivative() const;
    Poly derivative(unsigned k) const;
    Rational eval(const Rational& x) const;
    double eval_double(double x) const;
    /// Composition x -> x + h.
    Poly shift(const Rational& h) const;
    Poly pow(unsigned e) const;

    /// Quotient and remainder; q must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q);

    std::string str() const;

    /// Deterministic total order (by degree, then coefficients from the top).
    static int cmp(const Poly& a, const Poly& b);

    friend std::ostream& operator<<(std::ostream& os, const Poly& p);

private:
    void trim();
    std::vector<Rational> c_;
};

/// Exact division; throws NonDivisibleError when q does not divide p.
Poly exact_quotient(const Poly& p, const Poly& q);

bool divides(const Poly& q, const Poly& p);

/// Monic gcd over the rationals; throws std::invalid_argument when both zero.
Poly gcd(const Poly& a, const Poly& b);

} // namespace comppoly

#endif
