#ifndef COMPPOLY_FAMILIES_HPP
#define COMPPOLY_FAMILIES_HPP

#include "comppoly/genfun.hpp"
#include "comppoly/rodrigues.hpp"

#include <optional>
#include <string>
#include <vector>

namespace comppoly {

enum class Family { Legendre, Confluent, Hypergeometric, RelHermite, PreLaguerre, General };
enum class Route { Rodrigues, GenFunc, Recursion, Explicit };

std::string family_name(Family f);
std::string route_name(Route r);
std::optional<Family> family_from_name(const std::string& s);
std::optional<Route> route_from_name(const std::string& s);

/// Family identifier, its parameters, and the degree index l.
struct FamilySpec {
    Family family = Family::Legendre;
    std::optional<Rational> c, a, b, N;
    Poly sigma, w;        // General only
    int sign = 1;         // General only
    unsigned l = 0;

    /// Throws std::invalid_argument naming the missing/degenerate parameter.
    void validate() const;

    static FamilySpec legendre(unsigned l);
    static FamilySpec confluent(const Rational& c, unsigned l);
    static FamilySpec hypergeometric(const Rational& a, const Rational& b,
                                     const Rational& c, unsigned l);
    static FamilySpec rel_hermite(const Rational& N);
    static FamilySpec pre_laguerre(const Rational& N, unsigned l);
    static FamilySpec general(const Poly& sigma, const Poly& w, const Rational& N,
                              unsigned l, int sign = 1);
};

bool route_available(Family f, Route r);

/// The complementary polynomial of index nu by the requested route.
Poly cp(const FamilySpec& spec, unsigned nu, Route route);

/// [P_0 .. P_nu_max]; cheaper than repeated cp calls for series routes.
std::vector<Poly> cp_upto(const FamilySpec& spec, unsigned nu_max, Route route);

RodriguesSpec family_rodrigues(const FamilySpec& spec);
GFSpec family_gf(const FamilySpec& spec);

/// Normalization constant linking P_{l-m}(x,l) to the m-th derivative part
/// of the classical Legendre polynomial.
Rational legendre_norm(unsigned l, unsigned m);

/// Classical P_l over the rationals (for the normalization chain and the
/// translation probe).
Poly legendre_p(unsigned l);

/// Classical (physicists') Hermite polynomial via its recurrence.
Poly hermite_h(unsigned n);

/// Terminating Kummer series M(-nu, C, x); DenominatorDegeneracyError when a
/// Pochhammer denominator vanishes.
Poly kummer_poly(unsigned nu, const Rational& Cpar);

/// Terminating Gauss series F(-nu, B; C; x).
Poly gauss_poly(unsigned nu, const Rational& Bpar, const Rational& Cpar);

struct ParamMap {
    Rational A, B, C;
};
ParamMap param_map(const FamilySpec& spec, unsigned nu);

/// Per N, max |coefficient| gap between the degree-n family polynomial and
/// its large-N target (classical Hermite, or the c=1 confluent kernel).
std::vector<std::pair<Rational, Rational>>
classical_limit_drift(Family family, unsigned n, const std::vector<Rational>& N_values);

} // namespace comppoly

#endif
