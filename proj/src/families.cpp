#include "comppoly/families.hpp"

#include "comppoly/combinatorics.hpp"
#include "comppoly/errors.hpp"

#include <stdexcept>

namespace comppoly {

namespace {

const Rational kOne(1);

Poly px() { return Poly::x(); }

Poly one_minus_x() { return Poly(std::vector<Rational>{Rational(1), Rational(-1)}); }

Poly one_minus_x2() { return Poly(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)}); }

// 1 + x/N
Poly one_plus_x_over(const Rational& N) {
    return Poly(std::vector<Rational>{Rational(1), kOne / N});
}

// 1 + x^2/N
Poly one_plus_x2_over(const Rational& N) {
    return Poly(std::vector<Rational>{Rational(1), Rational(0), kOne / N});
}

} // namespace

std::string family_name(Family f) {
    switch (f) {
    case Family::Legendre: return "legendre";
    case Family::Confluent: return "confluent";
    case Family::Hypergeometric: return "hypergeometric";
    case Family::RelHermite: return "relhermite";
    case Family::PreLaguerre: return "prelaguerre";
    case Family::General: return "general";
    }
    return "?";
}

std::string route_name(Route r) {
    switch (r) {
    case Route::Rodrigues: return "rodrigues";
    case Route::GenFunc: return "genfunc";
    case Route::Recursion: return "recursion";
    case Route::Explicit: return "explicit";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    for (Family f : {Family::Legendre, Family::Confluent, Family::Hypergeometric,
                     Family::RelHermite, Family::PreLaguerre, Family::General})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

std::optional<Route> route_from_name(const std::string& s) {
    for (Route r : {Route::Rodrigues, Route::GenFunc, Route::Recursion, Route::Explicit})
        if (route_name(r) == s) return r;
    return std::nullopt;
}

FamilySpec FamilySpec::legendre(unsigned l) {
    FamilySpec s;
    s.family = Family::Legendre;
    s.l = l;
    return s;
}

FamilySpec FamilySpec::confluent(const Rational& c, unsigned l) {
    FamilySpec s;
    s.family = Family::Confluent;
    s.c = c;
    s.l = l;
    return s;
}

FamilySpec FamilySpec::hypergeometric(const Rational& a, const Rational& b,
                                      const Rational& c, unsigned l) {
    FamilySpec s;
    s.family = Family::Hypergeometric;
    s.a = a;
    s.b = b;
    s.c = c;
    s.l = l;
    return s;
}

FamilySpec FamilySpec::rel_hermite(const Rational& N) {
    FamilySpec s;
    s.family = Family::RelHermite;
    s.N = N;
    return s;
}

FamilySpec FamilySpec::pre_laguerre(const Rational& N, unsigned l) {
    FamilySpec s;
    s.family = Family::PreLaguerre;
    s.N = N;
    s.l = l;
    return s;
}

FamilySpec FamilySpec::general(const Poly& sigma, const Poly& w, const Rational& N,
                               unsigned l, int sign) {
    FamilySpec s;
    s.family = Family::General;
    s.sigma = sigma;
    s.w = w;
    s.N = N;
    s.l = l;
    s.sign = sign;
    return s;
}

void FamilySpec::validate() const {
    switch (family) {
    case Family::Legendre:
        break;
    case Family::Confluent:
        if (!c) throw std::invalid_argument("missing --c");
        break;
    case Family::Hypergeometric:
        if (!a) throw std::invalid_argument("missing --a");
        if (!b) throw std::invalid_argument("missing --b");
        if (!c) throw std::invalid_argument("missing --c");
        break;
    case Family::RelHermite:
        if (!N) throw std::invalid_argument("missing --N");
        if (N->sign() <= 0) throw std::invalid_argument("degenerate --N: must be positive");
        break;
    case Family::PreLaguerre:
        if (!N) throw std::invalid_argument("missing --N");
        if (N->sign() <= 0) throw std::invalid_argument("degenerate --N: must be positive");
        break;
    case Family::General:
        if (sigma.is_zero() || w.is_zero())
            throw std::invalid_argument("degenerate general spec: zero sigma or weight");
        if (!N) throw std::invalid_argument("general spec requires the weight power N");
        break;
    }
}

bool route_available(Family f, Route r) {
    switch (r) {
    case Route::Rodrigues:
    case Route::GenFunc:
        return true;
    case Route::Recursion:
        return f != Family::General;
    case Route::Explicit:
        return f == Family::Confluent || f == Family::Hypergeometric ||
               f == Family::PreLaguerre;
    }
    return false;
}

RodriguesSpec family_rodrigues(const FamilySpec& spec) {
    spec.validate();
    RodriguesSpec r;
    r.l = spec.l;
    switch (spec.family) {
    case Family::Legendre:
        r.sigma_factors = {one_minus_x2()};
        break;
    case Family::Confluent:
        r.sigma_factors = {px()};
        r.weight_bases = {{px(), *spec.c - kOne}};
        r.exp_arg = -px();
        break;
    case Family::Hypergeometric:
        r.sigma_factors = {px(), one_minus_x()};
        r.weight_bases = {{px(), *spec.c - kOne}, {one_minus_x(), *spec.a + *spec.b - *spec.c}};
        break;
    case Family::RelHermite:
        r.l = 0;
        r.weight_bases = {{one_plus_x2_over(*spec.N), -*spec.N}};
        r.sign = -1;
        break;
    case Family::PreLaguerre:
        r.sigma_factors = {px()};
        r.weight_bases = {{one_plus_x_over(*spec.N), -*spec.N}};
        break;
    case Family::General:
        r.sigma_factors = {spec.sigma};
        r.weight_bases = {{spec.w, -*spec.N}};
        r.sign = spec.sign;
        break;
    }
    return r;
}

GFSpec family_gf(const FamilySpec& spec) {
    spec.validate();
    GFSpec g;
    auto lr = Rational(static_cast<long>(spec.l));
    switch (spec.family) {
    case Family::Legendre: {
        Poly m1(std::vector<Rational>{Rational(-1), Rational(-1)});  // -(1+x)
        g.factors.push_back({{RatFunc(kOne), RatFunc(m1)}, lr});
        g.factors.push_back({{RatFunc(kOne), RatFunc(one_minus_x())}, lr});
        break;
    }
    case Family::Confluent:
        g.factors.push_back({{RatFunc(kOne), RatFunc(kOne)}, *spec.c - kOne + lr});
        g.exp_arg = {RatFunc(Rational(0)), RatFunc(-px())};
        break;
    case Family::Hypergeometric:
        g.factors.push_back({{RatFunc(kOne), RatFunc(one_minus_x())}, lr + *spec.c - kOne});
        g.factors.push_back({{RatFunc(kOne), RatFunc(-px())}, lr + *spec.a + *spec.b - *spec.c});
        break;
    case Family::RelHermite: {
        // [(1 - xy/N)^2 + y^2/N]^{-N} rewritten as (1+u)^{-N},
        // u = -2xy/N + y^2 (x^2 + N)/N^2.
        const Rational& N = *spec.N;
        Poly u1 = (Rational(-2) / N) * px();
        Poly u2 = (kOne / (N * N)) * (px() * px() + Poly(N));
        g.factors.push_back({{RatFunc(kOne), RatFunc(u1), RatFunc(u2)}, -N});
        break;
    }
    case Family::PreLaguerre:
        g.factors.push_back({{RatFunc(kOne), RatFunc(one_plus_x_over(*spec.N))}, lr});
        g.factors.push_back({{RatFunc(kOne), RatFunc((kOne / *spec.N) * px())}, -*spec.N});
        break;
    case Family::General:
        return gf_sigma_weight(spec.sigma, spec.w, *spec.N, spec.l, spec.sign);
    }
    return g;
}

namespace {

std::vector<Poly> cp_recursion(const FamilySpec& spec, unsigned nu_max) {
    std::vector<Poly> out;
    out.reserve(nu_max + 1);
    out.push_back(Poly(kOne));
    Poly x = px();
    Rational lr(static_cast<long>(spec.l));
    for (unsigned nu = 1; nu <= nu_max; ++nu) {
        Rational nr(static_cast<long>(nu));
        switch (spec.family) {
        case Family::Legendre: {
            // P_nu = 2(nu-1-l)x P_{nu-1} + (nu-1)(nu-2l-2)(1-x^2) P_{nu-2}
            Poly p = (Rational(2) * (nr - kOne - lr)) * (x * out[nu - 1]);
            if (nu >= 2)
                p += ((nr - kOne) * (nr - Rational(2) * lr - Rational(2))) *
                     (one_minus_x2() * out[nu - 2]);
            out.push_back(p);
            break;
        }
        case Family::Confluent: {
            // P_{nu+1} = (c-1+l-nu-x) P_nu - nu x P_{nu-1}
            Rational k = *spec.c - kOne + lr - (nr - kOne);
            Poly p = (Poly(k) - x) * out[nu - 1];
            if (nu >= 2) p -= ((nr - kOne)) * (x * out[nu - 2]);
            out.push_back(p);
            break;
        }
        case Family::Hypergeometric: {
            // P_{nu+1} = [l+c-nu-1 - x(2l-2nu+a+b-1)] P_nu
            //            - nu(2l+a+b-nu) x(1-x) P_{nu-1},
            // the expansion of the generating function's y-derivative PDE.
            Rational m = nr - kOne;  // recursion index
            Rational abc = *spec.a + *spec.b;
            Poly head = Poly(lr + *spec.c - m - kOne) -
                        (Rational(2) * lr - Rational(2) * m + abc - kOne) * x;
            Poly p = head * out[nu - 1];
            if (nu >= 2)
                p -= (m * (Rational(2) * lr + abc - m)) *
                     ((x * one_minus_x()) * out[nu - 2]);
            out.push_back(p);
            break;
        }
        case Family::RelHermite: {
            // H_n = (2x/N)(N+n-1) H_{n-1} - (1+x^2/N) H'_{n-1}
            const Rational& N = *spec.N;
            Poly p = ((Rational(2) / N) * (N + nr - kOne)) * (x * out[nu - 1]) -
                     one_plus_x2_over(N) * out[nu - 1].derivative();
            out.push_back(p);
            break;
        }
        case Family::PreLaguerre: {
            // P_{nu+1} = [(1+x/N)(l-nu) - (1+nu/N)x] P_nu + x(1+x/N) P'_nu
            const Rational& N = *spec.N;
            Rational m = nr - kOne;
            Poly head = (lr - m) * one_plus_x_over(N) - (kOne + m / N) * x;
            Poly p = head * out[nu - 1] + (x * one_plus_x_over(N)) * out[nu - 1].derivative();
            out.push_back(p);
            break;
        }
        case Family::General:
            throw std::invalid_argument("recursion route unavailable for general specs");
        }
    }
    return out;
}

Poly cp_explicit(const FamilySpec& spec, unsigned nu) {
    Poly x = px();
    Rational lr(static_cast<long>(spec.l));
    Rational nufac{BigInt(factorial(nu))};
    switch (spec.family) {
    case Family::Confluent: {
        // sum_mu C(c-1+l, nu-mu) nu!/mu! (-x)^mu
        Poly p;
        for (unsigned mu = 0; mu <= nu; ++mu) {
            Rational coef = gen_binom(*spec.c - kOne + lr, nu - mu) *
                            Rational(BigInt(factorial(nu)), BigInt(factorial(mu)));
            p += coef * Poly::monomial(mu, Rational(mu % 2 == 0 ? 1 : -1));
        }
        return p;
    }
    case Family::Hypergeometric: {
        // nu! sum_lam C(l+a+b-c, lam) C(l+c-1, nu-lam) (1-x)^{nu-lam} (-x)^lam
        Poly p;
        Rational e1 = lr + *spec.a + *spec.b - *spec.c;
        Rational e2 = lr + *spec.c - kOne;
        for (unsigned lam = 0; lam <= nu; ++lam) {
            Rational coef = gen_binom(e1, lam) * gen_binom(e2, nu - lam);
            Poly term = one_minus_x().pow(nu - lam) * (-x).pow(lam);
            p += coef * term;
        }
        return nufac * p;
    }
    case Family::PreLaguerre: {
        // nu! sum_mu C(l,mu) C(-N, nu-mu) (x/N)^{nu-mu} (1+x/N)^mu
        const Rational& N = *spec.N;
        Poly p;
        for (unsigned mu = 0; mu <= std::min(nu, spec.l); ++mu) {
            Rational coef = gen_binom(lr, mu) * gen_binom(-N, nu - mu);
            Poly term = ((kOne / N) * x).pow(nu - mu) * one_plus_x_over(N).pow(mu);
            p += coef * term;
        }
        return nufac * p;
    }
    default:
        throw std::invalid_argument("explicit route unavailable for family " +
                                    family_name(spec.family));
    }
}

} // namespace

std::vector<Poly> cp_upto(const FamilySpec& spec, unsigned nu_max, Route route) {
    spec.validate();
    if (!route_available(spec.family, route))
        throw std::invalid_argument("route " + route_name(route) + " unavailable for family " +
                                    family_name(spec.family));
    if (spec.family == Family::Legendre && nu_max > spec.l)
        throw std::invalid_argument("nu exceeds l for the Legendre family");
    switch (route) {
    case Route::Rodrigues: {
        RodriguesSpec r = family_rodrigues(spec);
        std::vector<Poly> out;
        out.reserve(nu_max + 1);
        for (unsigned nu = 0; nu <= nu_max; ++nu) out.push_back(rodrigues_cp(r, nu));
        return out;
    }
    case Route::GenFunc:
        return expand_gf(family_gf(spec), nu_max);
    case Route::Recursion:
        return cp_recursion(spec, nu_max);
    case Route::Explicit: {
        std::vector<Poly> out;
        out.reserve(nu_max + 1);
        for (unsigned nu = 0; nu <= nu_max; ++nu) out.push_back(cp_explicit(spec, nu));
        return out;
    }
    }
    throw std::logic_error("unreachable");
}

Poly cp(const FamilySpec& spec, unsigned nu, Route route) {
    switch (route) {
    case Route::Rodrigues:
        spec.validate();
        if (spec.family == Family::Legendre && nu > spec.l)
            throw std::invalid_argument("nu exceeds l for the Legendre family");
        return rodrigues_cp(family_rodrigues(spec), nu);
    case Route::Explicit:
        spec.validate();
        if (!route_available(spec.family, route))
            throw std::invalid_argument("explicit route unavailable for family " +
                                        family_name(spec.family));
        return cp_explicit(spec, nu);
    default:
        return cp_upto(spec, nu, route).back();
    }
}

Rational legendre_norm(unsigned l, unsigned m) {
    if (m > l) throw std::invalid_argument("legendre_norm: m exceeds l");
    auto even_case = [](unsigned l_, unsigned m_) {
        Rational sign(m_ % 2 == 0 ? 1 : -1);
        Rational binom = gen_binom(Rational(static_cast<long>(l_)),
                                   (l_ - m_) / 2);
        Rational num{BigInt(double_fact(static_cast<long>(l_ - m_)) *
                            factorial(l_ - m_))};
        Rational den{BigInt(double_fact(static_cast<long>(l_) + m_ - 1))};
        return sign * binom * num / den;
    };
    if ((l - m) % 2 == 0) return even_case(l, m);
    if (m == 0) {
        // l odd: one upward step from the even index m = 1.
        Rational next = even_case(l, 1);
        return next * Rational(static_cast<long>(l)) * Rational(static_cast<long>(l) + 1);
    }
    // One downward step from the even index m-1.
    Rational prev = even_case(l, m - 1);
    Rational denom = Rational(static_cast<long>(l - m + 1)) * Rational(static_cast<long>(l + m));
    return prev / denom;
}

Poly legendre_p(unsigned l) {
    Poly base = Poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(1)}).pow(l);
    Poly d = base.derivative(l);
    Rational scale = kOne / (Rational(2).pow_int(l) * Rational(BigInt(factorial(l))));
    return scale * d;
}

Poly hermite_h(unsigned n) {
    Poly h0(kOne);
    if (n == 0) return h0;
    Poly h1 = Rational(2) * px();
    for (unsigned k = 1; k < n; ++k) {
        Poly h2 = Rational(2) * (px() * h1) - (Rational(2) * Rational(static_cast<long>(k))) * h0;
        h0 = std::move(h1);
        h1 = std::move(h2);
    }
    return h1;
}

namespace {

Poly terminating_series(unsigned nu, const Rational* Bpar, const Rational& Cpar) {
    std::vector<Rational> coeffs(nu + 1, Rational(0));
    Rational mnu(-static_cast<long>(nu));
    for (unsigned k = 0; k <= nu; ++k) {
        Rational den = pochhammer(Cpar, k);
        if (den.is_zero())
            throw DenominatorDegeneracyError("Pochhammer denominator vanishes at k=" +
                                             std::to_string(k) + " for C=" + Cpar.str());
        Rational num = pochhammer(mnu, k);
        if (Bpar) num *= pochhammer(*Bpar, k);
        coeffs[k] = num / (den * Rational(BigInt(factorial(k))));
    }
    return Poly(std::move(coeffs));
}

} // namespace

Poly kummer_poly(unsigned nu, const Rational& Cpar) {
    return terminating_series(nu, nullptr, Cpar);
}

Poly gauss_poly(unsigned nu, const Rational& Bpar, const Rational& Cpar) {
    return terminating_series(nu, &Bpar, Cpar);
}

ParamMap param_map(const FamilySpec& spec, unsigned nu) {
    if (spec.family != Family::Hypergeometric)
        throw std::invalid_argument("param_map applies to the hypergeometric family");
    spec.validate();
    Rational lr(static_cast<long>(spec.l));
    Rational nr(static_cast<long>(nu));
    return ParamMap{-nr, Rational(2) * lr - nr + *spec.a + *spec.b, lr - nr + *spec.c};
}

std::vector<std::pair<Rational, Rational>>
classical_limit_drift(Family family, unsigned n, const std::vector<Rational>& N_values) {
    if (family != Family::RelHermite && family != Family::PreLaguerre)
        throw std::invalid_argument("limit drift applies to relhermite/prelaguerre");
    Poly target = family == Family::RelHermite
                      ? hermite_h(n)
                      : cp(FamilySpec::confluent(kOne, n), n, Route::Rodrigues);
    std::vector<std::pair<Rational, Rational>> out;
    for (const Rational& N : N_values) {
        FamilySpec spec = family == Family::RelHermite ? FamilySpec::rel_hermite(N)
                                                       : FamilySpec::pre_laguerre(N, n);
        Poly p = cp(spec, n, Route::GenFunc);
        Poly diff = p - target;
        Rational dev(0);
        for (const Rational& coeff : diff.coeffs()) {
            Rational a = coeff.abs();
            if (dev < a) dev = a;
        }
        out.emplace_back(N, dev);
    }
    return out;
}

} // namespace comppoly
