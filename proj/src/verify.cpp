#include "comppoly/verify.hpp"

#include "comppoly/combinatorics.hpp"
#include "comppoly/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace comppoly {

namespace {

Poly px() { return Poly::x(); }

Poly poly_1mx() { return Poly(std::vector<Rational>{Rational(1), Rational(-1)}); }

Poly poly_1mx2() { return Poly(std::vector<Rational>{Rational(1), Rational(0), Rational(-1)}); }

Poly poly_1px_over(const Rational& N) {
    return Poly(std::vector<Rational>{Rational(1), Rational(1) / N});
}

// p(a0 + a1*x)
Poly sub_linear(const Poly& p, const Rational& a0, const Rational& a1) {
    Poly lin(std::vector<Rational>{a0, a1});
    Poly r;
    for (size_t i = p.coeffs().size(); i-- > 0;) r = r * lin + Poly(p[i]);
    return r;
}

SeriesY poly_series(const std::vector<Poly>& ycoeffs, unsigned K) {
    SeriesY s(K);
    for (size_t i = 0; i < ycoeffs.size() && i <= K; ++i) s[i] = RatFunc(ycoeffs[i]);
    return s;
}

// Generating function with x fixed to a rational sample.
GFSpec gf_at_x(const GFSpec& spec, const Rational& x0) {
    GFSpec out = spec;
    auto ev = [&x0](RatFunc& c) {
        Rational d = c.den().eval(x0);
        if (d.is_zero()) throw DegenerateParameterError("gf_at_x: denominator vanishes");
        c = RatFunc(c.num().eval(x0) / d);
    };
    for (auto& f : out.factors)
        for (auto& c : f.inner) ev(c);
    for (auto& c : out.exp_arg) ev(c);
    return out;
}

struct Ctx {
    const GridConfig& grid;
    const Mutation* mut;
    bool stop_on_fail;
    const char* current = nullptr;
    bool any_fail = false;
    std::vector<CheckReport> reports;

    Rational K(int slot, long base) const {
        if (mut && mut->slot == slot && mut->check_id == current)
            return Rational(base) + mut->delta;
        return Rational(base);
    }
    long KL(int slot, long base) const { return K(slot, base).to_long(); }

    bool stop() const { return stop_on_fail && any_fail; }

    void pass(std::string point) {
        reports.push_back({current, std::move(point), "pass", "", {}});
    }
    void fail(std::string point, std::string witness) {
        any_fail = true;
        reports.push_back({current, std::move(point), "fail", std::move(witness), {}});
    }
    void outcome(std::string point, bool ok, std::string witness) {
        if (ok)
            pass(std::move(point));
        else
            fail(std::move(point), std::move(witness));
    }
    void residual_report(std::string point, bool nonzero, std::string witness,
                         std::vector<std::pair<std::string, std::string>> detail) {
        reports.push_back({current, std::move(point), nonzero ? "residual" : "pass",
                           std::move(witness), std::move(detail)});
    }
};

std::vector<Poly> ref_upto(const FamilySpec& spec, unsigned numax) {
    return cp_upto(spec, numax, Route::GenFunc);
}

std::string pt(std::initializer_list<std::pair<const char*, std::string>> kv) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) os << " ";
        first = false;
        os << k << "=" << v;
    }
    return os.str();
}

std::string nu_witness(unsigned nu, const Poly& diff) {
    return "nu=" + std::to_string(nu) + ": " + diff.str();
}

// ---------------------------------------------------------------------------
// Route agreement (slot 0 offsets the first route's output).

void routes_check(Ctx& ctx, const FamilySpec& spec, unsigned numax, const std::string& point) {
    std::vector<Route> routes = {Route::Rodrigues, Route::GenFunc, Route::Recursion};
    if (route_available(spec.family, Route::Explicit)) routes.push_back(Route::Explicit);
    std::vector<std::vector<Poly>> all;
    for (Route r : routes) all.push_back(cp_upto(spec, numax, r));
    Poly offset(ctx.K(0, 0));
    for (auto& p : all[0]) p += offset;
    for (unsigned nu = 0; nu <= numax; ++nu)
        for (size_t r = 1; r < all.size(); ++r)
            if (all[0][nu] != all[r][nu]) {
                ctx.fail(point, "nu=" + std::to_string(nu) + " " + route_name(routes[0]) + "=" +
                                    all[0][nu].str() + " vs " + route_name(routes[r]) + "=" +
                                    all[r][nu].str());
                return;
            }
    ctx.pass(point);
}

void check_L1(Ctx& ctx) {
    for (unsigned l = 0; l <= ctx.grid.legendre_lmax && !ctx.stop(); ++l)
        routes_check(ctx, FamilySpec::legendre(l), l, pt({{"l", std::to_string(l)}}));
}

void check_C1(Ctx& ctx) {
    for (const Rational& c : ctx.grid.confluent_c)
        for (unsigned l = 0; l <= ctx.grid.confluent_lmax && !ctx.stop(); ++l)
            routes_check(ctx, FamilySpec::confluent(c, l), ctx.grid.confluent_numax,
                         pt({{"c", c.str()}, {"l", std::to_string(l)}}));
}

void check_H1(Ctx& ctx) {
    for (const auto& abc : ctx.grid.hyp_abc)
        for (unsigned l = 0; l <= ctx.grid.hyp_lmax && !ctx.stop(); ++l)
            routes_check(ctx, FamilySpec::hypergeometric(abc[0], abc[1], abc[2], l),
                         ctx.grid.hyp_numax,
                         pt({{"a", abc[0].str()},
                             {"b", abc[1].str()},
                             {"c", abc[2].str()},
                             {"l", std::to_string(l)}}));
}

void check_R1(Ctx& ctx) {
    for (const Rational& N : ctx.grid.relh_N) {
        if (ctx.stop()) break;
        routes_check(ctx, FamilySpec::rel_hermite(N), ctx.grid.relh_nmax, pt({{"N", N.str()}}));
    }
}

void check_P1(Ctx& ctx) {
    for (const Rational& N : ctx.grid.prelag_N)
        for (unsigned l = 0; l <= ctx.grid.prelag_lmax && !ctx.stop(); ++l)
            routes_check(ctx, FamilySpec::pre_laguerre(N, l), ctx.grid.prelag_numax,
                         pt({{"N", N.str()}, {"l", std::to_string(l)}}));
}

// ---------------------------------------------------------------------------
// Legendre identities.

void check_L2(Ctx& ctx) {
    for (unsigned l = 0; l <= ctx.grid.legendre_lmax && !ctx.stop(); ++l) {
        auto P = ref_upto(FamilySpec::legendre(l), l);
        std::string point = pt({{"l", std::to_string(l)}});
        bool ok = true;
        std::string witness;
        for (unsigned nu = 1; nu <= l && ok; ++nu) {
            Rational nr(static_cast<long>(nu)), lr(static_cast<long>(l));
            Poly res = P[nu].derivative() +
                       (nr * (ctx.K(0, 2) * lr - nr + ctx.K(1, 1))) * P[nu - 1];
            if (!res.is_zero()) {
                ok = false;
                witness = nu_witness(nu, res);
            }
        }
        ctx.outcome(point, ok, witness);
    }
}

void check_L3(Ctx& ctx) {
    for (unsigned l = 0; l <= ctx.grid.legendre_lmax && !ctx.stop(); ++l) {
        auto P = ref_upto(FamilySpec::legendre(l), l);
        std::string point = pt({{"l", std::to_string(l)}});
        bool ok = true;
        std::string witness;
        for (unsigned nu = 1; nu <= l && ok; ++nu) {
            Rational nr(static_cast<long>(nu)), lr(static_cast<long>(l));
            Poly res = P[nu] -
                       (ctx.K(0, 2) * (nr - ctx.K(1, 1) - lr)) * (px() * P[nu - 1]);
            if (nu >= 2) {
                Poly tail = ((nr - ctx.K(2, 1)) * (nr - ctx.K(3, 2) * lr - ctx.K(4, 2))) *
                            ((Poly(ctx.K(5, 1)) - px() * px()) * P[nu - 2]);
                res -= tail;
            }
            if (!res.is_zero()) {
                ok = false;
                witness = nu_witness(nu, res);
            }
        }
        ctx.outcome(point, ok, witness);
    }
}

void check_L4(Ctx& ctx) {
    unsigned K = ctx.grid.legendre_lmax + 2;
    Rational a = ctx.K(0, 1), ysq = ctx.K(1, 1), bxy = ctx.K(2, -1);
    std::vector<Poly> mult = {Poly(a * a), (Rational(2) * a * bxy) * px(),
                              (bxy * bxy) * (px() * px()) - Poly(ysq)};
    SeriesY ms = poly_series(mult, K);
    for (unsigned l = 0; l + 1 <= ctx.grid.legendre_lmax && !ctx.stop(); ++l) {
        SeriesY lhs = ms * gf_series(family_gf(FamilySpec::legendre(l)), K);
        SeriesY rhs = gf_series(family_gf(FamilySpec::legendre(l + 1)), K);
        ctx.outcome(pt({{"l", std::to_string(l)}}), lhs == rhs, "series mismatch");
    }
}

void check_L5(Ctx& ctx) {
    for (unsigned l = 0; l + 1 <= ctx.grid.legendre_lmax && !ctx.stop(); ++l) {
        auto P = ref_upto(FamilySpec::legendre(l), l);
        auto Q = ref_upto(FamilySpec::legendre(l + 1), l + 1);
        std::string point = pt({{"l", std::to_string(l)}});
        bool ok = true;
        std::string witness;
        for (unsigned nu = 0; nu <= l && ok; ++nu) {
            Rational nr(static_cast<long>(nu));
            Poly res = Q[nu] - P[nu];
            if (nu >= 1) res += (ctx.K(0, 2) * nr) * (px() * P[nu - 1]);
            if (nu >= 2)
                res += (nr * (nr - ctx.K(1, 1))) *
                       ((Poly(ctx.K(2, 1)) - px() * px()) * P[nu - 2]);
            if (!res.is_zero()) {
                ok = false;
                witness = nu_witness(nu, res);
            }
        }
        ctx.outcome(point, ok, witness);
    }
}

void check_L6(Ctx& ctx) {
    const std::vector<Rational> xs = {Rational(3, 5), Rational(5, 13)};
    for (unsigned l = 0; l <= ctx.grid.legendre_lmax && !ctx.stop(); ++l) {
        auto P = ref_upto(FamilySpec::legendre(l), l);
        std::string point = pt({{"l", std::to_string(l)}});
        bool ok = true;
        std::string witness;
        Rational base0 = ctx.K(2, 1);  // constant in (1-y^2)^l
        for (unsigned nu = 0; nu <= l && ok; ++nu) {
            Rational got = P[nu].eval(Rational(0));
            Rational expected(0);
            if (nu % 2 == 0) {
                unsigned k = nu / 2;
                expected = Rational(BigInt(factorial(static_cast<unsigned>(ctx.KL(0, 2)) * k))) *
                           gen_binom(Rational(static_cast<long>(l)), k) *
                           base0.pow_int(static_cast<long>(l - k)) * ctx.K(1, -1).pow_int(k);
            }
            if (got != expected) {
                ok = false;
                witness = "nu=" + std::to_string(nu) + ": P(0)=" + got.str() +
                          " expected " + expected.str();
            }
        }
        for (const Rational& x0 : xs) {
            if (!ok) break;
            // half-angle substitution: 1-y(1+x) and 1+y(1-x) as
            // 1 - 2y cos^2 and 1 + 2y sin^2
            Rational c2 = (Rational(1) + x0) / Rational(2);
            Rational s2 = (Rational(1) - x0) / Rational(2);
            Poly f1(std::vector<Rational>{Rational(1), -(ctx.K(3, 2) * c2)});
            Poly f2(std::vector<Rational>{Rational(1), Rational(2) * s2});
            Poly trig = f1.pow(l) * f2.pow(l);  // polynomial in y
            for (unsigned nu = 0; nu <= l && ok; ++nu) {
                Rational expected = Rational(BigInt(factorial(nu))) * trig[nu];
                Rational got = P[nu].eval(x0);
                if (got != expected) {
                    ok = false;
                    witness = "trig x=" + x0.str() + " nu=" + std::to_string(nu) + ": " +
                              got.str() + " vs " + expected.str();
                }
            }
        }
        ctx.outcome(point, ok, witness);
    }
}

Rational norm_with_slots(const Ctx& ctx, unsigned l, unsigned m) {
    auto even_case = [&](unsigned mm) {
        long k = static_cast<long>((l - mm) / 2) + ctx.KL(0, 0);
        Rational sign(mm % 2 == 0 ? 1 : -1);
        Rational binom = k < 0 ? Rational(0)
                               : gen_binom(Rational(static_cast<long>(l)),
                                           static_cast<unsigned>(k));
        Rational num = Rational(BigInt(double_fact(static_cast<long>(l - mm) + ctx.KL(1, 0)) *
                                       factorial(l - mm)));
        Rational den{BigInt(double_fact(static_cast<long>(l) + mm - 1 + ctx.KL(2, 0)))};
        return sign * binom * num / den;
    };
    if ((l - m) % 2 == 0) return even_case(m);
    if (m == 0) {
        // l odd: one upward step from m = 1.
        Rational next = even_case(1);
        return next * Rational(static_cast<long>(l)) *
               (Rational(static_cast<long>(l)) + ctx.K(3, 1));
    }
    Rational prev = even_case(m - 1);
    Rational den = Rational(static_cast<long>(l - m + 1)) *
                   (Rational(static_cast<long>(l + m) - 1) + ctx.K(3, 1));
    return prev / den;
}

void check_L7(Ctx& ctx) {
    unsigned lmax = std::min(ctx.grid.legendre_lmax, 10u);
    for (unsigned l = 0; l <= lmax && !ctx.stop(); ++l) {
        Poly Pl = legendre_p(l);
        auto P = ref_upto(FamilySpec::legendre(l), l);
        std::string point = pt({{"l", std::to_string(l)}});
        bool ok = true;
        std::string witness;
        std::ostringstream norms;
        for (unsigned m = 0; m <= l; ++m) {
            Rational nm = norm_with_slots(ctx, l, m);
            if (m) norms << ";";
            norms << "m=" << m << ":" << nm.str();
            Poly rhs = (m % 2 == 0 ? nm : -nm) * Pl.derivative(m);
            if (P[l - m] != rhs && ok) {
                ok = false;
                witness = "m=" + std::to_string(m) + ": " + (P[l - m] - rhs).str();
            }
        }
        if (ok)
            ctx.reports.push_back(
                {ctx.current, point, "pass", "", {{"norms", norms.str()}}});
        else
            ctx.fail(point, witness);
    }
}

void check_L8(Ctx& ctx) {
    for (unsigned l = 0; l <= ctx.grid.legendre_lmax && !ctx.stop(); ++l) {
        auto P = ref_upto(FamilySpec::legendre(l), l);
        std::string point = pt({{"l", std::to_string(l)}});
        bool ok = true;
        std::string witness;
        for (unsigned nu = 1; nu <= l && ok; ++nu) {
            Rational nr(static_cast<long>(nu));
            Poly res = nr * P[nu] - (nr * (nr - ctx.K(0, 1))) * (px() * P[nu - 1]) -
                       px() * P[nu].derivative() -
                       nr * ((Poly(ctx.K(1, 1)) - px() * px()) * P[nu - 1].derivative());
            if (!res.is_zero()) {
                ok = false;
                witness = nu_witness(nu, res);
            }
        }
        ctx.outcome(point, ok, witness);
    }
}

// ---------------------------------------------------------------------------
// Confluent identities.

void check_C2(Ctx& ctx) {
    for (const Rational& c : ctx.grid.confluent_c)
        for (unsigned l = 0; l <= ctx.grid.confluent_lmax && !ctx.stop(); ++l) {
            auto P = ref_upto(FamilySpec::confluent(c, l), ctx.grid.confluent_numax);
            std::string point = pt({{"c", c.str()}, {"l", std::to_string(l)}});
            bool ok = true;
            std::string witness;
            for (unsigned nu = 1; nu <= ctx.grid.confluent_numax && ok; ++nu) {
                Rational nr(static_cast<long>(nu));
                Poly res = P[nu].derivative() + (ctx.K(0, 1) * nr) * P[nu - 1];
                if (!res.is_zero()) {
                    ok = false;
                    witness = nu_witness(nu, res);
                }
            }
            ctx.outcome(point, ok, witness);
        }
}

void check_C3(Ctx& ctx) {
    for (const Rational& c : ctx.grid.confluent_c)
        for (unsigned l = 0; l <= ctx.grid.confluent_lmax && !ctx.stop(); ++l) {
            auto P = ref_upto(FamilySpec::confluent(c, l), ctx.grid.confluent_numax);
            std::string point = pt({{"c", c.str()}, {"l", std::to_string(l)}});
            bool ok = true;
            std::string witness;
            Rational lr(static_cast<long>(l));
            for (unsigned nu = 0; nu + 1 <= ctx.grid.confluent_numax && ok; ++nu) {
                Rational nr(static_cast<long>(nu));
                Poly head = Poly(c - ctx.K(0, 1) + lr - nr) - ctx.K(1, 1) * px();
                Poly res = P[nu + 1] - head * P[nu];
                if (nu >= 1) res += (ctx.K(2, 1) * nr) * (px() * P[nu - 1]);
                if (!res.is_zero()) {
                    ok = false;
                    witness = nu_witness(nu + 1, res);
                }
            }
            ctx.outcome(point, ok, witness);
        }
}

// Skip terminating-series comparisons where a Pochhammer denominator dies.
bool kummer_degenerate(const Rational& C, unsigned nu) {
    return C.is_integer() && C.sign() <= 0 && C > Rational(-static_cast<long>(nu));
}

void check_C4(Ctx& ctx) {
    for (const Rational& c : ctx.grid.confluent_c)
        for (unsigned l = 0; l <= ctx.grid.confluent_lmax && !ctx.stop(); ++l) {
            auto P = ref_upto(FamilySpec::confluent(c, l), ctx.grid.confluent_numax);
            std::string point = pt({{"c", c.str()}, {"l", std::to_string(l)}});
            bool ok = true;
            std::string witness;
            Rational lr(static_cast<long>(l));
            for (unsigned nu = 0; nu <= ctx.grid.confluent_numax && ok; ++nu) {
                Rational nr(static_cast<long>(nu));
                Poly ode = px() * P[nu].derivative(2) +
                           (Poly(lr - nr + c + ctx.K(0, 0)) - px()) * P[nu].derivative() +
                           Poly(nr + ctx.K(1, 0)) * P[nu];
                if (!ode.is_zero()) {
                    ok = false;
                    witness = nu_witness(nu, ode);
                    break;
                }
                Rational C = lr - nr + c;
                if (kummer_degenerate(C, nu)) continue;
                try {
                    Poly match = (Rational(BigInt(factorial(nu))) *
                                  gen_binom(c - ctx.K(3, 1) + lr, nu)) *
                                 kummer_poly(nu, C + ctx.K(2, 0));
                    if (P[nu] != match) {
                        ok = false;
                        witness = nu_witness(nu, P[nu] - match);
                    }
                } catch (const DenominatorDegeneracyError& e) {
                    ok = false;
                    witness = e.what();
                }
            }
            ctx.outcome(point, ok, witness);
        }
}

void check_C5(Ctx& ctx) {
    unsigned numax = ctx.grid.comp_numax;
    for (const Rational& c : ctx.grid.confluent_c)
        for (unsigned l = 0; l <= ctx.grid.comp_lmax && !ctx.stop(); ++l) {
            auto P = ref_upto(FamilySpec::confluent(c, l), numax);
            Rational lr(static_cast<long>(l));
            for (const Rational& x2 : ctx.grid.x2_samples) {
                std::string point =
                    pt({{"c", c.str()}, {"l", std::to_string(l)}, {"x2", x2.str()}});
                bool ok = true;
                std::string witness;
                for (unsigned nu = 0; nu <= numax && ok; ++nu) {
                    Poly lhs = P[nu].shift(x2);
                    Poly rhs;
                    for (unsigned n1 = 0; n1 <= nu; ++n1)
                        for (unsigned n2 = 0; n1 + n2 <= nu; ++n2) {
                            Rational coef =
                                gen_binom(ctx.K(0, 1) - c - lr, nu - n1 - n2) *
                                Rational(BigInt(factorial(nu)),
                                         BigInt(factorial(n1) * factorial(n2)));
                            rhs += (coef * P[n2].eval(x2)) * P[n1];
                        }
                    if (lhs != rhs) {
                        ok = false;
                        witness = nu_witness(nu, lhs - rhs);
                    }
                }
                ctx.outcome(point, ok, witness);
            }
        }
}

// Binomial convolution sum_{n1} C(nu, n1) A[n1] B[nu-n1] with a slot offset.
Poly conv_sum(const Ctx& ctx, int slot, const std::vector<Poly>& A, const std::vector<Poly>& B,
              unsigned nu) {
    Poly s;
    for (unsigned n1 = 0; n1 <= nu; ++n1)
        s += gen_binom(Rational(static_cast<long>(nu)) + ctx.K(slot, 0), n1) *
             (A[n1] * B[nu - n1]);
    return s;
}

void check_C6(Ctx& ctx) {
    unsigned numax = ctx.grid.comp_numax;
    unsigned K = numax + 2;
    for (const Rational& c : ctx.grid.confluent_c) {
        if (ctx.stop()) break;
        std::map<unsigned, std::vector<Poly>> cache;
        auto polys = [&](unsigned l) -> const std::vector<Poly>& {
            auto it = cache.find(l);
            if (it == cache.end())
                it = cache.emplace(l, ref_upto(FamilySpec::confluent(c, l), numax)).first;
            return it->second;
        };
        auto series = [&](unsigned l) {
            return gf_series(family_gf(FamilySpec::confluent(c, l)), K);
        };
        for (unsigned l1 = 0; l1 <= ctx.grid.comp_lmax && !ctx.stop(); ++l1)
            for (unsigned l2 = 0; l2 <= ctx.grid.comp_lmax && !ctx.stop(); ++l2)
                for (unsigned l = 0; l <= l1 + l2; ++l) {
                    std::string point = pt({{"c", c.str()},
                                            {"l1", std::to_string(l1)},
                                            {"l2", std::to_string(l2)},
                                            {"l", std::to_string(l)}});
                    bool ok = true;
                    std::string witness;
                    for (unsigned nu = 0; nu <= numax && ok; ++nu) {
                        Poly s12 = conv_sum(ctx, 0, polys(l1), polys(l2), nu);
                        Poly ssplit = conv_sum(ctx, 0, polys(l1 + l2 - l), polys(l), nu);
                        Poly szero = conv_sum(ctx, 0, polys(l1 + l2), polys(0), nu);
                        if (s12 != ssplit || s12 != szero) {
                            ok = false;
                            witness = nu_witness(nu, s12 - ssplit);
                        }
                    }
                    if (ok) {
                        SeriesY g12 = series(l1) * series(l2);
                        if (g12 != series(l1 + l2 - l) * series(l) ||
                            g12 != series(l1 + l2) * series(0)) {
                            ok = false;
                            witness = "series mismatch";
                        }
                    }
                    ctx.outcome(point, ok, witness);
                    if (ctx.stop()) break;
                }
    }
}

void check_C7(Ctx& ctx) {
    unsigned numax = ctx.grid.comp_numax;
    unsigned K = numax + 2;
    for (const Rational& c : ctx.grid.confluent_c)
        for (unsigned l = 0; l <= ctx.grid.comp_lmax && !ctx.stop(); ++l) {
            auto P = ref_upto(FamilySpec::confluent(c, l), numax);
            Rational lr(static_cast<long>(l));
            GFSpec spec = family_gf(FamilySpec::confluent(c, l));
            for (const Rational& x2 : ctx.grid.x2_samples) {
                std::string point =
                    pt({{"c", c.str()}, {"l", std::to_string(l)}, {"x2", x2.str()}});
                bool ok = true;
                std::string witness;
                std::vector<Poly> shifted;
                for (unsigned nu = 0; nu <= numax; ++nu) shifted.push_back(P[nu].shift(x2));
                for (unsigned nu = 0; nu <= numax && ok; ++nu) {
                    Poly lhs;
                    for (unsigned lam = 0; lam <= nu; ++lam)
                        lhs += (gen_binom(c - ctx.K(0, 1) + lr, nu - lam) *
                                Rational(BigInt(factorial(nu)), BigInt(factorial(lam)))) *
                               shifted[lam];
                    Poly rhs;
                    for (unsigned n1 = 0; n1 <= nu; ++n1)
                        rhs += (gen_binom(Rational(static_cast<long>(nu)) + ctx.K(1, 0), n1) *
                                P[nu - n1].eval(x2)) *
                               P[n1];
                    if (lhs != rhs) {
                        ok = false;
                        witness = nu_witness(nu, lhs - rhs);
                    }
                }
                if (ok) {
                    SeriesY u(K);
                    u[1] = RatFunc(Rational(1));
                    SeriesY lead = series_binpow(u, c - ctx.K(0, 1) + lr, K);
                    SeriesY lhs_s = lead * gf_series(gf_shift(spec, x2), K);
                    SeriesY rhs_s = gf_series(spec, K) * gf_series(gf_at_x(spec, x2), K);
                    if (lhs_s != rhs_s) {
                        ok = false;
                        witness = "series mismatch";
                    }
                }
                ctx.outcome(point, ok, witness);
            }
        }
}

void check_C8(Ctx& ctx) {
    unsigned numax = ctx.grid.comp_numax;
    unsigned K = numax + 2;
    for (const Rational& c : ctx.grid.confluent_c)
        for (unsigned l1 = 0; l1 <= ctx.grid.comp_lmax && !ctx.stop(); ++l1)
            for (unsigned l2 = 0; l2 <= l1 && !ctx.stop(); ++l2) {
                auto P1 = ref_upto(FamilySpec::confluent(c, l1), numax);
                auto P2 = ref_upto(FamilySpec::confluent(c, l2), numax);
                auto P12 = ref_upto(FamilySpec::confluent(c, l1 + l2), numax);
                for (const Rational& x2 : ctx.grid.x2_samples) {
                    std::string point = pt({{"c", c.str()},
                                            {"l1", std::to_string(l1)},
                                            {"l2", std::to_string(l2)},
                                            {"x2", x2.str()}});
                    bool ok = true;
                    std::string witness;
                    for (unsigned nu = 0; nu <= numax && ok; ++nu) {
                        Poly lhs = P12[nu].shift(x2);
                        Poly rhs;
                        for (unsigned n1 = 0; n1 <= nu; ++n1)
                            for (unsigned n2 = 0; n1 + n2 <= nu; ++n2) {
                                Rational coef =
                                    gen_binom(ctx.K(0, 1) - c, nu - n1 - n2) *
                                    Rational(BigInt(factorial(nu)),
                                             BigInt(factorial(n1) * factorial(n2)));
                                rhs += (coef * P2[n2].eval(x2)) * P1[n1];
                            }
                        if (lhs != rhs) {
                            ok = false;
                            witness = nu_witness(nu, lhs - rhs);
                        }
                    }
                    if (ok) {
                        GFSpec s1 = family_gf(FamilySpec::confluent(c, l1));
                        GFSpec s2 = family_gf(FamilySpec::confluent(c, l2));
                        GFSpec s12 = family_gf(FamilySpec::confluent(c, l1 + l2));
                        SeriesY u(K);
                        u[1] = RatFunc(Rational(1));
                        SeriesY lead = series_binpow(u, ctx.K(0, 1) - c, K);
                        SeriesY lhs_s = gf_series(gf_shift(s12, x2), K);
                        SeriesY rhs_s =
                            lead * gf_series(s1, K) * gf_series(gf_at_x(s2, x2), K);
                        if (lhs_s != rhs_s) {
                            ok = false;
                            witness = "series mismatch";
                        }
                    }
                    ctx.outcome(point, ok, witness);
                }
            }
}

// ---------------------------------------------------------------------------
// Hypergeometric identities.

// The recursion produced by expanding the y-derivative PDE of the closed
// form; the tail couples through nu(2l+a+b-nu) P_{nu-1}.
void check_H2(Ctx& ctx) {
    for (const auto& abc : ctx.grid.hyp_abc)
        for (unsigned l = 0; l <= ctx.grid.hyp_lmax && !ctx.stop(); ++l) {
            const Rational &a = abc[0], &b = abc[1], &c = abc[2];
            auto P = ref_upto(FamilySpec::hypergeometric(a, b, c, l), ctx.grid.hyp_numax);
            std::string point = pt({{"a", a.str()},
                                    {"b", b.str()},
                                    {"c", c.str()},
                                    {"l", std::to_string(l)}});
            bool ok = true;
            std::string witness;
            Rational lr(static_cast<long>(l));
            Poly xx = px() * poly_1mx();
            for (unsigned nu = 0; nu + 1 <= ctx.grid.hyp_numax && ok; ++nu) {
                Rational nr(static_cast<long>(nu));
                Poly head = Poly(lr + c - nr - ctx.K(0, 1)) -
                            (ctx.K(1, 2) * lr - ctx.K(3, 2) * nr + a + b - ctx.K(2, 1)) * px();
                Poly res = P[nu + 1] - head * P[nu];
                if (nu >= 1)
                    res += (nr * (ctx.K(4, 2) * lr + a + b - nr)) * (xx * P[nu - 1]);
                if (!res.is_zero()) {
                    ok = false;
                    witness = nu_witness(nu + 1, res);
                }
            }
            ctx.outcome(point, ok, witness);
        }
}

void check_H3(Ctx& ctx) {
    for (const auto& abc : ctx.grid.hyp_abc)
        for (unsigned l = 0; l <= ctx.grid.hyp_lmax && !ctx.stop(); ++l) {
            const Rational &a = abc[0], &b = abc[1], &c = abc[2];
            auto P = ref_upto(FamilySpec::hypergeometric(a, b, c, l), ctx.grid.hyp_numax);
            std::string point = pt({{"a", a.str()},
                                    {"b", b.str()},
                                    {"c", c.str()},
                                    {"l", std::to_string(l)}});
            bool ok = true;
            std::string witness;
            Rational lr(static_cast<long>(l));
            for (unsigned nu = 0; nu <= ctx.grid.hyp_numax && ok; ++nu) {
                Rational nr(static_cast<long>(nu));
                Poly coef1 = (lr - nr) * (Poly(Rational(1)) - ctx.K(0, 2) * px()) +
                             Poly(c) - (a + b + ctx.K(1, 1)) * px();
                Poly ode = (px() * poly_1mx()) * P[nu].derivative(2) +
                           coef1 * P[nu].derivative() +
                           (nr * (ctx.K(2, 2) * lr - nr + a + b)) * P[nu];
                if (!ode.is_zero()) {
                    ok = false;
                    witness = nu_witness(nu, ode);
                    break;
                }
                Rational C = lr - nr + c;
                Rational B = ctx.K(3, 2) * lr - nr + a + b;
                if (kummer_degenerate(C, nu)) continue;
                try {
                    // value at the origin: nu! (nu+C-1 choose nu) = nu! (l+c-1 choose nu)
                    Poly match = (Rational(BigInt(factorial(nu))) *
                                  gen_binom(nr + C - ctx.K(4, 1), nu)) *
                                 gauss_poly(nu, B, C);
                    if (P[nu] != match) {
                        ok = false;
                        witness = nu_witness(nu, P[nu] - match);
                    }
                } catch (const DenominatorDegeneracyError& e) {
                    ok = false;
                    witness = e.what();
                }
            }
            ctx.outcome(point, ok, witness);
        }
}

void check_H4(Ctx& ctx) {
    unsigned numax = ctx.grid.comp_numax;
    unsigned K = numax + 2;
    for (const auto& abc : ctx.grid.hyp_abc) {
        if (ctx.stop()) break;
        const Rational &a = abc[0], &b = abc[1], &c = abc[2];
        std::map<unsigned, std::vector<Poly>> cache;
        auto polys = [&](unsigned l) -> const std::vector<Poly>& {
            auto it = cache.find(l);
            if (it == cache.end())
                it = cache.emplace(l, ref_upto(FamilySpec::hypergeometric(a, b, c, l), numax))
                         .first;
            return it->second;
        };
        auto series = [&](unsigned l) {
            return gf_series(family_gf(FamilySpec::hypergeometric(a, b, c, l)), K);
        };
        for (unsigned l1 = 0; l1 <= ctx.grid.comp_lmax && !ctx.stop(); ++l1)
            for (unsigned l2 = 0; l2 <= l1 && !ctx.stop(); ++l2)
                for (unsigned l = 0; l <= l1 + l2; ++l) {
                    std::string point = pt({{"a", a.str()},
                                            {"b", b.str()},
                                            {"c", c.str()},
                                            {"l1", std::to_string(l1)},
                                            {"l2", std::to_string(l2)},
                                            {"l", std::to_string(l)}});
                    bool ok = true;
                    std::string witness;
                    for (unsigned nu = 0; nu <= numax && ok; ++nu) {
                        Poly s12 = conv_sum(ctx, 0, polys(l1), polys(l2), nu);
                        Poly ssplit = conv_sum(ctx, 0, polys(l1 + l2 - l), polys(l), nu);
                        Poly szero = conv_sum(ctx, 0, polys(l1 + l2), polys(0), nu);
                        if (s12 != ssplit || s12 != szero) {
                            ok = false;
                            witness = nu_witness(nu, s12 - ssplit);
                        }
                    }
                    if (ok) {
                        SeriesY g12 = series(l1) * series(l2);
                        if (g12 != series(l1 + l2 - l) * series(l) ||
                            g12 != series(l1 + l2) * series(0)) {
                            ok = false;
                            witness = "series mismatch";
                        }
                    }
                    ctx.outcome(point, ok, witness);
                    if (ctx.stop()) break;
                }
    }
}

// Parametrized closed form [1+y(1-x)]^{l+alpha} (1-xy)^{l+beta}.
GFSpec hyp_gf_params(unsigned l, const Rational& alpha, const Rational& beta) {
    GFSpec g;
    Rational lr(static_cast<long>(l));
    g.factors.push_back({{RatFunc(Rational(1)), RatFunc(poly_1mx())}, lr + alpha});
    g.factors.push_back({{RatFunc(Rational(1)), RatFunc(-px())}, lr + beta});
    return g;
}

void check_H5(Ctx& ctx) {
    unsigned K = ctx.grid.hyp_numax + 2;
    for (const auto& abc : ctx.grid.hyp_abc)
        for (unsigned l = 0; l <= ctx.grid.hyp_lmax && !ctx.stop(); ++l) {
            const Rational &a = abc[0], &b = abc[1], &c = abc[2];
            std::string point = pt({{"a", a.str()},
                                    {"b", b.str()},
                                    {"c", c.str()},
                                    {"l", std::to_string(l)}});
            GFSpec orig = hyp_gf_params(l, c - Rational(1), a + b - c);
            // substitute x -> 1-x, y -> -y
            GFSpec flipped = orig;
            Rational ym = -ctx.K(0, 1);
            for (auto& f : flipped.factors) {
                for (size_t j = 0; j < f.inner.size(); ++j) {
                    Poly n = sub_linear(f.inner[j].num(), ctx.K(1, 1), Rational(-1));
                    Poly d = sub_linear(f.inner[j].den(), ctx.K(1, 1), Rational(-1));
                    RatFunc scaled = RatFunc(n, d) * RatFunc(ym.pow_int(static_cast<long>(j)));
                    f.inner[j] = scaled;
                }
            }
            GFSpec swapped = hyp_gf_params(l, a + b - c, c - Rational(1));
            bool ok = gf_series(flipped, K) == gf_series(swapped, K);
            ctx.outcome(point, ok, "series mismatch");
        }
}

void check_H6(Ctx& ctx) {
    for (const auto& abc : ctx.grid.hyp_abc)
        for (unsigned l = 0; l <= ctx.grid.hyp_lmax; ++l) {
            const Rational &a = abc[0], &b = abc[1], &c = abc[2];
            auto P = ref_upto(FamilySpec::hypergeometric(a, b, c, l), ctx.grid.hyp_numax);
            std::string point = pt({{"a", a.str()},
                                    {"b", b.str()},
                                    {"c", c.str()},
                                    {"l", std::to_string(l)}});
            bool nonzero = false;
            std::string witness;
            std::vector<std::pair<std::string, std::string>> detail;
            Rational lr(static_cast<long>(l));
            for (unsigned nu = 1; nu <= ctx.grid.hyp_numax; ++nu) {
                Rational nr(static_cast<long>(nu));
                Poly res = P[nu].derivative() - (nr * (nr - a - b - Rational(2))) * P[nu - 1];
                if (nu == 1) {
                    detail.emplace_back("printed_nu1_coeff",
                                        (Rational(1) * (Rational(1) - a - b - Rational(2))).str());
                    detail.emplace_back("actual_nu1_coeff", P[1].derivative().str());
                }
                if (!res.is_zero() && !nonzero) {
                    nonzero = true;
                    witness = nu_witness(nu, res);
                }
            }
            ctx.residual_report(point, nonzero, witness, std::move(detail));
        }
}

void check_H7(Ctx& ctx) {
    for (const auto& abc : ctx.grid.hyp_abc)
        for (unsigned l = 0; l <= ctx.grid.hyp_lmax; ++l) {
            const Rational &a = abc[0], &b = abc[1], &c = abc[2];
            auto P = ref_upto(FamilySpec::hypergeometric(a, b, c, l), ctx.grid.hyp_numax);
            std::string point = pt({{"a", a.str()},
                                    {"b", b.str()},
                                    {"c", c.str()},
                                    {"l", std::to_string(l)}});
            bool nonzero = false;
            std::string witness;
            std::vector<std::pair<std::string, std::string>> detail;
            Rational lr(static_cast<long>(l));
            Poly xx = px() * poly_1mx();
            for (unsigned nu = 1; nu <= ctx.grid.hyp_numax; ++nu) {
                Rational nr(static_cast<long>(nu));
                Poly mid = (nr - a - b - Rational(2)) *
                               (Poly(Rational(1)) - Rational(2) * px()) +
                           Poly(lr + a + b - c) -
                           (Rational(2) * lr + a + b - Rational(1)) * px();
                Poly res = (nr + Rational(2) * lr - Rational(2)) * P[nu] +
                           nr * (mid * P[nu - 1]);
                if (nu >= 2)
                    res -= (nr * (nr - Rational(1)) * (nr - a - b - Rational(3))) *
                           (xx * P[nu - 2]);
                if (nu == 1) detail.emplace_back("residual_nu1", res.str());
                if (!res.is_zero() && !nonzero) {
                    nonzero = true;
                    witness = nu_witness(nu, res);
                }
            }
            ctx.residual_report(point, nonzero, witness, std::move(detail));
        }
}

// ---------------------------------------------------------------------------
// Relativistic Hermite identities.

void check_R2(Ctx& ctx) {
    for (const Rational& N : ctx.grid.relh_N) {
        if (ctx.stop()) break;
        auto H = ref_upto(FamilySpec::rel_hermite(N), ctx.grid.relh_nmax);
        std::string point = pt({{"N", N.str()}});
        bool ok = true;
        std::string witness;
        for (unsigned n = 1; n <= ctx.grid.relh_nmax && ok; ++n) {
            Rational nr(static_cast<long>(n));
            Poly res = H[n] -
                       ((ctx.K(0, 2) / N) * (N + nr - ctx.K(1, 1))) * (px() * H[n - 1]) +
                       (Poly(ctx.K(2, 1)) + (Rational(1) / N) * (px() * px())) *
                           H[n - 1].derivative();
            if (!res.is_zero()) {
                ok = false;
                witness = nu_witness(n, res);
            }
        }
        ctx.outcome(point, ok, witness);
    }
}

Rational drift_dev(Family family, unsigned n, const Rational& N, const Rational& target_offset) {
    Poly target = family == Family::RelHermite
                      ? hermite_h(n)
                      : cp(FamilySpec::confluent(Rational(1), n), n, Route::Rodrigues);
    target += Poly(target_offset);
    FamilySpec spec = family == Family::RelHermite ? FamilySpec::rel_hermite(N)
                                                   : FamilySpec::pre_laguerre(N, n);
    Poly diff = cp(spec, n, Route::GenFunc) - target;
    Rational dev(0);
    for (const Rational& coeff : diff.coeffs()) {
        Rational a = coeff.abs();
        if (dev < a) dev = a;
    }
    return dev;
}

void limit_drift_check(Ctx& ctx, Family family) {
    Rational off = ctx.K(0, 0);
    Rational n10(10), n100(100);
    if (family == Family::RelHermite) {
        // deviation of the n=2 polynomial is exactly 2/N
        for (const Rational& N : {n10, n100}) {
            Rational dev = drift_dev(family, 2, N, off);
            std::string point = pt({{"n", "2"}, {"N", N.str()}});
            bool ok = dev == Rational(2) / N;
            ctx.outcome(point, ok, "dev=" + dev.str() + " expected " + (Rational(2) / N).str());
            if (ctx.stop()) return;
        }
        // classical_limit_drift must agree with the local computation
        if (off.is_zero()) {
            auto table = classical_limit_drift(family, 2, {n10, n100});
            bool ok = table.size() == 2 && table[0].second == drift_dev(family, 2, n10, off) &&
                      table[1].second == drift_dev(family, 2, n100, off);
            ctx.outcome(pt({{"n", "2"}, {"N", "10,100"}}), ok, "drift table mismatch");
            if (ctx.stop()) return;
        }
    }
    for (unsigned n = 0; n <= 6; ++n) {
        Rational d1 = drift_dev(family, n, n10, off);
        Rational d2 = drift_dev(family, n, n100, off);
        std::string point = pt({{"n", std::to_string(n)}, {"N", "10->100"}});
        bool ok;
        std::string witness;
        if (d1.is_zero() || d2.is_zero()) {
            ok = d1.is_zero() && d2.is_zero();
            witness = "one deviation vanished: " + d1.str() + " vs " + d2.str();
        } else {
            Rational ratio = d2 / d1;
            ok = ratio >= Rational(1, 20) && ratio <= Rational(1, 5);
            witness = "ratio=" + ratio.str();
        }
        ctx.outcome(point, ok, witness);
        if (ctx.stop()) return;
    }
}

void check_R3(Ctx& ctx) { limit_drift_check(ctx, Family::RelHermite); }

// ---------------------------------------------------------------------------
// Pre-Laguerre identities.

void check_P2(Ctx& ctx) {
    for (const Rational& N : ctx.grid.prelag_N)
        for (unsigned l = 0; l <= ctx.grid.prelag_lmax && !ctx.stop(); ++l) {
            auto P = ref_upto(FamilySpec::pre_laguerre(N, l), ctx.grid.prelag_numax);
            std::string point = pt({{"N", N.str()}, {"l", std::to_string(l)}});
            bool ok = true;
            std::string witness;
            Rational lr(static_cast<long>(l));
            for (unsigned nu = 0; nu + 1 <= ctx.grid.prelag_numax && ok; ++nu) {
                Rational nr(static_cast<long>(nu));
                Poly head = Poly(nr - lr) +
                            ((ctx.K(0, 2) * nr - lr) / N + ctx.K(1, 1)) * px();
                Poly res = P[nu + 1] + head * P[nu];
                if (nu >= 1)
                    res += (nr * ((nr - lr - ctx.K(2, 1)) / N + ctx.K(3, 1))) *
                           ((px() * poly_1px_over(N)) * P[nu - 1]);
                if (!res.is_zero()) {
                    ok = false;
                    witness = nu_witness(nu + 1, res);
                }
            }
            ctx.outcome(point, ok, witness);
        }
}

void check_P3(Ctx& ctx) {
    for (const Rational& N : ctx.grid.prelag_N)
        for (unsigned l = 0; l <= ctx.grid.prelag_lmax && !ctx.stop(); ++l) {
            auto P = ref_upto(FamilySpec::pre_laguerre(N, l), ctx.grid.prelag_numax);
            std::string point = pt({{"N", N.str()}, {"l", std::to_string(l)}});
            bool ok = true;
            std::string witness;
            Rational lr(static_cast<long>(l));
            for (unsigned nu = 0; nu <= ctx.grid.prelag_numax && ok; ++nu) {
                Poly lhs;
                for (unsigned lam = 0; lam <= nu; ++lam) {
                    Rational coef = gen_binom(N + ctx.K(0, 0), nu - lam) *
                                    (Rational(1) / N).pow_int(nu - lam) /
                                    Rational(BigInt(factorial(lam)));
                    lhs += coef * (Poly::monomial(nu - lam) * P[lam]);
                }
                Poly rhs;
                if (nu <= l)
                    rhs = gen_binom(lr + ctx.K(1, 0), nu) * poly_1px_over(N).pow(nu);
                if (lhs != rhs) {
                    ok = false;
                    witness = nu_witness(nu, lhs - rhs);
                }
            }
            ctx.outcome(point, ok, witness);
        }
}

void check_P4(Ctx& ctx) {
    unsigned numax = ctx.grid.comp_numax;
    unsigned K = numax + 2;
    for (const Rational& N : ctx.grid.prelag_N)
        for (unsigned l1 = 0; l1 <= ctx.grid.comp_lmax && !ctx.stop(); ++l1)
            for (unsigned l2 = 0; l2 <= l1 && !ctx.stop(); ++l2) {
                auto P1 = ref_upto(FamilySpec::pre_laguerre(N, l1), numax);
                auto P2 = ref_upto(FamilySpec::pre_laguerre(N, l2), numax);
                auto P12 = ref_upto(FamilySpec::pre_laguerre(N, l1 + l2), numax);
                std::string point = pt({{"N", N.str()},
                                        {"l1", std::to_string(l1)},
                                        {"l2", std::to_string(l2)}});
                bool ok = true;
                std::string witness;
                for (unsigned nu = 0; nu <= numax && ok; ++nu) {
                    // direction one: P12 from the pair
                    Poly rhs;
                    for (unsigned mu = 0; mu <= nu; ++mu) {
                        Poly innersum;
                        for (unsigned n1 = 0; n1 <= mu; ++n1)
                            innersum += gen_binom(Rational(static_cast<long>(mu)), n1) *
                                        (P1[n1] * P2[mu - n1]);
                        Rational coef = Rational(BigInt(factorial(nu)), BigInt(factorial(mu))) *
                                        gen_binom(N + ctx.K(0, 0), nu - mu) *
                                        (Rational(1) / N).pow_int(nu - mu);
                        rhs += coef * (Poly::monomial(nu - mu) * innersum);
                    }
                    if (P12[nu] != rhs) {
                        ok = false;
                        witness = nu_witness(nu, P12[nu] - rhs);
                        break;
                    }
                    // direction two: the pair from P12
                    Poly lhs2;
                    for (unsigned n1 = 0; n1 <= nu; ++n1)
                        lhs2 += gen_binom(Rational(static_cast<long>(nu)), n1) *
                                (P1[n1] * P2[nu - n1]);
                    Poly rhs2;
                    for (unsigned lam = 0; lam <= nu; ++lam) {
                        Rational coef = Rational(BigInt(factorial(nu)), BigInt(factorial(lam))) *
                                        gen_binom(-N + ctx.K(1, 0), nu - lam) *
                                        (Rational(1) / N).pow_int(nu - lam);
                        rhs2 += coef * (Poly::monomial(nu - lam) * P12[lam]);
                    }
                    if (lhs2 != rhs2) {
                        ok = false;
                        witness = nu_witness(nu, lhs2 - rhs2);
                    }
                }
                if (ok) {
                    auto series = [&](unsigned l) {
                        return gf_series(family_gf(FamilySpec::pre_laguerre(N, l)), K);
                    };
                    SeriesY u(K);
                    u[1] = RatFunc((Rational(1) / N) * px());
                    SeriesY up = series_binpow(u, N, K);
                    SeriesY dn = series_binpow(u, -N, K);
                    SeriesY prod = series(l1) * series(l2);
                    if (series(l1 + l2) != up * prod || prod != dn * series(l1 + l2)) {
                        ok = false;
                        witness = "series mismatch";
                    }
                }
                ctx.outcome(point, ok, witness);
            }
}

void check_P5(Ctx& ctx) {
    for (const Rational& N : ctx.grid.prelag_N)
        for (unsigned l = 0; l <= ctx.grid.prelag_lmax && !ctx.stop(); ++l) {
            auto P = ref_upto(FamilySpec::pre_laguerre(N, l), ctx.grid.prelag_numax);
            std::string point = pt({{"N", N.str()}, {"l", std::to_string(l)}});
            bool ok = true;
            std::string witness;
            Rational lr(static_cast<long>(l));
            for (unsigned nu = 0; nu <= ctx.grid.prelag_numax && ok; ++nu) {
                Rational at0 = P[nu].eval(Rational(0));
                Rational exp0 = nu <= l ? Rational(BigInt(factorial(nu))) *
                                              gen_binom(lr + ctx.K(0, 0), nu)
                                        : Rational(0);
                if (at0 != exp0) {
                    ok = false;
                    witness = "nu=" + std::to_string(nu) + " at x=0: " + at0.str() + " vs " +
                              exp0.str();
                    break;
                }
                Rational atN = P[nu].eval(-N + ctx.K(2, 0));
                Rational sgn(nu % 2 == 0 ? 1 : -1);
                Rational expN = Rational(BigInt(factorial(nu))) * sgn *
                                gen_binom(-N + ctx.K(1, 0), nu);
                if (atN != expN) {
                    ok = false;
                    witness = "nu=" + std::to_string(nu) + " at x=-N: " + atN.str() + " vs " +
                              expN.str();
                }
            }
            ctx.outcome(point, ok, witness);
        }
}

void check_P6(Ctx& ctx) {
    for (const Rational& N : ctx.grid.prelag_N) {
        if (ctx.stop()) break;
        std::string point = pt({{"N", N.str()}});
        FactoredExpr w = FactoredExpr::make_term(Poly(Rational(1)),
                                                 {{poly_1px_over(N), -N}});
        Poly num = ctx.K(0, 1) * poly_1px_over(N) - ctx.K(1, 1) * px();
        RatFunc tau(num, poly_1px_over(N));
        bool ok = pearson_check(px(), w, tau, PearsonForm::ProductPrime);
        ctx.outcome(point, ok, "Pearson relation violated");
    }
}

void check_P7(Ctx& ctx) { limit_drift_check(ctx, Family::PreLaguerre); }

// ---------------------------------------------------------------------------
// General framework reproduction and the translation probe.

void check_G1(Ctx& ctx) {
    Poly offset(ctx.K(0, 0));
    unsigned K = 8;
    // Legendre from the weight pair (1+x, 1-x), a = b = 0.
    Poly wl(std::vector<Rational>{Rational(1), Rational(1)});
    for (unsigned l = 0; l <= std::min(ctx.grid.legendre_lmax, 6u) && !ctx.stop(); ++l) {
        std::string point = pt({{"family", "legendre"}, {"l", std::to_string(l)}});
        GFSpec gen = gf_weight_pair(wl, poly_1mx(), Rational(0), Rational(0), l);
        GFSpec hand = family_gf(FamilySpec::legendre(l));
        bool ok = gf_same_factors(gen, hand);
        std::string witness = ok ? "" : "factor mismatch";
        if (ok) {
            RodriguesSpec rs;
            rs.l = l;
            Rational lr(static_cast<long>(l));
            rs.weight_bases = {{wl, lr}, {poly_1mx(), lr}};
            for (unsigned nu = 0; nu <= l && ok; ++nu) {
                Poly got = rodrigues_cp(rs, nu) + offset;
                Poly want = cp(FamilySpec::legendre(l), nu, Route::GenFunc);
                if (got != want) {
                    ok = false;
                    witness = nu_witness(nu, got - want);
                }
            }
        }
        if (ok) {
            // sigma-power form with sigma = 1-x^2, unit weight
            GFSpec genA = gf_sigma_weight(poly_1mx2(), Poly(Rational(1)), Rational(0), l, 1);
            if (gf_series(genA, K) != gf_series(hand, K)) {
                ok = false;
                witness = "sigma-power series mismatch";
            }
        }
        ctx.outcome(point, ok, witness);
    }
    // Hypergeometric from the weight pair (x, 1-x), a = c-1, b = a+b-c.
    for (const auto& abc : ctx.grid.hyp_abc)
        for (unsigned l = 0; l <= std::min(ctx.grid.hyp_lmax, 4u) && !ctx.stop(); ++l) {
            const Rational &a = abc[0], &b = abc[1], &c = abc[2];
            std::string point = pt({{"family", "hypergeometric"},
                                    {"a", a.str()},
                                    {"b", b.str()},
                                    {"c", c.str()},
                                    {"l", std::to_string(l)}});
            GFSpec gen = gf_weight_pair(px(), poly_1mx(), c - Rational(1), a + b - c, l);
            GFSpec hand = family_gf(FamilySpec::hypergeometric(a, b, c, l));
            bool ok = gf_same_factors(gen, hand);
            std::string witness = ok ? "" : "factor mismatch";
            if (ok) {
                RodriguesSpec rs;
                rs.l = l;
                Rational lr(static_cast<long>(l));
                rs.weight_bases = {{px(), c - Rational(1) + lr},
                                   {poly_1mx(), a + b - c + lr}};
                for (unsigned nu = 0; nu <= std::min(ctx.grid.hyp_numax, 4u) && ok; ++nu) {
                    Poly got = rodrigues_cp(rs, nu) + offset;
                    Poly want =
                        cp(FamilySpec::hypergeometric(a, b, c, l), nu, Route::GenFunc);
                    if (got != want) {
                        ok = false;
                        witness = nu_witness(nu, got - want);
                    }
                }
            }
            ctx.outcome(point, ok, witness);
        }
    // Relativistic Hermite as the sigma-power form with sigma = 1.
    for (const Rational& N : ctx.grid.relh_N) {
        if (ctx.stop()) break;
        std::string point = pt({{"family", "relhermite"}, {"N", N.str()}});
        Poly w(std::vector<Rational>{Rational(1), Rational(0), Rational(1) / N});
        GFSpec gen = gf_sigma_weight(Poly(Rational(1)), w, N, 0, -1);
        GFSpec hand = family_gf(FamilySpec::rel_hermite(N));
        bool ok = gf_same_factors(gen, hand);
        std::string witness = ok ? "" : "factor mismatch";
        if (ok) {
            FamilySpec g = FamilySpec::general(Poly(Rational(1)), w, N, 0, -1);
            for (unsigned n = 0; n <= std::min(ctx.grid.relh_nmax, 6u) && ok; ++n) {
                Poly got = cp(g, n, Route::Rodrigues) + offset;
                Poly want = cp(FamilySpec::rel_hermite(N), n, Route::GenFunc);
                if (got != want) {
                    ok = false;
                    witness = nu_witness(n, got - want);
                }
            }
        }
        ctx.outcome(point, ok, witness);
    }
    // Pre-Laguerre as the sigma-power form with sigma = x.
    for (const Rational& N : ctx.grid.prelag_N)
        for (unsigned l = 0; l <= std::min(ctx.grid.prelag_lmax, 4u) && !ctx.stop(); ++l) {
            std::string point =
                pt({{"family", "prelaguerre"}, {"N", N.str()}, {"l", std::to_string(l)}});
            GFSpec gen = gf_sigma_weight(px(), poly_1px_over(N), N, l, 1);
            GFSpec hand = family_gf(FamilySpec::pre_laguerre(N, l));
            bool ok = gf_same_factors(gen, hand);
            std::string witness = ok ? "" : "factor mismatch";
            if (ok) {
                FamilySpec g = FamilySpec::general(px(), poly_1px_over(N), N, l, 1);
                for (unsigned nu = 0; nu <= std::min(ctx.grid.prelag_numax, 4u) && ok; ++nu) {
                    Poly got = cp(g, nu, Route::Rodrigues) + offset;
                    Poly want = cp(FamilySpec::pre_laguerre(N, l), nu, Route::GenFunc);
                    if (got != want) {
                        ok = false;
                        witness = nu_witness(nu, got - want);
                    }
                }
            }
            ctx.outcome(point, ok, witness);
        }
}

void check_G2(Ctx& ctx) {
    struct ProbeCase {
        unsigned l;
        Rational h, x;
        unsigned terms;
    };
    const std::vector<ProbeCase> cases = {
        {0, Rational(1, 10), Rational(1, 2), 40},
        {1, Rational(1, 10), Rational(1, 2), 40},
        {2, Rational(1, 20), Rational(1, 3), 30},
    };
    for (const auto& pc : cases) {
        TranslationProbe tp = probe_translation(pc.l, pc.h, pc.x, pc.terms);
        std::string point = pt({{"l", std::to_string(pc.l)},
                                {"h", pc.h.str()},
                                {"x", pc.x.str()},
                                {"terms", std::to_string(pc.terms)}});
        std::vector<std::pair<std::string, std::string>> detail = {
            {"lhs", tp.lhs.str()},
            {"rhs_partial", tp.rhs.str()},
            {"residual", tp.residual.str()},
        };
        ctx.residual_report(point, !tp.residual.is_zero(),
                            "residual=" + tp.residual.str(), std::move(detail));
    }
}

// ---------------------------------------------------------------------------

struct Entry {
    CheckInfo info;
    void (*fn)(Ctx&);
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {{"L1", CheckClass::Assert, 1, "Legendre route equivalence"}, check_L1},
        {{"L2", CheckClass::Assert, 2, "Legendre basic differential recursion"}, check_L2},
        {{"L3", CheckClass::Assert, 6, "Legendre three-term recursion"}, check_L3},
        {{"L4", CheckClass::Assert, 3, "Legendre composition law (series)"}, check_L4},
        {{"L5", CheckClass::Assert, 3, "Legendre composition law (coefficients)"}, check_L5},
        {{"L6", CheckClass::Assert, 4, "Legendre special values and trig form"}, check_L6},
        {{"L7", CheckClass::Assert, 4, "Legendre normalization chain"}, check_L7},
        {{"L8", CheckClass::Assert, 2, "Legendre mixed differential recursion"}, check_L8},
        {{"C1", CheckClass::Assert, 1, "confluent route equivalence"}, check_C1},
        {{"C2", CheckClass::Assert, 1, "confluent differential recursion"}, check_C2},
        {{"C3", CheckClass::Assert, 3, "confluent three-term recursion"}, check_C3},
        {{"C4", CheckClass::Assert, 4, "confluent ODE and Kummer match"}, check_C4},
        {{"C5", CheckClass::Assert, 1, "confluent inverted addition law"}, check_C5},
        {{"C6", CheckClass::Assert, 1, "confluent composition laws"}, check_C6},
        {{"C7", CheckClass::Assert, 2, "confluent addition law"}, check_C7},
        {{"C8", CheckClass::Assert, 1, "confluent full addition law"}, check_C8},
        {{"H1", CheckClass::Assert, 1, "hypergeometric route equivalence"}, check_H1},
        {{"H2", CheckClass::Assert, 5, "hypergeometric three-term recursion"}, check_H2},
        {{"H3", CheckClass::Assert, 5, "hypergeometric ODE and Gauss match"}, check_H3},
        {{"H4", CheckClass::Assert, 1, "hypergeometric composition laws"}, check_H4},
        {{"H5", CheckClass::Assert, 2, "hypergeometric generating-function symmetry"}, check_H5},
        {{"H6", CheckClass::Diagnose, 0, "printed basic recursive ODE residual"}, check_H6},
        {{"H7", CheckClass::Diagnose, 0, "printed second recursion residual"}, check_H7},
        {{"R1", CheckClass::Assert, 1, "relativistic Hermite route equivalence"}, check_R1},
        {{"R2", CheckClass::Assert, 3, "relativistic Hermite differential recursion"}, check_R2},
        {{"R3", CheckClass::Assert, 1, "relativistic Hermite classical limit drift"}, check_R3},
        {{"P1", CheckClass::Assert, 1, "pre-Laguerre route equivalence"}, check_P1},
        {{"P2", CheckClass::Assert, 4, "pre-Laguerre three-term recursion"}, check_P2},
        {{"P3", CheckClass::Assert, 2, "pre-Laguerre binomial recursion"}, check_P3},
        {{"P4", CheckClass::Assert, 2, "pre-Laguerre composition laws"}, check_P4},
        {{"P5", CheckClass::Assert, 3, "pre-Laguerre special values"}, check_P5},
        {{"P6", CheckClass::Assert, 2, "pre-Laguerre Pearson relation"}, check_P6},
        {{"P7", CheckClass::Assert, 1, "pre-Laguerre classical limit drift"}, check_P7},
        {{"G1", CheckClass::Assert, 1, "general framework reproduces the families"}, check_G1},
        {{"G2", CheckClass::Diagnose, 0, "translation formula probe"}, check_G2},
    };
    return entries;
}

} // namespace

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> infos = [] {
        std::vector<CheckInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

const CheckInfo* find_check(const std::string& id) {
    for (const auto& info : check_catalog())
        if (info.id == id) return &info;
    return nullptr;
}

GridConfig GridConfig::defaults() {
    GridConfig g;
    g.name = "default";
    g.legendre_lmax = 10;
    g.confluent_c = {Rational(1, 3), Rational(1, 2), Rational(1), Rational(5, 2)};
    g.confluent_lmax = 8;
    g.confluent_numax = 8;
    g.hyp_abc = {{Rational(0), Rational(0), Rational(1, 2)},
                 {Rational(1, 2), Rational(1, 2), Rational(1)},
                 {Rational(1), Rational(2), Rational(3, 2)},
                 {Rational(-1, 2), Rational(1), Rational(1, 2)}};
    g.hyp_lmax = 6;
    g.hyp_numax = 6;
    g.relh_N = {Rational(1), Rational(2), Rational(7, 2), Rational(100)};
    g.relh_nmax = 10;
    g.prelag_N = {Rational(1), Rational(2), Rational(7, 2), Rational(100)};
    g.prelag_lmax = 8;
    g.prelag_numax = 8;
    g.comp_lmax = 3;
    g.comp_numax = 6;
    g.x2_samples = {Rational(1, 3), Rational(-1, 2)};
    return g;
}

GridConfig GridConfig::small() {
    GridConfig g;
    g.name = "small";
    g.legendre_lmax = 4;
    g.confluent_c = {Rational(1, 2), Rational(1)};
    g.confluent_lmax = 4;
    g.confluent_numax = 4;
    g.hyp_abc = {{Rational(0), Rational(0), Rational(1, 2)},
                 {Rational(1), Rational(2), Rational(3, 2)}};
    g.hyp_lmax = 3;
    g.hyp_numax = 3;
    g.relh_N = {Rational(1), Rational(2)};
    g.relh_nmax = 5;
    g.prelag_N = {Rational(1), Rational(2)};
    g.prelag_lmax = 4;
    g.prelag_numax = 4;
    g.comp_lmax = 2;
    g.comp_numax = 4;
    g.x2_samples = {Rational(1, 3)};
    return g;
}

GridConfig GridConfig::by_name(const std::string& name) {
    if (name == "default") return defaults();
    if (name == "small") return small();
    throw std::invalid_argument("unknown grid '" + name + "'");
}

SuiteResult run_suite(const std::vector<std::string>& ids, const GridConfig& grid,
                      const Mutation* mutation, bool stop_on_first_fail) {
    std::vector<std::string> selected = ids;
    for (const auto& id : selected)
        if (!find_check(id)) throw std::invalid_argument("unknown check id '" + id + "'");
    Ctx ctx{grid, mutation, stop_on_first_fail};
    for (const auto& entry : registry()) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), entry.info.id) == selected.end())
            continue;
        ctx.current = entry.info.id.c_str();
        entry.fn(ctx);
        if (ctx.stop()) break;
    }
    std::stable_sort(ctx.reports.begin(), ctx.reports.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         if (a.id != b.id) return a.id < b.id;
                         return a.point < b.point;
                     });
    SuiteResult result;
    result.all_assert_pass = !ctx.any_fail;
    result.reports = std::move(ctx.reports);
    return result;
}

TranslationProbe probe_translation(unsigned l, const Rational& h, const Rational& x,
                                   unsigned terms) {
    if (terms == 0) throw std::invalid_argument("probe_translation: terms must be >= 1");
    unsigned top = l + terms - 1;
    std::vector<Poly> P(top + 1);
    P[0] = Poly(Rational(1));
    if (top >= 1) P[1] = Poly::x();
    for (unsigned n = 1; n < top; ++n) {
        Rational nr(static_cast<long>(n));
        P[n + 1] = (Rational(1) / (nr + Rational(1))) *
                   ((Rational(2) * nr + Rational(1)) * (Poly::x() * P[n]) - nr * P[n - 1]);
    }
    TranslationProbe tp;
    tp.l = l;
    tp.terms = terms;
    tp.h = h;
    tp.x = x;
    tp.lhs = P[l].shift(h).eval(x);
    Rational rhs(0);
    for (unsigned lam = 0; lam < terms; ++lam) {
        Rational coef = (Rational(-2) * h).pow_int(static_cast<long>(lam)) *
                        gen_binom(Rational(static_cast<long>(l + lam)), l);
        rhs += coef * P[l + lam].eval(x);
    }
    tp.rhs = rhs;
    tp.residual = tp.lhs - rhs;
    return tp;
}

} // namespace comppoly
