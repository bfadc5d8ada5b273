#include "comppoly/factored.hpp"

#include "comppoly/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

namespace comppoly {

namespace {

// Rational content: b / content(b) has coprime integer coefficients.
Rational content(const Poly& b) {
    BigInt g(0), l(1);
    for (const Rational& c : b.coeffs()) {
        if (c.is_zero()) continue;
        BigInt n = c.num();
        mpz_abs(n.get_mpz_t(), n.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        BigInt d = c.den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return Rational(g, l);
}

// b2 == mu * b1 for a scalar mu?
std::optional<Rational> proportional(const Poly& b1, const Poly& b2) {
    if (b1.degree() != b2.degree() || b1.is_zero()) return std::nullopt;
    Rational mu = b2.leading() / b1.leading();
    if (b2 == mu * b1) return mu;
    return std::nullopt;
}

Rational frac_part(const Rational& e) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), e.num().get_mpz_t(), e.den().get_mpz_t());
    return e - Rational(f);
}

// Scale a base to integer-primitive form, folding scale^e into the
// multiplier when that power is rational. Positive leading coefficient is
// preferred; when the sign cannot be extracted (even root), the sign stays
// on the base. Non-extractable content keeps the base unscaled.
void canonicalize_base(Poly& b, const Rational& e, Poly& multiplier) {
    Rational c = content(b);
    Rational lam = b.leading().sign() < 0 ? -c : c;
    if (auto f = rational_pow(lam, e)) {
        multiplier = *f * multiplier;
        b = (Rational(1) / lam) * b;
        return;
    }
    if (lam != c) {
        if (auto f = rational_pow(c, e)) {
            multiplier = *f * multiplier;
            b = (Rational(1) / c) * b;
        }
    }
}

bool is_nonneg_int(const Rational& e) { return e.is_nonneg_integer(); }

// Full per-term canonical form; nullopt when the term vanishes.
std::optional<FactoredTerm> canonicalize_term(FactoredTerm t) {
    if (t.multiplier.is_zero()) return std::nullopt;
    std::vector<std::pair<Poly, Rational>> out;
    for (auto& [b, e] : t.bases) {
        if (e.is_zero()) continue;
        if (b.is_zero()) {
            if (e.sign() > 0) return std::nullopt;
            throw DegenerateParameterError("factored term: zero base with non-positive exponent");
        }
        if (b.is_constant()) {
            auto f = rational_pow(b[0], e);
            if (!f)
                throw DegenerateParameterError("factored term: irrational constant power " +
                                               b[0].str() + "^" + e.str());
            t.multiplier = *f * t.multiplier;
            continue;
        }
        Poly bc = b;
        canonicalize_base(bc, e, t.multiplier);
        bool merged = false;
        for (auto& [ob, oe] : out) {
            if (auto mu = proportional(ob, bc)) {
                if (*mu != Rational(1)) {
                    auto f = rational_pow(*mu, e);
                    if (!f)
                        throw DegenerateParameterError(
                            "factored term: proportional bases with irrational ratio power");
                    t.multiplier = *f * t.multiplier;
                }
                oe += e;
                merged = true;
                break;
            }
        }
        if (!merged) out.emplace_back(bc, e);
    }

    // Absorb multiplier divisibility into exponents, expand plain powers.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<std::pair<Poly, Rational>> kept;
        for (auto& [b, e] : out) {
            while (!is_nonneg_int(e) && divides(b, t.multiplier)) {
                t.multiplier = exact_quotient(t.multiplier, b);
                e += Rational(1);
                changed = true;
            }
            if (e.is_zero()) {
                changed = true;
                continue;
            }
            if (is_nonneg_int(e)) {
                t.multiplier *= b.pow(static_cast<unsigned>(e.to_long()));
                changed = true;
                continue;
            }
            kept.emplace_back(b, e);
        }
        out = std::move(kept);
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int c = Poly::cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return cmp(a.second, b.second) < 0;
    });
    t.bases = std::move(out);
    if (t.multiplier.is_zero()) return std::nullopt;
    return t;
}

// Merge signature: exponential argument plus the fractional exponent class
// of every base (integer classes are invisible so that plain factors align).
std::string signature(const FactoredTerm& t) {
    std::ostringstream os;
    os << t.exp_arg.str() << "|";
    for (const auto& [b, e] : t.bases) {
        Rational f = frac_part(e);
        if (f.is_zero()) continue;
        os << b.str() << "^" << f.str() << ";";
    }
    return os.str();
}

} // namespace

FactoredExpr::FactoredExpr(std::vector<FactoredTerm> terms) : terms_(std::move(terms)) {
    normalize();
}

FactoredExpr FactoredExpr::from_poly(const Poly& p) {
    return make_term(p, {});
}

FactoredExpr FactoredExpr::make_term(Poly multiplier,
                                     std::vector<std::pair<Poly, Rational>> bases,
                                     Poly exp_arg) {
    FactoredTerm t{std::move(multiplier), std::move(bases), std::move(exp_arg)};
    return FactoredExpr(std::vector<FactoredTerm>{std::move(t)});
}

void FactoredExpr::normalize() {
    std::vector<FactoredTerm> canon;
    for (auto& t : terms_)
        if (auto ct = canonicalize_term(std::move(t))) canon.push_back(std::move(*ct));

    std::map<std::string, std::vector<FactoredTerm>> groups;
    for (auto& t : canon) groups[signature(t)].push_back(std::move(t));

    std::vector<FactoredTerm> merged;
    for (auto& [sig, ts] : groups) {
        auto exponent_of = [](const FactoredTerm& t, const Poly& b) {
            for (const auto& [tb, te] : t.bases)
                if (tb == b) return te;
            return Rational(0);
        };
        std::vector<Poly> allbases;
        for (const auto& t : ts)
            for (const auto& [b, e] : t.bases)
                if (std::find(allbases.begin(), allbases.end(), b) == allbases.end())
                    allbases.push_back(b);
        // Align every base to its minimal exponent over the group; the
        // integer surplus moves into each multiplier.
        std::vector<std::pair<Poly, Rational>> mins;
        for (const Poly& b : allbases) {
            Rational m = exponent_of(ts.front(), b);
            for (const auto& t : ts) {
                Rational e = exponent_of(t, b);
                if (e < m) m = e;
            }
            if (!m.is_zero()) mins.emplace_back(b, m);
        }
        Poly total;
        for (const auto& t : ts) {
            Poly m = t.multiplier;
            for (const Poly& b : allbases) {
                Rational mb(0);
                for (const auto& [pb, pe] : mins)
                    if (pb == b) mb = pe;
                Rational diff = exponent_of(t, b) - mb;
                m *= b.pow(static_cast<unsigned>(diff.to_long()));
            }
            total += m;
        }
        FactoredTerm mt;
        mt.multiplier = std::move(total);
        mt.exp_arg = ts.front().exp_arg;
        mt.bases = std::move(mins);
        if (auto ct = canonicalize_term(std::move(mt))) merged.push_back(std::move(*ct));
    }

    std::sort(merged.begin(), merged.end(), [](const FactoredTerm& a, const FactoredTerm& b) {
        int c = Poly::cmp(a.exp_arg, b.exp_arg);
        if (c != 0) return c < 0;
        if (a.bases.size() != b.bases.size()) return a.bases.size() < b.bases.size();
        for (size_t i = 0; i < a.bases.size(); ++i) {
            c = Poly::cmp(a.bases[i].first, b.bases[i].first);
            if (c != 0) return c < 0;
            c = cmp(a.bases[i].second, b.bases[i].second);
            if (c != 0) return c < 0;
        }
        return Poly::cmp(a.multiplier, b.multiplier) < 0;
    });
    terms_ = std::move(merged);
}

FactoredExpr operator+(const FactoredExpr& a, const FactoredExpr& b) {
    std::vector<FactoredTerm> ts = a.terms_;
    ts.insert(ts.end(), b.terms_.begin(), b.terms_.end());
    return FactoredExpr(std::move(ts));
}

FactoredExpr operator-(const FactoredExpr& a, const FactoredExpr& b) { return a + (-b); }

FactoredExpr FactoredExpr::operator-() const {
    std::vector<FactoredTerm> ts = terms_;
    for (auto& t : ts) t.multiplier = -t.multiplier;
    return FactoredExpr(std::move(ts));
}

FactoredExpr operator*(const FactoredExpr& a, const FactoredExpr& b) {
    std::vector<FactoredTerm> ts;
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            FactoredTerm t;
            t.multiplier = ta.multiplier * tb.multiplier;
            t.bases = ta.bases;
            t.bases.insert(t.bases.end(), tb.bases.begin(), tb.bases.end());
            t.exp_arg = ta.exp_arg + tb.exp_arg;
            ts.push_back(std::move(t));
        }
    return FactoredExpr(std::move(ts));
}

FactoredExpr operator*(const Poly& p, const FactoredExpr& e) {
    std::vector<FactoredTerm> ts = e.terms_;
    for (auto& t : ts) t.multiplier *= p;
    return FactoredExpr(std::move(ts));
}

FactoredExpr operator*(const Rational& s, const FactoredExpr& e) { return Poly(s) * e; }

bool operator==(const FactoredExpr& a, const FactoredExpr& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& ta = a.terms_[i];
        const auto& tb = b.terms_[i];
        if (ta.multiplier != tb.multiplier || ta.exp_arg != tb.exp_arg ||
            ta.bases != tb.bases)
            return false;
    }
    return true;
}

Poly FactoredExpr::expect_poly() const {
    if (terms_.empty()) return Poly();
    if (terms_.size() == 1 && terms_[0].bases.empty() && terms_[0].exp_arg.is_zero())
        return terms_[0].multiplier;
    throw NonPolynomialResidueError("factored expression is not a polynomial: " + str());
}

double FactoredExpr::eval_double(double x) const {
    double r = 0;
    for (const auto& t : terms_) {
        double v = t.multiplier.eval_double(x);
        for (const auto& [b, e] : t.bases) v *= std::pow(b.eval_double(x), e.to_double());
        v *= std::exp(t.exp_arg.eval_double(x));
        r += v;
    }
    return r;
}

std::string FactoredExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.multiplier.str() << ")";
        for (const auto& [b, e] : t.bases) os << "*(" << b.str() << ")^(" << e.str() << ")";
        if (!t.exp_arg.is_zero()) os << "*exp(" << t.exp_arg.str() << ")";
    }
    return os.str();
}

FactoredExpr fe_diff(const FactoredExpr& e) {
    std::vector<FactoredTerm> out;
    for (const auto& t : e.terms()) {
        FactoredTerm lead;
        lead.multiplier = t.multiplier.derivative() + t.multiplier * t.exp_arg.derivative();
        lead.bases = t.bases;
        lead.exp_arg = t.exp_arg;
        out.push_back(std::move(lead));
        for (size_t i = 0; i < t.bases.size(); ++i) {
            FactoredTerm chain;
            chain.multiplier = t.bases[i].second * (t.multiplier * t.bases[i].first.derivative());
            chain.bases = t.bases;
            chain.bases[i].second -= Rational(1);
            chain.exp_arg = t.exp_arg;
            out.push_back(std::move(chain));
        }
    }
    return FactoredExpr(std::move(out));
}

bool pearson_check(const Poly& sigma, const FactoredExpr& w, const RatFunc& rhs,
                   PearsonForm form) {
    FactoredExpr dw = fe_diff(w);
    FactoredExpr lhs = (rhs.den() * sigma) * dw;
    Poly wcoef;
    switch (form) {
    case PearsonForm::WeightPrime:
        wcoef = rhs.num();
        break;
    case PearsonForm::ProductPrime:
        wcoef = rhs.num() - rhs.den() * sigma.derivative();
        break;
    }
    FactoredExpr res = lhs - wcoef * w;
    return res.is_zero();
}

} // namespace comppoly
