#include "comppoly/poly.hpp"

#include "comppoly/errors.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace comppoly {

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(unsigned k, const Rational& c) {
    if (c.is_zero()) return Poly();
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Poly::operator[](size_t i) const {
    static const Rational zero(0);
    return i < c_.size() ? c_[i] : zero;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = a[i] - b[i];
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Rational> v = c_;
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& p) {
    if (s.is_zero()) return Poly();
    std::vector<Rational> v = p.c_;
    for (auto& x : v) x *= s;
    return Poly(std::move(v));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> v(c_.size() - 1, Rational(0));
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Poly(std::move(v));
}

Poly Poly::derivative(unsigned k) const {
    Poly p = *this;
    for (unsigned i = 0; i < k; ++i) p = p.derivative();
    return p;
}

Rational Poly::eval(const Rational& x) const {
    Rational r(0);
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

double Poly::eval_double(double x) const {
    double r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i].to_double();
    return r;
}

Poly Poly::shift(const Rational& h) const {
    // Horner in (x + h).
    Poly xh = Poly(std::vector<Rational>{h, Rational(1)});
    Poly r;
    for (size_t i = c_.size(); i-- > 0;) r = r * xh + Poly(c_[i]);
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly r(Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::invalid_argument("Poly::divmod: division by zero polynomial");
    Poly rem = p;
    if (p.degree() < q.degree()) return {Poly(), rem};
    std::vector<Rational> quot(static_cast<size_t>(p.degree() - q.degree()) + 1, Rational(0));
    Rational lead = q.leading();
    while (!rem.is_zero() && rem.degree() >= q.degree()) {
        int shift = rem.degree() - q.degree();
        Rational f = rem.leading() / lead;
        quot[static_cast<size_t>(shift)] = f;
        rem -= Poly::monomial(static_cast<unsigned>(shift), f) * q;
    }
    return {Poly(std::move(quot)), rem};
}

Poly exact_quotient(const Poly& p, const Poly& q) {
    auto [quot, rem] = Poly::divmod(p, q);
    if (!rem.is_zero())
        throw NonDivisibleError("exact_quotient: " + q.str() + " does not divide " + p.str());
    return quot;
}

bool divides(const Poly& q, const Poly& p) {
    if (q.is_zero()) return p.is_zero();
    return Poly::divmod(p, q).second.is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd: both polynomials zero");
    Poly u = a, v = b;
    while (!v.is_zero()) {
        Poly r = Poly::divmod(u, v).second;
        u = v;
        v = r;
    }
    return (Rational(1) / u.leading()) * u;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        const Rational& c = c_[i];
        if (c.is_zero()) continue;
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag == Rational(1) && i > 0;
        if (!unit) os << mag.str();
        if (i >= 1) {
            if (!unit) os << "*";
            os << "x";
            if (i >= 2) os << "^" << i;
        }
    }
    return os.str();
}

int Poly::cmp(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (size_t i = a.c_.size(); i-- > 0;) {
        int c = comppoly::cmp(a.c_[i], b.c_[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

} // namespace comppoly
