#include "comppoly/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace comppoly {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(BigInt(n), BigInt(d));
    v_.canonicalize();
}

Rational::Rational(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    auto digits = [](std::string_view t) {
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view numpart = s, denpart;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        numpart = s.substr(0, slash);
        denpart = s.substr(slash + 1);
        if (!digits(denpart))
            throw std::invalid_argument("Rational: bad denominator in '" + std::string(s) + "'");
    }
    std::string_view mag = numpart;
    bool neg = false;
    if (!mag.empty() && (mag[0] == '-' || mag[0] == '+')) {
        neg = mag[0] == '-';
        mag.remove_prefix(1);
    }
    if (!digits(mag))
        throw std::invalid_argument("Rational: bad numerator in '" + std::string(s) + "'");
    BigInt n{std::string(mag)};
    if (neg) n = -n;
    BigInt d = denpart.empty() ? BigInt(1) : BigInt{std::string(denpart)};
    return Rational(n, d);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long Rational::to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
        throw std::overflow_error("Rational::to_long: not representable");
    return v_.get_num().get_si();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    bool inv = e < 0;
    unsigned long ue = inv ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (inv && is_zero()) throw std::invalid_argument("Rational: zero to negative power");
    BigInt n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), ue);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), ue);
    return inv ? Rational(d, n) : Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

namespace {

// Exact k-th root of a non-negative integer, if it exists.
std::optional<BigInt> exact_root(const BigInt& v, unsigned long k) {
    BigInt root, rem;
    mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), v.get_mpz_t(), k);
    if (rem != 0) return std::nullopt;
    return root;
}

} // namespace

std::optional<Rational> rational_pow(const Rational& b, const Rational& e) {
    if (e.is_integer()) {
        if (b.is_zero() && e.sign() < 0) return std::nullopt;
        if (!e.num().fits_slong_p()) throw std::overflow_error("rational_pow: exponent too large");
        return b.pow_int(e.num().get_si());
    }
    if (b.is_zero()) return e.sign() > 0 ? std::optional<Rational>(Rational(0)) : std::nullopt;
    if (!e.num().fits_slong_p() || !e.den().fits_ulong_p())
        throw std::overflow_error("rational_pow: exponent too large");
    Rational t = b.pow_int(e.num().get_si());
    unsigned long q = e.den().get_ui();
    int sign = 1;
    BigInt tn = t.num(), td = t.den();
    if (tn < 0) {
        if (q % 2 == 0) return std::nullopt;
        sign = -1;
        tn = -tn;
    }
    auto rn = exact_root(tn, q);
    auto rd = exact_root(td, q);
    if (!rn || !rd) return std::nullopt;
    return Rational(sign < 0 ? BigInt(-*rn) : *rn, *rd);
}

int cmp(const Rational& a, const Rational& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

} // namespace comppoly
