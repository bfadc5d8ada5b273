#ifndef COMPPOLY_RATIONAL_HPP
#define COMPPOLY_RATIONAL_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace comppoly {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always reduced, denominator >= 1.
/// Text form is "p/q" or "p"; this is the coefficient field everywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(BigInt(n)) {}
    Rational(long n, long d);
    explicit Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& n, const BigInt& d);
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    static Rational from_string(std::string_view s);
    std::string str() const;

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    bool is_nonneg_integer() const { return is_integer() && sgn(v_) >= 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// Checked conversion; throws std::overflow_error when out of range.
    long to_long() const;

    Rational pow_int(long e) const;

    double to_double() const { return v_.get_d(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

/// Exact b^e over the rationals; nullopt when the value is irrational
/// (non-perfect root or even root of a negative).
std::optional<Rational> rational_pow(const Rational& b, const Rational& e);

/// Total order for canonical sorting.
int cmp(const Rational& a, const Rational& b);

} // namespace comppoly

#endif
