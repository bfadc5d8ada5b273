#ifndef COMPPOLY_SERIES_HPP
#define COMPPOLY_SERIES_HPP

#include "comppoly/ratfunc.hpp"

#include <vector>

namespace comppoly {

/// Power series in y truncated at a fixed order, coefficients rational
/// functions of x. Mixed-order arithmetic truncates to the smaller order.
class SeriesY {
public:
    explicit SeriesY(unsigned order) : c_(order + 1) {}
    SeriesY(std::vector<RatFunc> coeffs);

    static SeriesY constant(const RatFunc& c, unsigned order);
    static SeriesY one(unsigned order) { return constant(RatFunc(Rational(1)), order); }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const RatFunc& operator[](size_t i) const { return c_[i]; }
    RatFunc& operator[](size_t i) { return c_[i]; }

    SeriesY truncated(unsigned order) const;

    friend SeriesY operator+(const SeriesY& a, const SeriesY& b);
    friend SeriesY operator-(const SeriesY& a, const SeriesY& b);
    friend SeriesY operator*(const SeriesY& a, const SeriesY& b);
    friend SeriesY operator*(const RatFunc& s, const SeriesY& a);
    SeriesY& operator+=(const SeriesY& o) { *this = *this + o; return *this; }
    SeriesY& operator*=(const SeriesY& o) { *this = *this * o; return *this; }

    friend bool operator==(const SeriesY& a, const SeriesY& b) { return a.c_ == b.c_; }
    friend bool operator!=(const SeriesY& a, const SeriesY& b) { return !(a == b); }

    bool constant_term_zero() const { return c_[0].is_zero(); }

private:
    std::vector<RatFunc> c_;
};

/// (1 + u)^alpha truncated at order K; u must have zero constant term.
SeriesY series_binpow(const SeriesY& u, const Rational& alpha, unsigned K);

/// exp(u) truncated at order K; u must have zero constant term.
SeriesY series_exp(const SeriesY& u, unsigned K);

} // namespace comppoly

#endif
