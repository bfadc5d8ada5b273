#include "comppoly/series.hpp"

#include "comppoly/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace comppoly {

SeriesY::SeriesY(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("SeriesY: empty coefficient list");
}

SeriesY SeriesY::constant(const RatFunc& c, unsigned order) {
    SeriesY s(order);
    s.c_[0] = c;
    return s;
}

SeriesY SeriesY::truncated(unsigned order) const {
    SeriesY s(order);
    for (size_t i = 0; i <= std::min<size_t>(order, this->order()); ++i) s.c_[i] = c_[i];
    return s;
}

SeriesY operator+(const SeriesY& a, const SeriesY& b) {
    unsigned k = std::min(a.order(), b.order());
    SeriesY s(k);
    for (size_t i = 0; i <= k; ++i) s.c_[i] = a.c_[i] + b.c_[i];
    return s;
}

SeriesY operator-(const SeriesY& a, const SeriesY& b) {
    unsigned k = std::min(a.order(), b.order());
    SeriesY s(k);
    for (size_t i = 0; i <= k; ++i) s.c_[i] = a.c_[i] - b.c_[i];
    return s;
}

SeriesY operator*(const SeriesY& a, const SeriesY& b) {
    unsigned k = std::min(a.order(), b.order());
    SeriesY s(k);
    for (size_t i = 0; i <= k; ++i)
        for (size_t j = 0; i + j <= k; ++j) s.c_[i + j] += a.c_[i] * b.c_[j];
    return s;
}

SeriesY operator*(const RatFunc& f, const SeriesY& a) {
    SeriesY s(a.order());
    for (size_t i = 0; i <= a.order(); ++i) s.c_[i] = f * a.c_[i];
    return s;
}

SeriesY series_binpow(const SeriesY& u, const Rational& alpha, unsigned K) {
    if (!u.constant_term_zero())
        throw std::invalid_argument("series_binpow: nonzero constant term");
    SeriesY ut = u.truncated(K);
    SeriesY acc = SeriesY::one(K);
    SeriesY upow = ut;
    for (unsigned k = 1; k <= K; ++k) {
        acc += RatFunc(gen_binom(alpha, k)) * upow;
        if (k < K) upow *= ut;
    }
    return acc;
}

SeriesY series_exp(const SeriesY& u, unsigned K) {
    if (!u.constant_term_zero())
        throw std::invalid_argument("series_exp: nonzero constant term");
    SeriesY ut = u.truncated(K);
    SeriesY acc = SeriesY::one(K);
    SeriesY upow = ut;
    for (unsigned k = 1; k <= K; ++k) {
        acc += RatFunc(Rational(BigInt(1), factorial(k))) * upow;
        if (k < K) upow *= ut;
    }
    return acc;
}

} // namespace comppoly
