#include "comppoly/combinatorics.hpp"

#include <stdexcept>

namespace comppoly {

Rational gen_binom(const Rational& alpha, unsigned k) {
    Rational num(1);
    for (unsigned i = 0; i < k; ++i) num *= alpha - Rational(static_cast<long>(i));
    return num / Rational(factorial(k));
}

Rational pochhammer(const Rational& alpha, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= alpha + Rational(static_cast<long>(i));
    return r;
}

BigInt double_fact(long n) {
    if (n < -1) throw std::invalid_argument("double_fact: argument below -1");
    if (n <= 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

} // namespace comppoly
