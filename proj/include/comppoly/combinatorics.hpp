#ifndef COMPPOLY_COMBINATORICS_HPP
#define COMPPOLY_COMBINATORICS_HPP

#include "comppoly/rational.hpp"

namespace comppoly {

/// Generalized binomial coefficient: alpha(alpha-1)...(alpha-k+1)/k!.
Rational gen_binom(const Rational& alpha, unsigned k);

/// Rising factorial alpha(alpha+1)...(alpha+k-1).
Rational pochhammer(const Rational& alpha, unsigned k);

/// Double factorial n(n-2)(n-4)...; (-1)!! = 0!! = 1. Rejects n < -1.
BigInt double_fact(long n);

BigInt factorial(unsigned n);

} // namespace comppoly

#endif
