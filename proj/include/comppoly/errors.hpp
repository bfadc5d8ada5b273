#ifndef COMPPOLY_ERRORS_HPP
#define COMPPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace comppoly {

// Exact division failed: the divisor does not divide the dividend.
struct NonDivisibleError : std::domain_error {
    explicit NonDivisibleError(const std::string& msg) : std::domain_error(msg) {}
};

// A Rodrigues extraction left factors that do not cancel to a polynomial.
struct NonPolynomialResidueError : std::domain_error {
    explicit NonPolynomialResidueError(const std::string& msg) : std::domain_error(msg) {}
};

// A generating-function coefficient failed to reduce to denominator 1.
struct NonPolynomialCoefficientError : std::domain_error {
    explicit NonPolynomialCoefficientError(const std::string& msg) : std::domain_error(msg) {}
};

// Parameter values break a structural invariant (exponent collisions,
// unmergeable proportional bases, invalid weights).
struct DegenerateParameterError : std::domain_error {
    explicit DegenerateParameterError(const std::string& msg) : std::domain_error(msg) {}
};

// A Pochhammer factor in a terminating-series denominator vanished.
struct DenominatorDegeneracyError : std::domain_error {
    explicit DenominatorDegeneracyError(const std::string& msg) : std::domain_error(msg) {}
};

} // namespace comppoly

#endif
