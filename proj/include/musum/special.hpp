#ifndef MUSUM_SPECIAL_HPP
#define MUSUM_SPECIAL_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace musum {

// Gamma function on the positive half-line. The libm implementation is
// accurate to a few ulp; the test suite pins the recurrence and classical
// values at 1e-11/1e-12 relative error.
inline double gamma_fn(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("gamma_fn: argument must be positive, got " + std::to_string(x));
    }
    return std::tgamma(x);
}

inline double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(x));
    }
    return std::lgamma(x);
}

// Gamma(a)/Gamma(b) without overflow; needed for ratios like
// Gamma(N + p/2)/Gamma(N) at dimensions where Gamma itself overflows.
inline double gamma_ratio(double a, double b) {
    return std::exp(log_gamma(a) - log_gamma(b));
}

// Conjugate exponent: 1/r + 1/r' = 1. r = 1 and r = infinity are dual.
inline double conjugate_exponent(double r) {
    if (!(r >= 1.0)) {
        throw std::domain_error("conjugate_exponent: exponent must be >= 1");
    }
    if (std::isinf(r)) return 1.0;
    if (r == 1.0) return std::numeric_limits<double>::infinity();
    return r / (r - 1.0);
}

} // namespace musum

#endif
