#ifndef MUSUM_QUADRATURE_HPP
#define MUSUM_QUADRATURE_HPP

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace musum {

// Thin seams over Boost adaptive quadrature so only this header pulls the
// Boost machinery in.

// Finite interval, smooth integrand.
template <class F>
double integrate_finite(F&& f, double a, double b, double tol = 1e-12) {
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        std::forward<F>(f), a, b, 12, tol);
}

// Finite interval with possible integrable endpoint singularities.
template <class F>
double integrate_singular(F&& f, double a, double b, double tol = 1e-12) {
    boost::math::quadrature::tanh_sinh<double> integrator;
    return integrator.integrate(std::forward<F>(f), a, b, tol);
}

// [a, infinity) with decaying integrand.
template <class F>
double integrate_upper(F&& f, double a, double tol = 1e-12) {
    boost::math::quadrature::exp_sinh<double> integrator;
    if (a == 0.0) return integrator.integrate(std::forward<F>(f), tol);
    return integrator.integrate([&f, a](double t) { return f(a + t); }, tol);
}

} // namespace musum

#endif
