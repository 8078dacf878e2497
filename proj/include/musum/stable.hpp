#ifndef MUSUM_STABLE_HPP
#define MUSUM_STABLE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "musum/quadrature.hpp"
#include "musum/rng.hpp"
#include "musum/special.hpp"

// Symmetric stable laws and their moment constants.
//
// Normalization is fixed once and for all:
//   real, s < 2   characteristic function exp(-|t|^s)
//   real, s = 2   standard normal
//   complex, s = 2  rotation invariant with E|Z|^2 = 1
//   complex, s < 2  Z = sqrt(A) (G1 + i G2), G_k iid standard normal and A a
//                   positive (s/2)-stable variate with E exp(-u A) = exp(-u^{s/2})
// With these choices a linear image <alpha, Z> of an i.i.d. coordinate vector
// is distributed as ||alpha||_{l_s} Z_1, which is the identity every estimator
// in this library rests on. The overall scale is immaterial downstream as long
// as the moment constants come from the same law; a scale-consistency test
// enforces that.

namespace musum {

enum class Field { real, cplx };

inline const char* field_name(Field f) { return f == Field::real ? "real" : "complex"; }

inline Field field_from_name(const std::string& s) {
    if (s == "real") return Field::real;
    if (s == "complex") return Field::cplx;
    throw std::invalid_argument("unknown field tag: " + s);
}

struct StableLaw {
    double s;
    Field field;

    StableLaw(double s_, Field field_) : s(s_), field(field_) {
        if (!(s > 0.0 && s <= 2.0)) {
            throw std::domain_error("StableLaw: stability index must lie in (0, 2], got " +
                                    std::to_string(s_));
        }
    }
};

struct MomentConstant {
    double s;
    double q;
    Field field;
    double value;            // c_{s,q} = (E|Z|^q)^{1/q}
    double moment_closed;    // E|Z|^q, closed Gamma form
    double moment_quadrature;// E|Z|^q, independent quadrature route
};

namespace detail {

constexpr double kPi = 3.14159265358979323846264338327950288;

inline void check_moment_order(double s, double q) {
    if (!(s > 0.0 && s <= 2.0)) {
        throw std::domain_error("moment constant: stability index outside (0, 2]");
    }
    if (!(q > 0.0)) {
        throw std::domain_error("moment constant: moment order must be positive");
    }
    if (s < 2.0 && q >= s) {
        throw std::domain_error("moment constant: q-th moment diverges for q >= s (s = " +
                                std::to_string(s) + ", q = " + std::to_string(q) + ")");
    }
}

// E|Z|^q in closed Gamma form under the normalization above.
inline double stable_abs_moment_closed(double s, double q, Field field) {
    if (field == Field::real) {
        if (s == 2.0) {
            return std::pow(2.0, q / 2.0) * gamma_fn((q + 1.0) / 2.0) / std::sqrt(kPi);
        }
        return std::pow(2.0, q) * gamma_fn((1.0 + q) / 2.0) * gamma_fn(1.0 - q / s) /
               (gamma_fn(1.0 - q / 2.0) * std::sqrt(kPi));
    }
    if (s == 2.0) {
        return gamma_fn(1.0 + q / 2.0);
    }
    return std::pow(2.0, q / 2.0) * gamma_fn(1.0 + q / 2.0) * gamma_fn(1.0 - q / s) /
           gamma_fn(1.0 - q / 2.0);
}

// Gamma(x) for x in (0, 1] by quadrature, so the oracle below does not lean
// on the libm Gamma it is meant to cross-check.
inline double gamma_by_quadrature(double x) {
    double head = integrate_singular([x](double u) { return std::exp(-u) * std::pow(u, x - 1.0); },
                                     0.0, 1.0, 1e-12);
    double tail = integrate_upper([x](double u) { return std::exp(-u) * std::pow(u, x - 1.0); },
                                  1.0, 1e-12);
    return head + tail;
}

// E[A^rho] for the positive alpha0-stable subordinator with Laplace transform
// exp(-u^{alpha0}), via the Mellin identity
//   a^rho = rho / Gamma(1 - rho) * Int_0^inf (1 - e^{-u a}) u^{-1-rho} du.
// All integrals are smooth or endpoint-singular; no oscillatory pieces.
inline double subordinator_fractional_moment(double alpha0, double rho) {
    double head = integrate_singular(
        [alpha0, rho](double u) {
            return (-std::expm1(-std::pow(u, alpha0))) * std::pow(u, -1.0 - rho);
        },
        0.0, 1.0, 1e-12);
    // u -> 1/u maps the tail onto (0, 1) with an integrable endpoint.
    double tail = integrate_singular(
        [alpha0, rho](double u) {
            return (-std::expm1(-std::pow(u, -alpha0))) * std::pow(u, rho - 1.0);
        },
        0.0, 1.0, 1e-12);
    return rho / gamma_by_quadrature(1.0 - rho) * (head + tail);
}

// Quadrature route for E|Z|^q. For s < 2 the law is a Gaussian subordinated
// by an (s/2)-stable positive variate, which turns the heavy-tailed moment
// into a product of three smooth one-dimensional integrals.
inline double stable_abs_moment_quadrature(double s, double q, Field field) {
    if (field == Field::real) {
        double gauss = std::sqrt(2.0 / kPi) *
                       integrate_upper([q](double x) { return std::pow(x, q) * std::exp(-0.5 * x * x); },
                                       0.0, 1e-12);
        if (s == 2.0) return gauss;
        return std::pow(2.0, q / 2.0) * subordinator_fractional_moment(s / 2.0, q / 2.0) * gauss;
    }
    if (s == 2.0) {
        return integrate_upper([q](double r) { return 2.0 * std::pow(r, q + 1.0) * std::exp(-r * r); },
                               0.0, 1e-12);
    }
    double rayleigh = integrate_upper(
        [q](double r) { return std::pow(r, q + 1.0) * std::exp(-0.5 * r * r); }, 0.0, 1e-12);
    return subordinator_fractional_moment(s / 2.0, q / 2.0) * rayleigh;
}

} // namespace detail

// c_{s,q}: the q-th moment root of the one-dimensional law. The closed form
// and the quadrature route must agree to 1e-6 before a value is handed out.
inline MomentConstant constant_c(double s, double q, Field field) {
    detail::check_moment_order(s, q);
    double closed = detail::stable_abs_moment_closed(s, q, field);
    double quad = detail::stable_abs_moment_quadrature(s, q, field);
    double rel = std::abs(closed - quad) / closed;
    if (!(rel <= 1e-6)) {
        throw std::runtime_error("constant_c: closed form and quadrature oracle disagree (rel " +
                                 std::to_string(rel) + ") at s=" + std::to_string(s) +
                                 " q=" + std::to_string(q));
    }
    return MomentConstant{s, q, field, std::pow(closed, 1.0 / q), closed, quad};
}

// ---------------------------------------------------------------------------
// Samplers. All are rejection-free transforms of (uniform, exponential)
// pairs, so consumption per coordinate is fixed and counter-addressable.

// Symmetric s-stable, cf exp(-|t|^s) (Chambers-Mallows-Stuck).
inline double stable_real_draw(SampleCursor& cur, double s) {
    if (s == 2.0) return cur.gaussian();
    double U = detail::kPi * (cur.uniform() - 0.5);
    double W = cur.exponential();
    return std::sin(s * U) / std::pow(std::cos(U), 1.0 / s) *
           std::pow(std::cos((1.0 - s) * U) / W, (1.0 - s) / s);
}

// Positive alpha0-stable with Laplace transform exp(-u^{alpha0}), alpha0 < 1.
// One-sided CMS; the scale factor cancels against the skewness shift.
inline double subordinator_draw(SampleCursor& cur, double alpha0) {
    double U = detail::kPi * (cur.uniform() - 0.5);
    double W = cur.exponential();
    double shifted = alpha0 * (U + detail::kPi / 2.0);
    return std::sin(shifted) / std::pow(std::cos(U), 1.0 / alpha0) *
           std::pow(std::cos(U - shifted) / W, (1.0 - alpha0) / alpha0);
}

// Rotation-invariant complex coordinate under the fixed normalization.
inline std::complex<double> stable_complex_draw(SampleCursor& cur, double s) {
    if (s == 2.0) {
        auto [g1, g2] = cur.gaussian_pair();
        constexpr double inv_sqrt2 = 0.70710678118654752440084436210485;
        return {g1 * inv_sqrt2, g2 * inv_sqrt2};
    }
    double a = subordinator_draw(cur, s / 2.0);
    auto [g1, g2] = cur.gaussian_pair();
    double root = std::sqrt(a);
    return {root * g1, root * g2};
}

template <class K>
K stable_draw(SampleCursor& cur, double s);

template <>
inline double stable_draw<double>(SampleCursor& cur, double s) {
    return stable_real_draw(cur, s);
}

template <>
inline std::complex<double> stable_draw<std::complex<double>>(SampleCursor& cur, double s) {
    return stable_complex_draw(cur, s);
}

// i.i.d. draws from the 1-D law; deterministic in (seed, stream, index).
inline std::vector<double> sample_stable(const StableLaw& law, std::int64_t count, uint64_t seed,
                                         uint32_t stream = 0) {
    if (law.field != Field::real) {
        throw std::invalid_argument("sample_stable: law is complex, use sample_stable_complex");
    }
    if (count < 1) throw std::invalid_argument("sample_stable: count must be >= 1");
    std::vector<double> out(static_cast<size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        SampleCursor cur(seed, stream, static_cast<uint64_t>(i));
        out[static_cast<size_t>(i)] = stable_real_draw(cur, law.s);
    }
    return out;
}

inline std::vector<std::complex<double>> sample_stable_complex(const StableLaw& law,
                                                               std::int64_t count, uint64_t seed,
                                                               uint32_t stream = 0) {
    if (law.field != Field::cplx) {
        throw std::invalid_argument("sample_stable_complex: law is real");
    }
    if (count < 1) throw std::invalid_argument("sample_stable_complex: count must be >= 1");
    std::vector<std::complex<double>> out(static_cast<size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        SampleCursor cur(seed, stream, static_cast<uint64_t>(i));
        out[static_cast<size_t>(i)] = stable_complex_draw(cur, law.s);
    }
    return out;
}

// Product measure mu_s^dim; coordinates i.i.d. from the 1-D law.
template <class K>
std::vector<std::vector<K>> sample_stable_vector(const StableLaw& law, int dim, std::int64_t count,
                                                 uint64_t seed, uint32_t stream = 0) {
    if (dim < 1) throw std::invalid_argument("sample_stable_vector: dim must be >= 1");
    if (count < 1) throw std::invalid_argument("sample_stable_vector: count must be >= 1");
    std::vector<std::vector<K>> out(static_cast<size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        SampleCursor cur(seed, stream, static_cast<uint64_t>(i));
        auto& vec = out[static_cast<size_t>(i)];
        vec.resize(static_cast<size_t>(dim));
        for (int j = 0; j < dim; ++j) vec[static_cast<size_t>(j)] = stable_draw<K>(cur, law.s);
    }
    return out;
}

// l_s norm of a weight vector; the scaling constant of <alpha, Z>.
template <class K>
double ls_norm(const std::vector<K>& alpha, double s) {
    double acc = 0.0;
    for (const auto& a : alpha) acc += std::pow(std::abs(a), s);
    return std::pow(acc, 1.0 / s);
}

} // namespace musum

#endif
