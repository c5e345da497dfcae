// Legendre functions P_nu(x), Q_nu(x) of complex degree on [1, inf).
//
// P uses the hypergeometric form 2F1(-nu, nu+1; 1; (1-x)/2) up to x = 50;
// beyond that, either the descending two-term representation in 1/x^2 or,
// near its degenerate degrees (2*nu close to an integer), the Laplace
// integral (1/pi) int_0^pi (x + sqrt(x^2-1) cos t)^nu dt.
// Q uses sqrt(pi) Gamma(nu+1) / (Gamma(nu+3/2) (2x)^{nu+1})
//   * 2F1((nu+1)/2, (nu+2)/2; nu+3/2; 1/x^2).
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "hypharm/gamma.hpp"
#include "hypharm/hyp2f1.hpp"
#include "hypharm/quadrature.hpp"

namespace hypharm {

/// Complex Legendre degree.  Degree subscripts throughout the library are
/// nu = s - 1 (transform side) or nu = lambda - 1 (resolvent side).
struct ComplexDegree {
    cplx nu;
    bool is_negative_integer(double tol = 1e-12) const {
        return is_nonpositive_integer(nu, tol) && nu.real() < -0.5;
    }
};

namespace detail {

inline const double pi_v = 3.14159265358979323846;

// Descending representation, valid away from half-integer degrees:
// P_nu(x) = A (2x)^nu F(-nu/2, (1-nu)/2; 1/2-nu; 1/x^2)
//         + B (2x)^{-nu-1} F((nu+1)/2, nu/2+1; nu+3/2; 1/x^2)
inline cplx legendre_p_descending(cplx nu, double x) {
    const double z = 1.0 / (x * x);
    const double sqrt_pi = 1.7724538509055160273;
    const cplx A = complex_gamma(nu + 0.5) * reciprocal_gamma(nu + 1.0) / sqrt_pi;
    const cplx B = complex_gamma(-nu - 0.5) * reciprocal_gamma(-nu) / sqrt_pi;
    const cplx t1 = A * std::exp(nu * std::log(2.0 * x)) *
                    hyp2f1(-nu / 2.0, (1.0 - nu) / 2.0, 0.5 - nu, z);
    const cplx t2 = B * std::exp(-(nu + 1.0) * std::log(2.0 * x)) *
                    hyp2f1((nu + 1.0) / 2.0, nu / 2.0 + 1.0, nu + 1.5, z);
    return t1 + t2;
}

// Laplace integral, uniformly valid in nu for x > 1.
inline cplx legendre_p_laplace(cplx nu, double x) {
    const double s = std::sqrt((x - 1.0) * (x + 1.0));
    // x + s*cos(theta) rewritten cancellation-free: x - s = 1/(x + s)
    auto integrand = [&](double theta) {
        const double c = std::cos(0.5 * theta);
        return std::exp(nu * std::log(1.0 / (x + s) + 2.0 * s * c * c));
    };
    // The integrand has a boundary layer of width ~1/x at theta = pi where
    // x + s*cos(theta) drops to ~1/(2x).  Geometrically graded panels toward
    // pi resolve it; a crude first pass sets a result-relative tolerance.
    const int levels = static_cast<int>(std::ceil(std::log2(x))) + 4;
    std::vector<double> edges;
    edges.push_back(0.0);
    for (int k = 0; k <= levels; ++k) edges.push_back(pi_v - (pi_v / 2) * std::pow(2.0, -k));
    edges.push_back(pi_v);

    auto pass = [&](double abs_tol) {
        QuadResult total;
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            total += integrate(integrand, edges[i], edges[i + 1], abs_tol / edges.size(), 200);
        return total;
    };
    QuadResult first = pass(1e-6);
    const double scale = std::max(std::abs(first.value), 1e-300);
    QuadResult fine = pass(1e-13 * scale * pi_v);
    return fine.value / pi_v;
}

} // namespace detail

/// Legendre function of the first kind P_nu(x), x >= 1.
inline cplx legendre_p(ComplexDegree deg, double x) {
    if (!(x >= 1.0)) throw std::domain_error("legendre_p: requires x >= 1");
    if (x == 1.0) return 1.0;
    cplx nu = deg.nu;
    if (nu.real() < -0.5) nu = -nu - 1.0; // P_nu = P_{-nu-1}
    if (x <= 50.0) return hyp2f1(-nu, nu + 1.0, 1.0, (1.0 - x) / 2.0);
    if (detail::dist_to_integer(2.0 * nu) >= 0.1)
        return detail::legendre_p_descending(nu, x);
    return detail::legendre_p_laplace(nu, x);
}

inline cplx legendre_p(cplx nu, double x) { return legendre_p(ComplexDegree{nu}, x); }

/// Legendre function of the second kind Q_nu(x), x > 1, nu not a negative integer.
inline cplx legendre_q(ComplexDegree deg, double x) {
    if (!(x > 1.0)) throw std::domain_error("legendre_q: requires x > 1");
    cplx nu = deg.nu;
    if (is_nonpositive_integer(nu + 1.0, 1e-10))
        throw std::domain_error("legendre_q: pole at negative integer degree");
    // Gamma(nu + 3/2) degenerates toward nu in {-3/2, -5/2, ...}; route those
    // through Q_nu = Q_{-nu-1} + pi*cot(pi*(-nu-1)) P_{-nu-1} with the
    // reflected degree on the safe side.
    const cplx c = nu + 1.5;
    const bool c_degenerate = std::abs(c.imag()) < 0.05 && c.real() < 0.5 &&
                              detail::dist_to_integer(c) < 0.05;
    if (nu.real() < -1.0 || c_degenerate) {
        const cplx nup = -nu - 1.0;
        const cplx cot = std::cos(detail::pi_v * nup) / std::sin(detail::pi_v * nup);
        return legendre_q(ComplexDegree{nup}, x) -
               detail::pi_v * cot * legendre_p(ComplexDegree{nup}, x);
    }
    const double sqrt_pi = 1.7724538509055160273;
    const cplx pref = sqrt_pi * complex_gamma(nu + 1.0) * reciprocal_gamma(c) *
                      std::exp(-(nu + 1.0) * std::log(2.0 * x));
    return pref * hyp2f1((nu + 1.0) / 2.0, (nu + 2.0) / 2.0, c, 1.0 / (x * x));
}

inline cplx legendre_q(cplx nu, double x) { return legendre_q(ComplexDegree{nu}, x); }

/// |P Q' - P' Q + 1/(x^2-1)| with central-difference derivatives of step h.
/// Numerical self-test residual for cross-validating the two evaluations.
inline double legendre_wronskian_residual(ComplexDegree deg, double x, double h) {
    if (!(x > 1.0) || !(x - h > 1.0))
        throw std::domain_error("legendre_wronskian_residual: x +/- h must stay above 1");
    const cplx p = legendre_p(deg, x), q = legendre_q(deg, x);
    const cplx dp = (legendre_p(deg, x + h) - legendre_p(deg, x - h)) / (2.0 * h);
    const cplx dq = (legendre_q(deg, x + h) - legendre_q(deg, x - h)) / (2.0 * h);
    return std::abs(p * dq - dp * q + 1.0 / (x * x - 1.0));
}

} // namespace hypharm
