// The Gelfand (spherical) transform on the strip and the operators built on
// it: the L1-Linf pairing, the resolvent kernel b_lambda = 2 Q_{lambda-1},
// the resolvent transform, the division operator T_lambda, and transform-side
// convolution.
#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "hypharm/legendre.hpp"
#include "hypharm/quadrature.hpp"
#include "hypharm/radial.hpp"

namespace hypharm {

namespace detail {

// integral of f(x) w(x) dx over [lower, inf), substituted x = cosh u.
// Splits at the function's breakpoints; for unbounded support marches
// unit panels in u until the contributions are negligible.
template <typename W>
QuadResult radial_weighted_integral(const RadialFunction& f, const W& w,
                                    double abs_tol, double lower = 1.0) {
    if (f.kind() == RadialFunction::Kind::zero) return {};
    auto integrand = [&](double u) -> cplx {
        const double x = std::cosh(u);
        const double su = std::sinh(u);
        if (u == 0.0 || x <= lower) return 0.0;
        return f(x) * w(x) * su;
    };
    const double u_lo = (lower <= 1.0) ? 0.0 : std::acosh(lower);
    std::vector<double> cuts{u_lo};
    for (double bp : f.breakpoints())
        if (bp > lower) cuts.push_back(std::acosh(bp));
    std::sort(cuts.begin(), cuts.end());

    QuadResult total;
    if (f.has_compact_support()) {
        const double u_hi = std::acosh(std::max(f.support_upper(), lower));
        cuts.push_back(u_hi);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            if (cuts[i + 1] > cuts[i])
                total += integrate(integrand, cuts[i], cuts[i + 1],
                                   abs_tol / (cuts.size() - 1));
        return total;
    }
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        if (cuts[i + 1] > cuts[i])
            total += integrate(integrand, cuts[i], cuts[i + 1], abs_tol / 4);
    double u = cuts.back();
    const double tail_tol = abs_tol / 8;
    int quiet = 0;
    while (u < 300.0) {
        QuadResult panel = integrate(integrand, u, u + 1.0, tail_tol);
        total += panel;
        u += 1.0;
        if (std::abs(panel.value) < tail_tol) {
            if (++quiet >= 2) return total;
        } else {
            quiet = 0;
        }
    }
    total.converged = false;
    return total;
}

} // namespace detail

inline RadialFunction RadialFunction::resolvent_kernel(SpectralParameter lam) {
    if (lam.in_strip())
        throw std::domain_error(
            "resolvent_kernel: lambda must lie outside the closed strip");
    const SpectralParameter canon = lam.canonical(); // Re lambda > 1
    if (is_nonpositive_integer(canon.lambda, 1e-10))
        throw std::domain_error("resolvent_kernel: lambda - 1 is a negative integer");
    RadialFunction f(Kind::resolvent_kernel);
    f.lam_ = canon.lambda;
    // L1 norm: march unit panels in u of |2 Q_{lambda-1}(cosh u)| sinh u
    const cplx nu = canon.lambda - 1.0;
    auto integrand = [&](double u) -> cplx {
        if (u == 0.0) return 0.0;
        return cplx(2.0 * std::abs(legendre_q(nu, std::cosh(u))) * std::sinh(u));
    };
    QuadResult total;
    double u = 0.0;
    int quiet = 0;
    while (u < 300.0) {
        QuadResult panel = integrate(integrand, u, u + 1.0, 1e-11);
        total += panel;
        u += 1.0;
        if (std::abs(panel.value) < 1e-11) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
    }
    f.l1_ = total.value.real();
    return f;
}

/// Gelfand transform f^(s) = 1/2 int_1^inf f(x) P_{s-1}(x) dx.
inline cplx gelfand_transform(const RadialFunction& f, StripPoint s,
                              double* err_out = nullptr) {
    const cplx nu = s.s - 1.0;
    const double tol = 1e-9 * (1.0 + f.l1_norm());
    QuadResult q = detail::radial_weighted_integral(
        f, [&](double x) { return legendre_p(nu, x); }, tol);
    if (err_out) *err_out = q.error;
    if (!q.converged)
        throw quadrature_error("gelfand_transform: quadrature did not converge",
                               q.error);
    return 0.5 * q.value;
}

/// mu^(s) = int_0^inf P_{s-1}(cosh 2 zeta) dmu(zeta).
inline cplx measure_gelfand(const RadialMeasure& mu, StripPoint s) {
    const cplx nu = s.s - 1.0;
    cplx sum = 0.0;
    for (const auto& a : mu.atoms())
        sum += a.weight * legendre_p(nu, std::cosh(2.0 * a.zeta));
    if (mu.density()) {
        const RadialFunction& d = *mu.density();
        const double z_hi =
            d.has_compact_support() ? d.support_upper() - 1.0 : 200.0;
        QuadResult q = integrate(
            [&](double z) { return d(1.0 + z) * legendre_p(nu, std::cosh(2.0 * z)); },
            0.0, z_hi, 1e-10);
        sum += q.value;
    }
    return sum;
}

/// <f, g> = 1/2 int_1^inf f(x) g(x) dx.
inline cplx pair(const RadialFunction& f, const BoundedRadialFunction& g) {
    const double tol = 1e-9 * (1.0 + f.l1_norm() * (1.0 + g.sup_norm));
    QuadResult q = detail::radial_weighted_integral(
        f, [&](double x) { return g(x); }, tol);
    if (!q.converged)
        throw quadrature_error("pair: quadrature did not converge", q.error);
    return 0.5 * q.value;
}

inline RadialFunction resolvent_kernel(SpectralParameter lam) {
    return RadialFunction::resolvent_kernel(lam);
}

/// E[g](lambda) = <b_lambda, g>, lambda outside the closed strip.
inline cplx resolvent_transform(const BoundedRadialFunction& g, SpectralParameter lam) {
    return pair(RadialFunction::resolvent_kernel(lam), g);
}

/// Division operator, pointwise:
/// (T_lambda f)(t) = P_{l-1}(t) int_{x>t} f Q_{l-1} dx - Q_{l-1}(t) int_{x>t} f P_{l-1} dx.
/// Its Gelfand transform is (f^(lambda) - f^(s)) / (lambda(1-lambda) - s(1-s)).
inline cplx t_lambda(const RadialFunction& f, SpectralParameter lam, double t) {
    const double re = lam.lambda.real();
    if (!(t > 1.0)) throw std::domain_error("t_lambda: requires t > 1");
    if (!(re > 0.0 && re < 1.0) || std::abs(re - 0.5) < 1e-12)
        throw std::domain_error(
            "t_lambda: lambda must be in the strip interior off Re = 0, 1/2, 1");
    const cplx nu = lam.lambda - 1.0;
    const double tol = 1e-10 * (1.0 + f.l1_norm());
    QuadResult iq = detail::radial_weighted_integral(
        f, [&](double x) { return legendre_q(nu, x); }, tol, t);
    QuadResult ip = detail::radial_weighted_integral(
        f, [&](double x) { return legendre_p(nu, x); }, tol, t);
    if (!iq.converged || !ip.converged)
        throw quadrature_error("t_lambda: tail quadrature did not converge",
                               iq.error + ip.error);
    return legendre_p(nu, t) * iq.value - legendre_q(nu, t) * ip.value;
}

/// Transform of f * g evaluated without materializing the convolution:
/// 1/4 double-integral of f(x) g(y) times the circle-averaged spherical
/// kernel; equals f^(s) g^(s).
inline cplx convolve_transform(const RadialFunction& f, const RadialFunction& g,
                               StripPoint s) {
    const cplx nu = s.s - 1.0;
    auto kernel = [&](double x, double y) {
        const double r = std::sqrt((x * x - 1.0) * (y * y - 1.0));
        auto ftheta = [&](double th) {
            return legendre_p(nu, x * y + r * std::cos(th));
        };
        return periodic_trapezoid_adaptive(ftheta, 32, 1e-10 * 6.283185307179586) /
               6.283185307179586476925;
    };
    const double tol_inner = 1e-8 * (1.0 + g.l1_norm());
    auto inner = [&](double x) {
        QuadResult q = detail::radial_weighted_integral(
            g, [&](double y) { return kernel(x, y); }, tol_inner);
        return q.value;
    };
    const double tol_outer = 1e-7 * (1.0 + f.l1_norm());
    QuadResult q = detail::radial_weighted_integral(
        f, [&](double x) { return inner(x); }, tol_outer);
    if (!q.converged)
        throw quadrature_error("convolve_transform: quadrature did not converge",
                               q.error);
    return 0.25 * q.value;
}

} // namespace hypharm
