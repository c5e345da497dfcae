// Fast end-to-end invariant suite behind the `selftest` subcommand.  Each
// check is deterministic and cheap; together they touch every module.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hypharm/disk.hpp"
#include "hypharm/gamma.hpp"
#include "hypharm/hyp2f1.hpp"
#include "hypharm/legendre.hpp"
#include "hypharm/morera.hpp"
#include "hypharm/radial.hpp"
#include "hypharm/report.hpp"
#include "hypharm/tauberian.hpp"
#include "hypharm/transform.hpp"

namespace hypharm {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail; // worst residual or failure reason
};

namespace detail {

inline void check(std::vector<CheckResult>& out, const std::string& name, double residual,
                  double tol) {
    out.push_back({name, residual <= tol,
                   "residual " + fmt_real(residual) + " tol " + fmt_real(tol)});
}

} // namespace detail

inline std::vector<CheckResult> run_selftest() {
    std::vector<CheckResult> out;
    const double pi = 3.14159265358979323846;

    auto guarded = [&](const std::string& name, auto&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            out.push_back({name, false, std::string("exception: ") + e.what()});
        }
    };

    guarded("gamma_reflection", [&] {
        double worst = 0;
        for (cplx z : {cplx(0.3, 1.2), cplx(-2.4, 0.7), cplx(0.9, -3.0)}) {
            const cplx lhs = complex_gamma(z) * complex_gamma(1.0 - z);
            const cplx rhs = pi / std::sin(pi * z);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
        }
        detail::check(out, "gamma_reflection", worst, 1e-12);
    });

    guarded("hyp2f1_parameter_symmetry", [&] {
        double worst = 0;
        const cplx a(0.7, 0.4), b(-1.3, 2.0), c(2.2, -0.5);
        for (cplx z : {cplx(0.3, 0.1), cplx(-0.7, 0.0), cplx(0.2, -0.6)})
            worst = std::max(worst, std::abs(hyp2f1(a, b, c, z) - hyp2f1(b, a, c, z)));
        detail::check(out, "hyp2f1_parameter_symmetry", worst, 1e-13);
    });

    guarded("hyp2f1_log2", [&] {
        detail::check(out, "hyp2f1_log2",
                      std::abs(hyp2f1(1.0, 1.0, 2.0, -1.0) - std::log(2.0)), 1e-12);
    });

    guarded("legendre_p_degree_symmetry", [&] {
        double worst = 0;
        for (cplx s : {cplx(0.3, 2.0), cplx(0.5, 5.0), cplx(0.1, 0.4)})
            for (double x : {1.5, 4.0, 60.0})
                worst = std::max(worst, std::abs(legendre_p(s - 1.0, x) -
                                                 legendre_p(-s, x)));
        detail::check(out, "legendre_p_degree_symmetry", worst, 1e-10);
    });

    guarded("legendre_q_closed_forms", [&] {
        const double q0 = std::abs(legendre_q(cplx(0, 0), 2.0) - 0.5 * std::log(3.0));
        const double q1 = std::abs(legendre_q(cplx(1, 0), 2.0) - (std::log(3.0) - 1.0));
        detail::check(out, "legendre_q_closed_forms", std::max(q0, q1), 1e-12);
    });

    guarded("legendre_wronskian", [&] {
        double worst = 0;
        for (cplx nu : {cplx(0, 0), cplx(0.5, 0.5), cplx(-0.5, -0.5), cplx(2, 3)})
            for (double x : {1.5, 2.0, 5.0, 20.0})
                worst = std::max(
                    worst, legendre_wronskian_residual(ComplexDegree{nu}, x, 1e-5));
        detail::check(out, "legendre_wronskian", worst, 1e-6);
    });

    guarded("transform_indicator_at_one", [&] {
        const RadialFunction f = RadialFunction::indicator(1.0, 2.0);
        detail::check(out, "transform_indicator_at_one",
                      std::abs(gelfand_transform(f, StripPoint(cplx(1, 0))) - 0.5),
                      1e-10);
    });

    guarded("transform_symmetry_and_reality", [&] {
        const RadialFunction f = RadialFunction::exp_decay(1.0);
        double worst = 0;
        for (cplx s : {cplx(0.3, 1.0), cplx(0.5, 2.5), cplx(0.2, 0.0)}) {
            const cplx a = gelfand_transform(f, StripPoint(s));
            worst = std::max(worst,
                             std::abs(a - gelfand_transform(f, StripPoint(1.0 - s))));
            worst = std::max(
                worst, std::abs(std::conj(a) -
                                gelfand_transform(f, StripPoint(std::conj(s)))));
        }
        detail::check(out, "transform_symmetry_and_reality", worst, 1e-9);
    });

    guarded("resolvent_contract", [&] {
        const SpectralParameter lam{cplx(2, 0)};
        const RadialFunction b = RadialFunction::resolvent_kernel(lam);
        double worst = 0;
        for (cplx s : {cplx(0.5, 1.0), cplx(0.25, 2.0), cplx(0.0, 0.5)}) {
            const StripPoint sp{s};
            const cplx bh = gelfand_transform(b, sp);
            worst = std::max(
                worst, std::abs(bh * (sp.eigenvalue() - lam.eigenvalue()) - 1.0));
        }
        detail::check(out, "resolvent_contract", worst, 1e-7);
    });

    guarded("resolvent_pairing", [&] {
        const cplx v = resolvent_transform(BoundedRadialFunction::constant(1.0),
                                           SpectralParameter{cplx(2, 0)});
        detail::check(out, "resolvent_pairing", std::abs(v - 0.5), 1e-8);
    });

    guarded("division_identity", [&] {
        const RadialFunction f = RadialFunction::indicator(1.0, 2.0);
        const SpectralParameter lam{cplx(0.3, 0.0)};
        const StripPoint s{cplx(0.5, 1.5)};
        const cplx rhs = (gelfand_transform(f, StripPoint(lam.lambda)) -
                          gelfand_transform(f, s)) /
                         (lam.eigenvalue() - s.eigenvalue());
        // transform of T_lambda f by direct quadrature over its support
        const cplx nu = s.s - 1.0;
        auto integrand = [&](double u) -> cplx {
            const double x = std::cosh(u);
            if (u == 0.0 || x >= 2.0) return 0.0;
            return t_lambda(f, lam, x) * legendre_p(nu, x) * std::sinh(u);
        };
        QuadResult q = integrate(integrand, 0.0, std::acosh(2.0), 1e-10);
        detail::check(out, "division_identity", std::abs(0.5 * q.value - rhs), 1e-6);
    });

    guarded("convolution_multiplicativity", [&] {
        const RadialFunction f = RadialFunction::indicator(1.0, 2.0);
        const StripPoint s{cplx(1, 0)};
        const cplx conv = convolve_transform(f, f, s);
        const cplx prod = gelfand_transform(f, s) * gelfand_transform(f, s);
        detail::check(out, "convolution_multiplicativity", std::abs(conv - prod), 1e-6);
    });

    guarded("decay_diagnostics_finite", [&] {
        const RadialFunction f = RadialFunction::indicator(1.0, 2.0);
        const DecayDiagnostic di = delta_inf_diagnostic(f, 4.0, 16);
        const DecayDiagnostic dz = delta_zero_diagnostic(f, 1e-3, 16);
        const bool ok = std::isfinite(di.limsup_proxy) && std::isfinite(dz.limsup_proxy);
        out.push_back({"decay_diagnostics_finite", ok,
                       "proxies " + fmt_real(di.limsup_proxy) + " " +
                           fmt_real(dz.limsup_proxy)});
    });

    guarded("mobius_group_laws", [&] {
        double worst = 0;
        const auto gs = random_mobius_sample(6, 7u);
        const cplx z(0.31, -0.42);
        for (std::size_t i = 0; i + 1 < gs.size(); i += 2) {
            const MobiusMap comp = gs[i].compose(gs[i + 1]);
            worst = std::max(worst, std::abs(comp(z) - gs[i](gs[i + 1](z))));
            const MobiusMap inv = gs[i].inverse();
            worst = std::max(worst, std::abs(inv(gs[i](z)) - z));
        }
        detail::check(out, "mobius_group_laws", worst, 1e-12);
    });

    guarded("rotation_invariance", [&] {
        const DiskFunction f{[](cplx z) { return z * z + std::conj(z); },
                             DiskFunction::Tag::custom};
        const MobiusMap g = MobiusMap::translation(0.8);
        const MobiusMap k = MobiusMap::rotation(1.234);
        const cplx a = circle_average(f, g, 0.6);
        const cplx b = circle_average(f, g.compose(k), 0.6);
        detail::check(out, "rotation_invariance", std::abs(a - b), 1e-12);
    });

    guarded("holomorphic_contour", [&] {
        const DiskFunction f{[](cplx z) { return z * z; },
                             DiskFunction::Tag::holomorphic_test};
        double worst = 0;
        for (const auto& g : random_mobius_sample(5, 11u))
            worst = std::max(worst, std::abs(morera_contour_integral(f, g, 0.5)));
        detail::check(out, "holomorphic_contour", worst, 1e-10);
    });

    guarded("conjz_contour_area", [&] {
        const DiskFunction f{[](cplx z) { return std::conj(z); },
                             DiskFunction::Tag::custom};
        const cplx v = morera_contour_integral(f, MobiusMap::identity(), 0.5);
        detail::check(out, "conjz_contour_area", std::abs(v - cplx(0, 0.5 * pi)),
                      1e-10);
    });

    guarded("poisson_mean_value", [&] {
        BoundaryFunction b;
        b.coefficients = {{1, cplx(0.5, 0)}, {-1, cplx(0.5, 0)}}; // cos(theta)
        const DiskFunction f = poisson_disk_function(b);
        const RadialMeasure mu({{0.5, cplx(1, 0)}});
        const double res =
            mu_mean_value_residual(f, mu, random_mobius_sample(5, 13u));
        detail::check(out, "poisson_mean_value", res, 1e-9);
    });

    guarded("planted_zero_counts", [&] {
        const cplx z1(0.4, 0.3), z2(0.7, 0.8);
        const Rectangle rect(cplx(0, 0), cplx(1, 1));
        const int c1 = argument_principle_count(
            [&](cplx z) { return z - z1; }, rect);
        const int c2 = argument_principle_count(
            [&](cplx z) { return (z - z1) * (z - z2); }, rect);
        const Rectangle left(cplx(0, 0), cplx(0.55, 1));
        const Rectangle right(cplx(0.55, 0), cplx(1, 1));
        const int cl = argument_principle_count(
            [&](cplx z) { return (z - z1) * (z - z2); }, left);
        const int cr = argument_principle_count(
            [&](cplx z) { return (z - z1) * (z - z2); }, right);
        const bool ok = c1 == 1 && c2 == 2 && cl == 1 && cr == 1;
        out.push_back({"planted_zero_counts", ok,
                       "counts " + std::to_string(c1) + " " + std::to_string(c2) +
                           " " + std::to_string(cl) + "+" + std::to_string(cr)});
    });

    guarded("morera_j_window_winding", [&] {
        const int w = argument_principle_count(
            [](cplx s) { return morera_j(0.5, s); },
            Rectangle(cplx(0, 0.01), cplx(1, 20)));
        out.push_back({"morera_j_window_winding", w == 0,
                       "winding " + std::to_string(w)});
    });

    return out;
}

} // namespace hypharm
