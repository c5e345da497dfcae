// Machine-checkable diagnostics for the Tauberian hypotheses: the decay
// functionals delta_inf and delta_0, hull scans over the canonical strip
// window, the mu-harmonicity hypothesis report, and the probability-measure
// decay chain.
//
// limsups are not computable from samples; every diagnostic returns the full
// sampled curve plus a proxy (max over the final 20% of nodes) and makes no
// stronger claim.
#pragma once

#include <cmath>
#include <limits>
#include <vector>

#include "hypharm/radial.hpp"
#include "hypharm/transform.hpp"

namespace hypharm {

struct DecayDiagnostic {
    std::vector<double> grid;    // parameter values (t or x), increasing
    std::vector<double> values;  // weighted log-moduli; -inf if flagged
    std::vector<bool> flagged;   // transform vanished / evaluation failed
    double limsup_proxy = 0.0;   // max over the final 20% of unflagged nodes

    void finish() {
        limsup_proxy = -std::numeric_limits<double>::infinity();
        const std::size_t start = grid.size() - std::max<std::size_t>(1, grid.size() / 5);
        for (std::size_t i = start; i < grid.size(); ++i)
            if (!flagged[i]) limsup_proxy = std::max(limsup_proxy, values[i]);
    }
};

struct HullReport {
    std::vector<cplx> grid;                // canonical strip points scanned
    std::vector<cplx> common_zero_points;  // where all transforms are < tol
    double tol = 0.0;
};

struct Theorem2Report {
    bool mass_is_one = false;          // (i) |mu(D) - 1| <= 1e-10
    double mass_deviation = 0.0;
    bool atom_at_zero = false;         // (ii)
    double min_distance_to_one = 0.0;  // (iii) min |mu^(s) - 1| off the corners
    cplx argmin_s{0.0, 0.0};
    bool transform_hits_one = false;   // (iii) flag: min below tolerance
    DecayDiagnostic corner_decay;      // (iv) -x log|1 - mu^(x)|
    bool hypotheses_pass(double) const {
        return mass_is_one && !atom_at_zero && !transform_hits_one;
    }
};

namespace detail {

inline std::vector<double> log_spaced(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double llo = std::log(lo), lhi = std::log(hi);
    for (int i = 0; i < n; ++i)
        g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
    return g;
}

template <typename TransformFn>
DecayDiagnostic decay_curve(const std::vector<double>& grid, const TransformFn& fn) {
    DecayDiagnostic d;
    d.grid = grid;
    d.values.resize(grid.size());
    d.flagged.resize(grid.size(), false);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        try {
            d.values[i] = fn(grid[i]);
            if (!std::isfinite(d.values[i])) {
                d.flagged[i] = true;
                d.values[i] = -std::numeric_limits<double>::infinity();
            }
        } catch (const std::exception&) {
            d.flagged[i] = true;
            d.values[i] = -std::numeric_limits<double>::infinity();
        }
    }
    d.finish();
    return d;
}

} // namespace detail

/// delta_inf curve: -e^{-pi t} log |f^(1/2 + it)| on n log-spaced t in (0, t_max].
inline DecayDiagnostic delta_inf_diagnostic(const RadialFunction& f, double t_max,
                                            int n) {
    if (!(t_max > 0) || n < 8)
        throw std::invalid_argument("delta_inf_diagnostic: t_max > 0, n >= 8");
    const double pi = 3.14159265358979323846;
    auto grid = detail::log_spaced(t_max / 100.0, t_max, n);
    return detail::decay_curve(grid, [&](double t) {
        const double mag = std::abs(gelfand_transform(f, StripPoint(cplx(0.5, t))));
        if (mag == 0.0) return -std::numeric_limits<double>::infinity();
        return -std::exp(-pi * t) * std::log(mag);
    });
}

/// delta_0 curve: -x log |f^(x)| on n log-spaced real x in [x_min, 1/2).
inline DecayDiagnostic delta_zero_diagnostic(const RadialFunction& f, double x_min,
                                             int n) {
    if (!(x_min > 0 && x_min < 0.5) || n < 2)
        throw std::invalid_argument("delta_zero_diagnostic: 0 < x_min < 1/2");
    auto grid = detail::log_spaced(x_min, 0.499, n);
    return detail::decay_curve(grid, [&](double x) {
        const double mag = std::abs(gelfand_transform(f, StripPoint(cplx(x, 0.0))));
        if (mag == 0.0) return -std::numeric_limits<double>::infinity();
        return -x * std::log(mag);
    });
}

/// Grid of canonical strip points: Re in [0, 1/2], Im in [0, im_max].
inline std::vector<cplx> canonical_strip_grid(int resolution, double im_max = 10.0) {
    std::vector<cplx> g;
    g.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j)
            g.emplace_back(0.5 * i / (resolution - 1), im_max * j / (resolution - 1));
    return g;
}

/// Common-zero scan of a family of transforms over the canonical grid.
inline HullReport hull_scan(const std::vector<RadialFunction>& fs, int resolution,
                            double tol, double im_max = 10.0) {
    if (fs.empty()) throw std::invalid_argument("hull_scan: empty family");
    if (!(tol > 0)) throw std::invalid_argument("hull_scan: tol must be > 0");
    HullReport rep;
    rep.tol = tol;
    rep.grid = canonical_strip_grid(resolution, im_max);
    for (const cplx& s : rep.grid) {
        double worst = 0.0;
        for (const auto& f : fs)
            worst = std::max(worst, std::abs(gelfand_transform(f, StripPoint(s))));
        if (worst < tol) rep.common_zero_points.push_back(s);
    }
    return rep;
}

/// The four hypothesis verdicts of the mu-harmonicity theorem.
inline Theorem2Report theorem2_hypotheses(const RadialMeasure& mu, int resolution,
                                          double tol, double im_max = 10.0) {
    Theorem2Report rep;
    rep.mass_deviation = std::abs(mu.total_mass() - 1.0);
    rep.mass_is_one = rep.mass_deviation <= 1e-10;
    rep.atom_at_zero = mu.has_atom_at_zero();

    // (iii): min |mu^(s) - 1| off 0.05-neighborhoods of the corners {0, 1}
    // (canonically, the corner s = 0)
    rep.min_distance_to_one = std::numeric_limits<double>::infinity();
    for (const cplx& s : canonical_strip_grid(resolution, im_max)) {
        if (std::abs(s) < 0.05) continue;
        const double d = std::abs(measure_gelfand(mu, StripPoint(s)) - 1.0);
        if (d < rep.min_distance_to_one) {
            rep.min_distance_to_one = d;
            rep.argmin_s = s;
        }
    }
    rep.transform_hits_one = rep.min_distance_to_one < tol;

    // (iv): the corner decay curve -x log |1 - mu^(x)|
    auto grid = detail::log_spaced(1e-4, 0.45, 24);
    rep.corner_decay = detail::decay_curve(grid, [&](double x) {
        const double mag = std::abs(1.0 - measure_gelfand(mu, StripPoint(cplx(x, 0.0))));
        if (mag == 0.0) return -std::numeric_limits<double>::infinity();
        return -x * std::log(mag);
    });
    return rep;
}

/// Corollary-3 chain: the curve -x log(1 - mu^(x)) on the supplied grid.
/// Nodes where 1 - mu^(x) fails to be a positive real (to tolerance) are
/// flagged: that signals an atom at 0 or a quadrature failure.
inline DecayDiagnostic corollary3_decay(const RadialMeasure& mu,
                                        const std::vector<double>& x_grid) {
    DecayDiagnostic d;
    d.grid = x_grid;
    d.values.resize(x_grid.size());
    d.flagged.resize(x_grid.size(), false);
    for (std::size_t i = 0; i < x_grid.size(); ++i) {
        const double x = x_grid[i];
        const cplx mh = measure_gelfand(mu, StripPoint(cplx(x, 0.0)));
        const cplx one_minus = 1.0 - mh;
        if (one_minus.real() <= 0.0 || std::abs(one_minus.imag()) > 1e-8) {
            d.flagged[i] = true;
            d.values[i] = -std::numeric_limits<double>::infinity();
            continue;
        }
        d.values[i] = -x * std::log(one_minus.real());
    }
    d.finish();
    return d;
}

} // namespace hypharm
