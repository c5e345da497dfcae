// Zero location for the two-circle Morera hypothesis: the spectral functions
// J(r, s), argument-principle winding counts on rectangles, recursive
// quadrisection with Newton polish, and the common-zero scan over radius
// pairs.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "hypharm/hyp2f1.hpp"

namespace hypharm {

/// J(r, s) = 2F1(2 - i s, 3/2; 3; -4 r (1-r)^{-2}), 0 < r < 1.
inline cplx morera_j(double r, cplx s) {
    if (!(r > 0.0 && r < 1.0))
        throw std::domain_error("morera_j: radius must lie in (0, 1)");
    const double z = -4.0 * r / ((1.0 - r) * (1.0 - r));
    const cplx i(0.0, 1.0);
    return hyp2f1(2.0 - i * s, 1.5, 3.0, z);
}

struct Rectangle {
    cplx lo, hi; // lower-left, upper-right

    Rectangle(cplx lower_left, cplx upper_right) : lo(lower_left), hi(upper_right) {
        if (!(lo.real() < hi.real() && lo.imag() < hi.imag()))
            throw std::invalid_argument("Rectangle: corners must bound a nonempty interior");
    }
    double width() const { return hi.real() - lo.real(); }
    double height() const { return hi.imag() - lo.imag(); }
    double diameter() const { return std::hypot(width(), height()); }
    cplx center() const { return 0.5 * (lo + hi); }
};

struct ZeroReport {
    Rectangle rect;
    int winding_count = 0;
    struct Zero {
        cplx location;
        double residual;
    };
    std::vector<Zero> zeros;
    bool refined = false; // fewer polished locations than the winding count
};

struct boundary_zero_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct subdivision_budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using AnalyticFn = std::function<cplx(cplx)>;

namespace detail {

// Phase-accumulation winding number along the segment list z0 -> z1, refining
// each step until its phase increment is below pi/2.
inline double phase_along(const AnalyticFn& F, cplx z0, cplx z1, cplx f0, cplx f1,
                          int depth) {
    const double d = std::arg(f1 / f0);
    if (std::abs(d) < 1.5707963267948966) return d;
    if (depth > 48)
        throw boundary_zero_error(
            "argument_principle: cannot resolve phase, zero on or near boundary");
    const cplx mid = 0.5 * (z0 + z1);
    const cplx fm = F(mid);
    if (std::abs(fm) < 1e-12)
        throw boundary_zero_error("argument_principle: |F| < 1e-12 on the boundary");
    return phase_along(F, z0, mid, f0, fm, depth + 1) +
           phase_along(F, mid, z1, fm, f1, depth + 1);
}

} // namespace detail

/// Number of zeros (with multiplicity) of F inside rect, by the argument
/// principle along the boundary with adaptive phase refinement.
inline int argument_principle_count(const AnalyticFn& F, const Rectangle& rect,
                                    int n_min = 8) {
    const cplx corners[5] = {rect.lo,
                             cplx(rect.hi.real(), rect.lo.imag()),
                             rect.hi,
                             cplx(rect.lo.real(), rect.hi.imag()),
                             rect.lo};
    double phase = 0.0;
    for (int e = 0; e < 4; ++e) {
        const cplx a = corners[e], b = corners[e + 1];
        cplx zprev = a, fprev = F(a);
        if (std::abs(fprev) < 1e-12)
            throw boundary_zero_error("argument_principle: |F| < 1e-12 at a boundary node");
        for (int k = 1; k <= n_min; ++k) {
            const cplx z = a + (b - a) * (static_cast<double>(k) / n_min);
            const cplx fz = F(z);
            if (std::abs(fz) < 1e-12)
                throw boundary_zero_error(
                    "argument_principle: |F| < 1e-12 at a boundary node");
            phase += detail::phase_along(F, zprev, z, fprev, fz, 0);
            zprev = z;
            fprev = fz;
        }
    }
    const double two_pi = 6.283185307179586476925;
    const double w = phase / two_pi;
    const int count = static_cast<int>(std::lround(w));
    if (std::abs(w - count) > 0.25)
        throw boundary_zero_error("argument_principle: winding number not near an integer");
    return count;
}

namespace detail {

inline cplx newton_polish(const AnalyticFn& F, cplx z, double target, int max_iter = 60) {
    const double h = 1e-6;
    for (int it = 0; it < max_iter; ++it) {
        const cplx fz = F(z);
        if (std::abs(fz) < target) return z;
        // directional central-difference pair along both axes, averaged
        const cplx dre = (F(z + h) - F(z - h)) / (2.0 * h);
        const cplx dim = (F(z + cplx(0, h)) - F(z - cplx(0, h))) / (2.0 * cplx(0, h));
        const cplx deriv = 0.5 * (dre + dim);
        if (std::abs(deriv) == 0.0) break;
        z -= fz / deriv;
    }
    return z;
}

inline void subdivide_zeros(const AnalyticFn& F, const Rectangle& rect, double tol,
                            int depth, int max_depth, std::vector<cplx>& centers) {
    int count = 0;
    // a zero can sit on a cut line; nudge the rectangle a little and retry
    for (int attempt = 0;; ++attempt) {
        const double jit = attempt * 1.37e-3 * rect.diameter();
        try {
            Rectangle r(rect.lo - cplx(jit, jit), rect.hi + cplx(jit, 0.7 * jit));
            count = argument_principle_count(F, r, 8);
            break;
        } catch (const boundary_zero_error&) {
            if (attempt >= 4) throw;
        }
    }
    if (count == 0) return;
    if (rect.diameter() < tol) {
        for (int k = 0; k < count; ++k) centers.push_back(rect.center());
        return;
    }
    if (depth >= max_depth)
        throw subdivision_budget_error("locate_zeros: subdivision budget exceeded");
    const cplx c = rect.center();
    const Rectangle quads[4] = {
        Rectangle(rect.lo, c),
        Rectangle(cplx(c.real(), rect.lo.imag()), cplx(rect.hi.real(), c.imag())),
        Rectangle(cplx(rect.lo.real(), c.imag()), cplx(c.real(), rect.hi.imag())),
        Rectangle(c, rect.hi)};
    for (const auto& q : quads) subdivide_zeros(F, q, tol, depth + 1, max_depth, centers);
}

} // namespace detail

/// Quadrisection + Newton zero search inside rect; every reported zero has
/// |F| < 1e-9 after polish.  When a multiple zero collapses several winding
/// counts onto one location, the `refined` flag is set.
inline ZeroReport locate_zeros(const AnalyticFn& F, const Rectangle& rect,
                               double tol = 1e-3, int max_depth = 40) {
    ZeroReport rep{rect};
    rep.winding_count = argument_principle_count(F, rect, 8);
    if (rep.winding_count == 0) return rep;
    std::vector<cplx> centers;
    detail::subdivide_zeros(F, rect, tol, 0, max_depth, centers);

    const double polish_target = 1e-9;
    for (cplx c : centers) {
        const cplx z = detail::newton_polish(F, c, polish_target);
        const double res = std::abs(F(z));
        if (res >= polish_target) continue;
        bool dup = false;
        for (auto& known : rep.zeros)
            if (std::abs(known.location - z) < 10 * tol) dup = true;
        if (!dup) rep.zeros.push_back({z, res});
    }
    rep.refined = static_cast<int>(rep.zeros.size()) < rep.winding_count;
    return rep;
}

struct CommonZeroReport {
    double r1 = 0, r2 = 0;
    Rectangle window;
    double match_tol = 0;
    std::vector<ZeroReport::Zero> zeros1, zeros2;
    std::vector<std::pair<cplx, cplx>> common; // matched pairs within match_tol
    bool no_common_zero_found() const { return common.empty(); }
};

/// Zero lists of J(r1, .) and J(r2, .) on the window, with pairs closer than
/// match_tol reported as common.  This certifies only the given window, not
/// the full strip.
inline CommonZeroReport common_zero_scan(double r1, double r2, const Rectangle& window,
                                         double match_tol = 1e-6) {
    if (!(r1 > 0 && r1 < 1 && r2 > 0 && r2 < 1))
        throw std::domain_error("common_zero_scan: radii must lie in (0, 1)");
    CommonZeroReport rep{r1, r2, window, match_tol};
    auto J1 = [r1](cplx s) { return morera_j(r1, s); };
    auto J2 = [r2](cplx s) { return morera_j(r2, s); };
    rep.zeros1 = locate_zeros(J1, window).zeros;
    rep.zeros2 = locate_zeros(J2, window).zeros;
    for (const auto& z1 : rep.zeros1)
        for (const auto& z2 : rep.zeros2)
            if (std::abs(z1.location - z2.location) < match_tol)
                rep.common.emplace_back(z1.location, z2.location);
    return rep;
}

} // namespace hypharm
