// Adaptive Gauss-Kronrod (G7,K15) quadrature for complex-valued integrands.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace hypharm {

using cplx = std::complex<double>;

struct QuadResult {
    cplx value{0.0, 0.0};
    double error = 0.0;  // achieved absolute error estimate
    bool converged = true;
    std::size_t evals = 0;

    QuadResult& operator+=(const QuadResult& o) {
        value += o.value;
        error += o.error;
        converged = converged && o.converged;
        evals += o.evals;
        return *this;
    }
};

struct quadrature_error : std::runtime_error {
    double achieved;
    quadrature_error(const std::string& msg, double err)
        : std::runtime_error(msg), achieved(err) {}
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss, nodes in [0,1) plus symmetric.
inline constexpr double gk_nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
inline constexpr double gk_wk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
inline constexpr double gk_wg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469};

template <typename F>
inline void gk15(const F& f, double a, double b, cplx& k15, double& err, double& resabs) {
    const double h = 0.5 * (b - a), mid = 0.5 * (a + b);
    cplx gauss = 0.0, kron = 0.0;
    resabs = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * gk_nodes[i];
        const cplx f1 = f(mid - dx);
        const cplx f2 = (i == 7) ? f1 : f(mid + dx);
        const cplx fsum = (i == 7) ? f1 : f1 + f2;
        kron += gk_wk[i] * fsum;
        resabs += gk_wk[i] * (std::abs(f1) + (i == 7 ? 0.0 : std::abs(f2)));
        if (i % 2 == 1) gauss += gk_wg[i / 2] * fsum;
    }
    k15 = kron * h;
    err = std::abs(kron - gauss) * std::abs(h);
    resabs *= std::abs(h);
}

} // namespace detail

/// Adaptive quadrature of f over [a, b] to absolute tolerance abs_tol.
/// Bisects the worst panel first; gives up after max_panels subdivisions
/// and reports the achieved error estimate in the result.
template <typename F>
QuadResult integrate(const F& f, double a, double b, double abs_tol,
                     std::size_t max_panels = 4000) {
    struct Panel {
        double a, b, err;
        cplx val;
    };
    std::vector<Panel> panels;
    QuadResult res;
    cplx v;
    double e, ra;
    detail::gk15(f, a, b, v, e, ra);
    res.evals = 15;
    panels.push_back({a, b, e, v});

    auto total_error = [&] {
        double s = 0;
        for (auto& p : panels) s += p.err;
        return s;
    };

    while (total_error() > abs_tol && panels.size() < max_panels) {
        std::size_t worst = 0;
        for (std::size_t i = 1; i < panels.size(); ++i)
            if (panels[i].err > panels[worst].err) worst = i;
        Panel p = panels[worst];
        const double mid = 0.5 * (p.a + p.b);
        if (mid == p.a || mid == p.b) break; // cannot refine further
        Panel l, r;
        detail::gk15(f, p.a, mid, l.val, l.err, ra);
        detail::gk15(f, mid, p.b, r.val, r.err, ra);
        res.evals += 30;
        l.a = p.a; l.b = mid;
        r.a = mid; r.b = p.b;
        panels[worst] = l;
        panels.push_back(r);
    }
    for (auto& p : panels) res.value += p.val;
    res.error = total_error();
    res.converged = res.error <= abs_tol;
    return res;
}

/// Periodic trapezoid rule over [0, 2*pi) with n nodes.
template <typename F>
cplx periodic_trapezoid(const F& f, int n) {
    const double two_pi = 6.283185307179586476925;
    cplx sum = 0.0;
    for (int j = 0; j < n; ++j) sum += f(two_pi * j / n);
    return sum * (two_pi / n);
}

/// Periodic trapezoid with doubling until two successive refinements agree.
template <typename F>
cplx periodic_trapezoid_adaptive(const F& f, int n_start, double tol,
                                 int n_max = 1 << 16) {
    int n = n_start;
    cplx prev = periodic_trapezoid(f, n);
    while (n < n_max) {
        n *= 2;
        const cplx cur = periodic_trapezoid(f, n);
        if (std::abs(cur - prev) <= tol) return cur;
        prev = cur;
    }
    return prev;
}

} // namespace hypharm
