// Gauss hypergeometric function 2F1(a, b; c; z) on the principal branch.
//
// Strategy: the Gauss series where some linear-fractional transform of z has
// modulus <= 0.8 (direct, Pfaff in either parameter, Euler), the z -> 1-z
// connection formulas near z = 1 (including the logarithmic cases where
// c - a - b is an integer), an extended-length series for arguments that the
// transforms only bring into (0.8, 0.995), and the z -> 1/(1-z) connection
// as a last resort.  Target relative accuracy 1e-10.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

#include "hypharm/gamma.hpp"

namespace hypharm {

struct hyp2f1_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline double dist_to_integer(cplx z) {
    return std::abs(z - std::round(z.real()));
}

// Gauss series sum_{n} (a)_n (b)_n / ((c)_n n!) z^n.
inline cplx gauss_series(cplx a, cplx b, cplx c, cplx z, int max_terms) {
    cplx term = 1.0, sum = 1.0, comp = 0.0;
    double max_mag = 1.0;
    for (int n = 0; n < max_terms; ++n) {
        const cplx dn(n, 0);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        // Kahan-compensated accumulation
        const cplx y = term - comp;
        const cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        max_mag = std::max(max_mag, std::abs(sum));
        if (std::abs(term) <= 1e-17 * (std::abs(sum) + 1e-300) &&
            std::abs(term) <= 1e-17 * max_mag)
            return sum;
    }
    throw hyp2f1_error("hyp2f1: series did not converge");
}

// Terminating series when a is a non-positive integer.
inline cplx terminating_series(cplx a, cplx b, cplx c, cplx z) {
    const int n_terms = static_cast<int>(std::lround(-a.real()));
    cplx term = 1.0, sum = 1.0;
    for (int n = 0; n < n_terms; ++n) {
        const cplx dn(n, 0);
        term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
        sum += term;
    }
    return sum;
}

inline cplx pow_principal(cplx base, cplx expo) {
    return std::exp(expo * std::log(base));
}

cplx hyp2f1_impl(cplx a, cplx b, cplx c, cplx z, int depth);

// AS 15.3.6: z -> 1-z connection, c-a-b not an integer.
inline cplx connection_one_generic(cplx a, cplx b, cplx c, cplx z, int depth) {
    const cplx m = c - a - b;
    const cplx w = 1.0 - z;
    const cplx t1 = complex_gamma(c) * complex_gamma(m) * reciprocal_gamma(c - a) *
                    reciprocal_gamma(c - b) * hyp2f1_impl(a, b, 1.0 - m, w, depth + 1);
    const cplx t2 = pow_principal(w, m) * complex_gamma(c) * complex_gamma(-m) *
                    reciprocal_gamma(a) * reciprocal_gamma(b) *
                    hyp2f1_impl(c - a, c - b, 1.0 + m, w, depth + 1);
    return t1 + t2;
}

// AS 15.3.10: c = a + b (logarithmic case, m = 0), |1-z| < 1.
inline cplx connection_one_log0(cplx a, cplx b, cplx z) {
    const cplx w = 1.0 - z;
    const cplx logw = std::log(w);
    cplx coeff = 1.0; // (a)_n (b)_n / (n!)^2
    cplx psi_a = digamma(a), psi_b = digamma(b), psi_n1 = digamma(cplx(1.0));
    cplx sum = 0.0, wn = 1.0;
    for (int n = 0; n < 10000; ++n) {
        const cplx bracket = 2.0 * psi_n1 - psi_a - psi_b - logw;
        const cplx term = coeff * bracket * wn;
        sum += term;
        if (n > 2 && std::abs(term) <= 1e-17 * (std::abs(sum) + 1e-300)) break;
        const cplx dn(n, 0);
        coeff *= (a + dn) * (b + dn) / ((dn + 1.0) * (dn + 1.0));
        wn *= w;
        psi_a += 1.0 / (a + dn);
        psi_b += 1.0 / (b + dn);
        psi_n1 += 1.0 / (dn + 1.0);
    }
    return complex_gamma(a + b) * reciprocal_gamma(a) * reciprocal_gamma(b) * sum;
}

// AS 15.3.11: c = a + b + m with integer m >= 1, |1-z| < 1.
inline cplx connection_one_logm(cplx a, cplx b, int m, cplx z) {
    const cplx w = 1.0 - z;
    const cplx logw = std::log(w);
    const cplx gc = complex_gamma(a + b + cplx(m, 0));

    // finite part
    cplx finite = 0.0, coeff = 1.0;
    for (int n = 0; n < m; ++n) {
        finite += coeff;
        const cplx dn(n, 0);
        coeff *= (a + dn) * (b + dn) / ((dn + 1.0) * (1.0 - m + dn)) * w;
    }
    finite *= complex_gamma(cplx(m, 0)) * reciprocal_gamma(a + cplx(m, 0)) *
              reciprocal_gamma(b + cplx(m, 0));

    // logarithmic series
    cplx psi_a = digamma(a + cplx(m, 0));
    cplx psi_b = digamma(b + cplx(m, 0));
    cplx psi_n1 = digamma(cplx(1.0));
    cplx psi_nm = digamma(cplx(m + 1.0, 0));
    cplx co = 1.0; // (a+m)_n (b+m)_n / (n! (m+n)!) * m!^{-1}... folded below
    double fact_ratio = 1.0;
    for (int k = 1; k <= m; ++k) fact_ratio *= k; // m!
    co = 1.0 / fact_ratio;
    cplx sum = 0.0, wn = 1.0;
    for (int n = 0; n < 10000; ++n) {
        const cplx bracket = logw - psi_n1 - psi_nm + psi_a + psi_b;
        const cplx term = co * bracket * wn;
        sum += term;
        if (n > 2 && std::abs(term) <= 1e-17 * (std::abs(sum) + std::abs(finite) + 1e-300))
            break;
        const cplx dn(n, 0);
        const cplx dm(m, 0);
        co *= (a + dm + dn) * (b + dm + dn) / ((dn + 1.0) * (dn + 1.0 + dm));
        wn *= w;
        psi_a += 1.0 / (a + dm + dn);
        psi_b += 1.0 / (b + dm + dn);
        psi_n1 += 1.0 / (dn + 1.0);
        psi_nm += 1.0 / (dn + 1.0 + dm);
    }
    const double sign = (m % 2 == 0) ? -1.0 : 1.0; // -(z-1)^m = -(-1)^m (1-z)^m
    const cplx logpart = sign * pow_principal(w, cplx(m, 0)) * reciprocal_gamma(a) *
                         reciprocal_gamma(b) * sum;
    return gc * (finite + logpart);
}

// AS 15.3.7-style connection via 1/(1-z), a - b not an integer.
inline cplx connection_inf_generic(cplx a, cplx b, cplx c, cplx z, int depth) {
    const cplx w = 1.0 / (1.0 - z);
    const cplx t1 = pow_principal(1.0 - z, -a) * complex_gamma(c) * complex_gamma(b - a) *
                    reciprocal_gamma(b) * reciprocal_gamma(c - a) *
                    hyp2f1_impl(a, c - b, a - b + 1.0, w, depth + 1);
    const cplx t2 = pow_principal(1.0 - z, -b) * complex_gamma(c) * complex_gamma(a - b) *
                    reciprocal_gamma(a) * reciprocal_gamma(c - b) *
                    hyp2f1_impl(b, c - a, b - a + 1.0, w, depth + 1);
    return t1 + t2;
}

inline cplx hyp2f1_impl(cplx a, cplx b, cplx c, cplx z, int depth) {
    if (depth > 4) throw hyp2f1_error("hyp2f1: transformation recursion overflow");
    if (z == cplx(0.0)) return 1.0;
    if (is_nonpositive_integer(c))
        throw hyp2f1_error("hyp2f1: pole, c is a non-positive integer");
    if (z.imag() == 0.0 && z.real() >= 1.0)
        throw hyp2f1_error("hyp2f1: z on the branch cut [1, inf)");

    if (is_nonpositive_integer(a)) return terminating_series(a, b, c, z);
    if (is_nonpositive_integer(b)) return terminating_series(b, a, c, z);

    const cplx zp = z / (z - 1.0);
    const double md = std::abs(z), mp = std::abs(zp);
    const double m1 = std::abs(1.0 - z);

    // series on the best linear-fractional image of z
    if (md <= 0.8) return gauss_series(a, b, c, z, 800);
    if (mp <= 0.8) {
        // Pfaff; pick the parameter that keeps the series best conditioned
        if (std::abs(c - b) <= std::abs(c - a))
            return pow_principal(1.0 - z, -a) * gauss_series(a, c - b, c, zp, 800);
        return pow_principal(1.0 - z, -b) * gauss_series(b, c - a, c, zp, 800);
    }

    // near z = 1: connection formulas
    const cplx cab = c - a - b;
    const double cab_int_dist = dist_to_integer(cab);
    if (m1 <= 0.4) {
        if (cab_int_dist <= 1e-9) {
            const int m = static_cast<int>(std::lround(cab.real()));
            if (m == 0) return connection_one_log0(a, b, z);
            if (m > 0) return connection_one_logm(a, b, m, z);
            // negative integer: Euler transform flips the sign of c-a-b
            return pow_principal(1.0 - z, cab) *
                   connection_one_logm(c - a, c - b, -m, z);
        }
        if (cab_int_dist >= 0.05) return connection_one_generic(a, b, c, z, depth);
        // near-integer but not integer: fall through to the long series /
        // infinity connection below
    }

    // moderate transformed argument: plain series with a long term budget
    const double m_eff = std::min(md, mp);
    if (m_eff <= 0.995) {
        if (md <= mp) return gauss_series(a, b, c, z, 100000);
        if (std::abs(c - b) <= std::abs(c - a))
            return pow_principal(1.0 - z, -a) * gauss_series(a, c - b, c, zp, 100000);
        return pow_principal(1.0 - z, -b) * gauss_series(b, c - a, c, zp, 100000);
    }

    if (std::abs(1.0 / (1.0 - z)) <= 0.9 && dist_to_integer(a - b) >= 0.05)
        return connection_inf_generic(a, b, c, z, depth);

    if (m1 <= 0.9 && cab_int_dist > 1e-9 && cab_int_dist < 0.05)
        return connection_one_generic(a, b, c, z, depth); // degraded accuracy zone

    throw hyp2f1_error("hyp2f1: no convergent evaluation strategy for this argument");
}

} // namespace detail

/// Principal-branch 2F1(a, b; c; z).
inline cplx hyp2f1(cplx a, cplx b, cplx c, cplx z) {
    return detail::hyp2f1_impl(a, b, c, z, 0);
}

} // namespace hypharm
