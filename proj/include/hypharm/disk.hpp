// Hyperbolic unit-disk geometry: SU(1,1) Mobius actions, circle averages,
// the mu-mean-value residual, Poisson extension of trigonometric boundary
// data, Morera contour integrals over Mobius images of central circles, and
// the growth-condition check.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "hypharm/quadrature.hpp"
#include "hypharm/radial.hpp"

namespace hypharm {

/// Disk automorphism z -> (a z + b) / (conj(b) z + conj(a)), |a|^2 - |b|^2 = 1.
class MobiusMap {
public:
    MobiusMap(cplx a, cplx b) : a_(a), b_(b) {
        const double det = std::norm(a_) - std::norm(b_);
        if (det <= 0.0)
            throw std::invalid_argument("MobiusMap: requires |a|^2 - |b|^2 > 0");
        const double r = std::sqrt(det);
        a_ /= r;
        b_ /= r;
    }

    static MobiusMap identity() { return MobiusMap(cplx(1, 0), cplx(0, 0)); }
    /// The A+ translation with g(0) = tanh(zeta).
    static MobiusMap translation(double zeta) {
        return MobiusMap(std::cosh(zeta), std::sinh(zeta));
    }
    static MobiusMap rotation(double phi) {
        return MobiusMap(std::exp(cplx(0, phi / 2)), cplx(0, 0));
    }

    cplx a() const { return a_; }
    cplx b() const { return b_; }

    cplx operator()(cplx z) const {
        if (std::abs(z) >= 1.0)
            throw std::domain_error("MobiusMap: point must lie in the open disk");
        return (a_ * z + b_) / (std::conj(b_) * z + std::conj(a_));
    }

    /// Complex derivative of the action, d/dz = 1 / (conj(b) z + conj(a))^2.
    cplx derivative(cplx z) const {
        const cplx d = std::conj(b_) * z + std::conj(a_);
        return 1.0 / (d * d);
    }

    MobiusMap compose(const MobiusMap& o) const { // this after o
        return MobiusMap(a_ * o.a_ + b_ * std::conj(o.b_),
                         a_ * o.b_ + b_ * std::conj(o.a_));
    }
    MobiusMap inverse() const { return MobiusMap(std::conj(a_), -b_); }

private:
    cplx a_, b_;
};

/// Reproducible random elements, g = rot(alpha) o translation(zeta) o rot(beta),
/// zeta ~ U(0, 2), angles ~ U(0, 2 pi).
inline std::vector<MobiusMap> random_mobius_sample(int count, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uz(0.0, 2.0);
    std::uniform_real_distribution<double> ua(0.0, 6.283185307179586476925);
    std::vector<MobiusMap> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const MobiusMap g = MobiusMap::rotation(ua(rng))
                                .compose(MobiusMap::translation(uz(rng)))
                                .compose(MobiusMap::rotation(ua(rng)));
        out.push_back(g);
    }
    return out;
}

struct DiskFunction {
    enum class Tag { holomorphic_test, harmonic_test, custom };
    std::function<cplx(cplx)> eval;
    Tag tag = Tag::custom;

    cplx operator()(cplx z) const { return eval(z); }
};

/// Boundary data b(theta) = sum c_k e^{i k theta}, finite Fourier support.
struct BoundaryFunction {
    std::vector<std::pair<int, cplx>> coefficients;

    bool is_real_valued(double tol = 1e-12) const {
        for (auto& [k, c] : coefficients) {
            cplx mirror(0.0);
            for (auto& [k2, c2] : coefficients)
                if (k2 == -k) mirror = c2;
            if (std::abs(mirror - std::conj(c)) > tol) return false;
        }
        return true;
    }
};

/// Exact Poisson extension of a trigonometric polynomial:
/// z = r e^{i theta} -> sum c_k r^{|k|} e^{i k theta}.
inline cplx poisson_extend(const BoundaryFunction& b, cplx z) {
    if (std::abs(z) >= 1.0)
        throw std::domain_error("poisson_extend: point must lie in the open disk");
    const double r = std::abs(z);
    const double th = std::arg(z);
    cplx sum = 0.0;
    for (auto& [k, c] : b.coefficients)
        sum += c * std::pow(r, std::abs(k)) * std::exp(cplx(0, k * th));
    return sum;
}

inline DiskFunction poisson_disk_function(BoundaryFunction b) {
    return {[b = std::move(b)](cplx z) { return poisson_extend(b, z); },
            DiskFunction::Tag::harmonic_test};
}

inline cplx mobius_apply(const MobiusMap& g, cplx z) { return g(z); }

/// Average of f over the g-image of the circle of hyperbolic radius zeta
/// (Euclidean radius tanh zeta), periodic trapezoid with n nodes.
inline cplx circle_average(const DiskFunction& f, const MobiusMap& g, double zeta,
                           int n = 256) {
    if (n < 16) throw std::invalid_argument("circle_average: n >= 16");
    if (zeta < 0) throw std::domain_error("circle_average: zeta >= 0");
    const double rho = std::tanh(zeta);
    cplx sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double th = 6.283185307179586476925 * j / n;
        sum += f(g(rho * std::exp(cplx(0, th))));
    }
    return sum / static_cast<double>(n);
}

/// max over the supplied g of | int circle_average(f, g, zeta) dmu(zeta) - f(g 0) |.
inline double mu_mean_value_residual(const DiskFunction& f, const RadialMeasure& mu,
                                     const std::vector<MobiusMap>& gs, int n = 256) {
    double worst = 0.0;
    for (const auto& g : gs) {
        cplx avg = 0.0;
        for (const auto& atom : mu.atoms())
            avg += atom.weight * circle_average(f, g, atom.zeta, n);
        if (mu.density()) {
            const RadialFunction& d = *mu.density();
            const double z_hi = d.has_compact_support() ? d.support_upper() - 1.0 : 30.0;
            QuadResult q = integrate(
                [&](double z) { return d(1.0 + z) * circle_average(f, g, z, n); }, 0.0,
                z_hi, 1e-10);
            avg += q.value;
        }
        worst = std::max(worst, std::abs(avg - f(g(cplx(0, 0)))));
    }
    return worst;
}

/// Contour integral of f over the g-image of the central circle of Euclidean
/// radius r, with the exact derivative of the Mobius parameterization.
inline cplx morera_contour_integral(const DiskFunction& f, const MobiusMap& g,
                                    double r, int n = 256) {
    if (!(r > 0 && r < 1))
        throw std::domain_error("morera_contour_integral: r in (0, 1)");
    if (n < 32) throw std::invalid_argument("morera_contour_integral: n >= 32");
    cplx sum = 0.0;
    for (int j = 0; j < n; ++j) {
        const double th = 6.283185307179586476925 * j / n;
        const cplx z = r * std::exp(cplx(0, th));
        const cplx dz_dth = cplx(0, 1) * z; // d/dtheta of r e^{i theta}
        sum += f(g(z)) * g.derivative(z) * dz_dth;
    }
    return sum * (6.283185307179586476925 / n);
}

struct GrowthVerdict {
    bool satisfied = false;
    double max_weighted = 0.0; // max |f(z)| (1 - |z|^2)
    cplx argmax{0.0, 0.0};
};

/// Checks |f(z)| (1 - |z|^2) <= c on the samples.
inline GrowthVerdict growth_check(const DiskFunction& f, double c,
                                  const std::vector<cplx>& samples) {
    GrowthVerdict v;
    for (cplx z : samples) {
        if (std::abs(z) >= 1.0)
            throw std::domain_error("growth_check: samples must lie in the open disk");
        const double w = std::abs(f(z)) * (1.0 - std::norm(z));
        if (w > v.max_weighted) {
            v.max_weighted = w;
            v.argmax = z;
        }
    }
    v.satisfied = v.max_weighted <= c;
    return v;
}

} // namespace hypharm
