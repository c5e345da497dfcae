// Radial integrable functions on [1, inf) in the x = cosh(2*zeta) coordinate,
// radial measures on [0, inf) in the zeta coordinate, and the spectral
// parameter types for the strip S = {0 <= Re s <= 1} mod s -> 1-s.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypharm/legendre.hpp"
#include "hypharm/quadrature.hpp"

namespace hypharm {

/// A point of the strip S, kept canonical: Re s <= 1/2, and Im s >= 0 when
/// Re s = 1/2.  canonical(s) == canonical(1-s) realizes the involution.
struct StripPoint {
    cplx s;

    explicit StripPoint(cplx value) : s(value) {
        if (s.real() < -1e-12 || s.real() > 1.0 + 1e-12)
            throw std::domain_error("StripPoint: Re s must lie in [0, 1]");
    }

    StripPoint canonical() const {
        cplx t = s;
        if (t.real() > 0.5 || (std::abs(t.real() - 0.5) <= 1e-14 && t.imag() < 0.0))
            t = 1.0 - t;
        return StripPoint(t);
    }

    cplx eigenvalue() const { return s * (1.0 - s); } // s(1-s), involution-invariant
};

/// Unrestricted resolvent parameter lambda.
struct SpectralParameter {
    cplx lambda;

    bool in_strip() const {
        return lambda.real() >= 0.0 && lambda.real() <= 1.0;
    }
    cplx eigenvalue() const { return lambda * (1.0 - lambda); }

    /// Representative with Re lambda > 1/2 (same eigenvalue).
    SpectralParameter canonical() const {
        return lambda.real() < 0.5 ? SpectralParameter{1.0 - lambda}
                                   : SpectralParameter{lambda};
    }
};

class RadialFunction {
public:
    enum class Kind { zero, indicator, exp_decay, resolvent_kernel, sampled };

    static RadialFunction zero() { return RadialFunction(Kind::zero); }

    static RadialFunction indicator(double a, double b) {
        if (!(1.0 <= a && a < b) || !std::isfinite(b))
            throw std::invalid_argument("indicator: requires 1 <= a < b < inf");
        RadialFunction f(Kind::indicator);
        f.a_ = a;
        f.b_ = b;
        f.l1_ = b - a;
        return f;
    }

    static RadialFunction exp_decay(double alpha) {
        if (!(alpha > 0)) throw std::invalid_argument("exp_decay: alpha must be > 0");
        RadialFunction f(Kind::exp_decay);
        f.alpha_ = alpha;
        f.l1_ = std::exp(-alpha) / alpha;
        return f;
    }

    /// b_lambda(x) = 2 Q_{lambda-1}(x); requires lambda outside the closed strip.
    static RadialFunction resolvent_kernel(SpectralParameter lam);

    /// Sampled on strictly increasing nodes in [1, X_max]; piecewise cubic,
    /// linear in the last panel, zero beyond X_max.  tail_exponent is the
    /// declared decay rate used for the tail-negligibility invariant.
    static RadialFunction sampled(std::vector<double> nodes, std::vector<double> values,
                                  double tail_exponent);

    Kind kind() const { return kind_; }
    double l1_norm() const { return l1_; }
    bool has_compact_support() const {
        return kind_ == Kind::zero || kind_ == Kind::indicator || kind_ == Kind::sampled;
    }
    double support_upper() const {
        switch (kind_) {
            case Kind::zero: return 1.0;
            case Kind::indicator: return b_;
            case Kind::sampled: return nodes_.back();
            default: return std::numeric_limits<double>::infinity();
        }
    }
    /// Interior discontinuities / kinks, for quadrature splitting.
    std::vector<double> breakpoints() const {
        switch (kind_) {
            case Kind::indicator: return {a_, b_};
            case Kind::sampled: return nodes_;
            default: return {};
        }
    }
    cplx resolvent_lambda() const { return lam_; }

    cplx operator()(double x) const {
        if (x < 1.0) throw std::domain_error("RadialFunction: x must be >= 1");
        switch (kind_) {
            case Kind::zero: return 0.0;
            case Kind::indicator: return (x >= a_ && x <= b_) ? 1.0 : 0.0;
            case Kind::exp_decay: return std::exp(-alpha_ * x);
            case Kind::resolvent_kernel:
                if (x == 1.0) throw std::domain_error("resolvent kernel diverges at x = 1");
                return 2.0 * legendre_q(lam_ - 1.0, x);
            case Kind::sampled: return sample_eval(x);
        }
        return 0.0;
    }

private:
    explicit RadialFunction(Kind k) : kind_(k) {}

    double sample_eval(double x) const;

    Kind kind_;
    double a_ = 0, b_ = 0, alpha_ = 0;
    cplx lam_{0.0, 0.0};
    std::vector<double> nodes_, values_;
    double tail_exponent_ = 0;
    double l1_ = 0;

    friend double sampled_tail_bound(const RadialFunction&);
};

/// Bounded radial function g in L^inf(G//K): an evaluation handle plus its
/// sup bound on the represented domain.
struct BoundedRadialFunction {
    std::function<cplx(double)> eval;
    double sup_norm = 0.0;

    static BoundedRadialFunction constant(cplx c) {
        return {[c](double) { return c; }, std::abs(c)};
    }
    static BoundedRadialFunction from(const RadialFunction& f, double sup) {
        return {[f](double x) { return f(x); }, sup};
    }
    cplx operator()(double x) const { return eval(x); }
};

/// Finite radial measure: atoms at zeta_k >= 0 plus an optional density on
/// the zeta axis.  The density reuses the RadialFunction machinery through
/// the shift zeta = x - 1.
class RadialMeasure {
public:
    struct Atom {
        double zeta;
        cplx weight;
    };

    RadialMeasure(std::vector<Atom> atoms, std::optional<RadialFunction> density = {})
        : atoms_(std::move(atoms)), density_(std::move(density)) {
        for (auto& a : atoms_)
            if (a.zeta < 0) throw std::invalid_argument("RadialMeasure: zeta must be >= 0");
        total_mass_ = cplx(0.0);
        for (auto& a : atoms_) total_mass_ += a.weight;
        if (density_) total_mass_ += density_integral();
    }

    const std::vector<Atom>& atoms() const { return atoms_; }
    const std::optional<RadialFunction>& density() const { return density_; }
    cplx total_mass() const { return total_mass_; }

    bool has_atom_at_zero() const {
        for (auto& a : atoms_)
            if (a.zeta < 1e-12 && std::abs(a.weight) > 0) return true;
        return false;
    }

    /// Density value at zeta (zero if no density).
    cplx density_at(double zeta) const {
        return density_ ? (*density_)(1.0 + zeta) : cplx(0.0);
    }

private:
    cplx density_integral() const;

    std::vector<Atom> atoms_;
    std::optional<RadialFunction> density_;
    cplx total_mass_;
};

// ---- implementation ----

inline double RadialFunction::sample_eval(double x) const {
    const auto& xs = nodes_;
    const auto& ys = values_;
    if (x < xs.front() || x > xs.back()) return 0.0;
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t i = (it == xs.begin()) ? 0 : (it - xs.begin() - 1);
    if (i >= xs.size() - 1) i = xs.size() - 2;
    const double t = (x - xs[i]) / (xs[i + 1] - xs[i]);
    // boundary panels (and short grids): linear, so the rule treats the two
    // ends symmetrically
    if (i == 0 || i + 2 >= xs.size() || xs.size() < 4)
        return ys[i] + t * (ys[i + 1] - ys[i]);
    const double p0 = ys[i - 1], p1 = ys[i], p2 = ys[i + 1], p3 = ys[i + 2];
    const double m1 = 0.5 * (p2 - p0);
    const double m2 = 0.5 * (p3 - p1);
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * p1 + (t3 - 2 * t2 + t) * m1 +
           (-2 * t3 + 3 * t2) * p2 + (t3 - t2) * m2;
}

inline cplx RadialMeasure::density_integral() const {
    // total mass of the density part: integral over zeta of density(zeta)
    const RadialFunction& d = *density_;
    QuadResult q;
    if (d.has_compact_support()) {
        q = integrate([&](double z) { return d(1.0 + z); }, 0.0,
                      d.support_upper() - 1.0, 1e-12);
    } else {
        double z = 0.0;
        int quiet = 0;
        while (z < 400.0) {
            QuadResult panel =
                integrate([&](double t) { return d(1.0 + t); }, z, z + 2.0, 1e-13);
            q += panel;
            z += 2.0;
            if (std::abs(panel.value) < 1e-13) {
                if (++quiet >= 2) break;
            } else {
                quiet = 0;
            }
        }
    }
    return q.value;
}

inline RadialFunction RadialFunction::sampled(std::vector<double> nodes,
                                              std::vector<double> values,
                                              double tail_exponent) {
    if (nodes.size() != values.size() || nodes.size() < 2)
        throw std::invalid_argument("sampled: need >= 2 matching nodes/values");
    if (nodes.front() < 1.0)
        throw std::invalid_argument("sampled: nodes must start at x >= 1");
    for (std::size_t i = 1; i < nodes.size(); ++i)
        if (!(nodes[i] > nodes[i - 1]))
            throw std::invalid_argument("sampled: nodes must be strictly increasing");
    RadialFunction f(Kind::sampled);
    f.nodes_ = std::move(nodes);
    f.values_ = std::move(values);
    f.tail_exponent_ = tail_exponent;
    QuadResult q = integrate([&f](double x) { return cplx(std::abs(f.sample_eval(x))); },
                             f.nodes_.front(), f.nodes_.back(), 1e-12);
    f.l1_ = q.value.real();
    // declared tail must be negligible against the stored mass
    const double fx = std::abs(f.values_.back());
    const double tail = (tail_exponent > 1.0)
                            ? fx * f.nodes_.back() / (tail_exponent - 1.0)
                            : (fx > 0 ? std::numeric_limits<double>::infinity() : 0.0);
    if (tail > 1e-12 * std::max(f.l1_, 1e-300))
        throw std::invalid_argument(
            "sampled: extrapolated tail exceeds 1e-12 of the L1 mass");
    return f;
}

} // namespace hypharm
