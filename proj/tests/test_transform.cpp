#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hypharm/transform.hpp"

using namespace hypharm;

namespace {
RadialFunction hat_mass_zero() {
    // continuous, compactly supported, odd about x = 2: total integral zero
    return RadialFunction::sampled({1.0, 1.5, 2.0, 2.5, 3.0},
                                   {0.0, 1.0, 0.0, -1.0, 0.0}, 10.0);
}
} // namespace

TEST_CASE("strip point canonicalization and eigenvalue invariance") {
    const StripPoint s{cplx(0.8, -1.5)};
    const StripPoint c = s.canonical();
    CHECK(c.s.real() <= 0.5 + 1e-15);
    CHECK(std::abs(c.eigenvalue() - s.eigenvalue()) < 1e-15);
    const StripPoint crit{cplx(0.5, -2.0)};
    CHECK(crit.canonical().s.imag() >= 0.0);
    CHECK_THROWS_AS(StripPoint(cplx(1.2, 0.0)), std::domain_error);
}

TEST_CASE("transform of the indicator at s = 1 is half its length") {
    const RadialFunction f = RadialFunction::indicator(1.0, 2.0);
    CHECK(std::abs(gelfand_transform(f, StripPoint(cplx(1, 0))) - 0.5) < 1e-10);
    CHECK(std::abs(gelfand_transform(f, StripPoint(cplx(0, 0))) - 0.5) < 1e-10);
}

TEST_CASE("transform frozen reference values") {
    const RadialFunction e1 = RadialFunction::exp_decay(1.0);
    CHECK(std::abs(gelfand_transform(e1, StripPoint(cplx(0.3, 1.0))) -
                   cplx(0.11606960637145657, -0.017955561205780481)) < 1e-10);
    const RadialFunction ind = RadialFunction::indicator(1.0, 2.0);
    CHECK(std::abs(gelfand_transform(ind, StripPoint(cplx(0.5, 2.0))) -
                   cplx(0.16148145337171092, 0.0)) < 1e-10);
}

TEST_CASE("transform symmetry s -> 1-s and conjugation reality") {
    const RadialFunction fs[] = {RadialFunction::indicator(1.0, 2.0),
                                 RadialFunction::exp_decay(1.0), hat_mass_zero()};
    const cplx pts[] = {cplx(0.3, 1.0), cplx(0.1, 0.2), cplx(0.5, 3.0),
                        cplx(0.45, 0.0), cplx(0.0, 1.5)};
    for (const auto& f : fs)
        for (cplx s : pts) {
            const cplx a = gelfand_transform(f, StripPoint(s));
            CHECK(std::abs(a - gelfand_transform(f, StripPoint(1.0 - s))) < 1e-9);
            CHECK(std::abs(std::conj(a) -
                           gelfand_transform(f, StripPoint(std::conj(s)))) < 1e-9);
        }
}

TEST_CASE("measure transform: atoms evaluate the spherical function") {
    const RadialMeasure mu({{0.5, cplx(1, 0)}});
    CHECK(std::abs(measure_gelfand(mu, StripPoint(cplx(0.3, 0))) -
                   0.950201360438811) < 1e-12);
    // transform of the unit mass at zero is identically one
    const RadialMeasure delta0({{0.0, cplx(1, 0)}});
    for (cplx s : {cplx(0.2, 0.0), cplx(0.5, 4.0), cplx(0.0, 1.0)})
        CHECK(std::abs(measure_gelfand(delta0, StripPoint(s)) - 1.0) < 1e-14);
    CHECK(delta0.has_atom_at_zero());
    CHECK_FALSE(mu.has_atom_at_zero());
}

TEST_CASE("measure with density: total mass and transform consistency") {
    // density exp(-(1+zeta)) on the zeta axis has mass exp(-1)
    const RadialMeasure mu({}, RadialFunction::exp_decay(1.0));
    CHECK(std::abs(mu.total_mass() - std::exp(-1.0)) < 1e-10);
    CHECK(std::abs(mu.density_at(0.5) - std::exp(-1.5)) < 1e-14);
}

TEST_CASE("resolvent kernel transform satisfies the resolvent identity") {
    for (cplx lam : {cplx(2, 0), cplx(-1, 0), cplx(3, 1), cplx(1.5, 2)}) {
        const SpectralParameter lp{lam};
        const RadialFunction b = RadialFunction::resolvent_kernel(lp);
        for (cplx s : {cplx(0.5, 0.5), cplx(0.2, 2.0), cplx(0.0, 4.0)}) {
            const StripPoint sp{s};
            const cplx bh = gelfand_transform(b, sp);
            INFO("lambda = " << lam << " s = " << s);
            CHECK(std::abs(bh * (sp.eigenvalue() - lp.eigenvalue()) - 1.0) < 1e-6);
        }
    }
    // frozen value of the closed-form transform
    const SpectralParameter lam{cplx(1.5, 2.0)};
    const StripPoint s{cplx(0.25, 1.0)};
    const cplx want = 1.0 / (s.eigenvalue() - lam.eigenvalue());
    CHECK(std::abs(want - cplx(-0.084170253467240555, -0.1836441893830703)) < 1e-14);
    const RadialFunction b = RadialFunction::resolvent_kernel(lam);
    CHECK(std::abs(gelfand_transform(b, s) - want) < 1e-7);
}

TEST_CASE("resolvent kernel rejects strip and pole parameters") {
    CHECK_THROWS_AS(RadialFunction::resolvent_kernel(SpectralParameter{cplx(0.5, 3.0)}),
                    std::domain_error);
    CHECK_THROWS_AS(RadialFunction::resolvent_kernel(SpectralParameter{cplx(1.0, 0.0)}),
                    std::domain_error);
    // a reflected parameter gives the same kernel as its canonical partner
    const RadialFunction a =
        RadialFunction::resolvent_kernel(SpectralParameter{cplx(-2.0, 0.0)});
    const RadialFunction b =
        RadialFunction::resolvent_kernel(SpectralParameter{cplx(3.0, 0.0)});
    CHECK(std::abs(a(2.0) - b(2.0)) < 1e-14);
}

TEST_CASE("pairing against the constant recovers the transform at the corner") {
    const RadialFunction b = RadialFunction::resolvent_kernel(SpectralParameter{cplx(2, 0)});
    CHECK(std::abs(pair(b, BoundedRadialFunction::constant(1.0)) - 0.5) < 1e-8);
    CHECK(std::abs(resolvent_transform(BoundedRadialFunction::constant(1.0),
                                       SpectralParameter{cplx(-1, 0)}) -
                   0.5) < 1e-8);
}

TEST_CASE("division operator frozen pointwise values") {
    const RadialFunction f = RadialFunction::indicator(1.0, 2.0);
    CHECK(std::abs(t_lambda(f, SpectralParameter{cplx(0.3, 0)}, 1.5) -
                   cplx(-0.07292611473990348, 0.0)) < 1e-10);
    CHECK(std::abs(t_lambda(f, SpectralParameter{cplx(0.25, 0.6)}, 1.2) -
                   cplx(-0.33162518640423698, 0.0042572713668575637)) < 1e-10);
    CHECK(std::abs(t_lambda(f, SpectralParameter{cplx(0.3, 0)}, 2.5)) < 1e-12);
    CHECK_THROWS_AS(t_lambda(f, SpectralParameter{cplx(0.5, 0)}, 1.5),
                    std::domain_error);
}

TEST_CASE("division identity: transform of T_lambda f is the divided difference") {
    const RadialFunction f = RadialFunction::indicator(1.0, 2.0);
    const SpectralParameter lam{cplx(0.3, 0.0)};
    const StripPoint s{cplx(0.5, 1.5)};
    const cplx rhs = (gelfand_transform(f, StripPoint(lam.lambda)) -
                      gelfand_transform(f, s)) /
                     (lam.eigenvalue() - s.eigenvalue());
    const cplx nu = s.s - 1.0;
    auto integrand = [&](double u) -> cplx {
        const double x = std::cosh(u);
        if (u == 0.0 || x >= 2.0) return 0.0;
        return t_lambda(f, lam, x) * legendre_p(nu, x) * std::sinh(u);
    };
    const QuadResult q = integrate(integrand, 0.0, std::acosh(2.0), 1e-10);
    CHECK(std::abs(0.5 * q.value - rhs) < 1e-6);
}

TEST_CASE("convolution transform is multiplicative") {
    const RadialFunction f = RadialFunction::indicator(1.0, 2.0);
    const StripPoint s{cplx(1, 0)};
    const cplx conv = convolve_transform(f, f, s);
    CHECK(std::abs(conv - 0.25) < 1e-6);
    const StripPoint s2{cplx(0.5, 1.0)};
    const cplx conv2 = convolve_transform(f, f, s2);
    const cplx fh = gelfand_transform(f, s2);
    CHECK(std::abs(conv2 - fh * fh) < 1e-5);
}

TEST_CASE("sampled functions: interpolation, mass and tail guard") {
    const RadialFunction hat = hat_mass_zero();
    CHECK(std::abs(hat(1.5) - 1.0) < 1e-14);
    CHECK(std::abs(hat(2.5) + 1.0) < 1e-14);
    CHECK(std::abs(hat(5.0)) == 0.0);
    CHECK(std::abs(gelfand_transform(hat, StripPoint(cplx(0, 0)))) < 1e-9);
    // non-negligible declared tail is rejected
    CHECK_THROWS_AS(RadialFunction::sampled({1.0, 2.0}, {1.0, 1.0}, 3.0),
                    std::invalid_argument);
}
