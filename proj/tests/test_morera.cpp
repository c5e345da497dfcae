#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hypharm/morera.hpp"

using namespace hypharm;

TEST_CASE("spectral function J frozen reference value and guards") {
    const cplx got = morera_j(0.5, cplx(1, 1));
    CHECK(std::abs(got - cplx(0.025930559455409895, 0.020606724375439878)) < 1e-12);
    CHECK_THROWS_AS(morera_j(0.0, cplx(0, 0)), std::domain_error);
    CHECK_THROWS_AS(morera_j(1.0, cplx(0, 0)), std::domain_error);
}

TEST_CASE("argument principle counts planted zeros exactly") {
    const cplx z1(0.4, 0.3), z2(0.7, 0.8);
    const Rectangle rect(cplx(0, 0), cplx(1, 1));
    CHECK(argument_principle_count([&](cplx z) { return z - z1; }, rect) == 1);
    CHECK(argument_principle_count([&](cplx z) { return (z - z1) * (z - z2); },
                                   rect) == 2);
    // splitting additivity across a vertical cut
    const Rectangle left(cplx(0, 0), cplx(0.55, 1));
    const Rectangle right(cplx(0.55, 0), cplx(1, 1));
    CHECK(argument_principle_count([&](cplx z) { return (z - z1) * (z - z2); },
                                   left) == 1);
    CHECK(argument_principle_count([&](cplx z) { return (z - z1) * (z - z2); },
                                   right) == 1);
    // no zeros at all
    CHECK(argument_principle_count([](cplx z) { return z + cplx(5, 5); }, rect) == 0);
}

TEST_CASE("argument principle reports zeros sitting on the boundary") {
    const Rectangle rect(cplx(0, 0), cplx(1, 1));
    CHECK_THROWS_AS(
        argument_principle_count([](cplx z) { return z - cplx(0.5, 0.0); }, rect),
        boundary_zero_error);
}

TEST_CASE("locate_zeros polishes planted quadratic zeros") {
    const cplx z1(0.31, 0.27), z2(0.72, 0.81);
    const ZeroReport rep = locate_zeros(
        [&](cplx z) { return (z - z1) * (z - z2); }, Rectangle(cplx(0, 0), cplx(1, 1)));
    CHECK(rep.winding_count == 2);
    REQUIRE(rep.zeros.size() == 2);
    CHECK_FALSE(rep.refined);
    for (const auto& z : rep.zeros) {
        const double d = std::min(std::abs(z.location - z1), std::abs(z.location - z2));
        CHECK(d < 1e-10);
        CHECK(z.residual < 1e-9);
    }
}

TEST_CASE("locate_zeros flags a double zero as refined") {
    const cplx z0(0.5, 0.5);
    const ZeroReport rep = locate_zeros(
        [&](cplx z) { return (z - z0) * (z - z0); }, Rectangle(cplx(0, 0), cplx(1, 1)));
    CHECK(rep.winding_count == 2);
    REQUIRE(rep.zeros.size() == 1);
    // |F| < 1e-9 at a double zero only pins the location to ~sqrt(1e-9)
    CHECK(std::abs(rep.zeros.front().location - z0) < 5e-5);
    CHECK(rep.refined);
}

TEST_CASE("J has no zeros on the standard strip window for the test radii") {
    const Rectangle window(cplx(0, 0.01), cplx(1, 20));
    for (double r : {0.3, 0.5, 0.6}) {
        const ZeroReport rep =
            locate_zeros([r](cplx s) { return morera_j(r, s); }, window);
        INFO("r = " << r);
        CHECK(rep.winding_count == 0);
        CHECK(rep.zeros.empty());
    }
}

TEST_CASE("common zero scan completes and is stable") {
    const Rectangle window(cplx(0, 0.01), cplx(1, 20));
    const CommonZeroReport rep = common_zero_scan(0.3, 0.6, window);
    CHECK(rep.zeros1.empty());
    CHECK(rep.zeros2.empty());
    CHECK(rep.no_common_zero_found());

    // identical radii: every zero of the first list must match the second
    const CommonZeroReport same = common_zero_scan(0.5, 0.5, window);
    CHECK(same.zeros1.size() == same.zeros2.size());
    CHECK(same.common.size() == same.zeros1.size());
}

TEST_CASE("rectangle preconditions") {
    CHECK_THROWS_AS(Rectangle(cplx(1, 0), cplx(0, 1)), std::invalid_argument);
    CHECK_THROWS_AS(common_zero_scan(0.0, 0.5, Rectangle(cplx(0, 0), cplx(1, 1))),
                    std::domain_error);
}
