#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "hypharm/tauberian.hpp"

using namespace hypharm;

namespace {
RadialFunction hat_mass_zero() {
    return RadialFunction::sampled({1.0, 1.5, 2.0, 2.5, 3.0},
                                   {0.0, 1.0, 0.0, -1.0, 0.0}, 10.0);
}
} // namespace

TEST_CASE("delta_inf diagnostic: compactly supported data decays fast") {
    const RadialFunction f = RadialFunction::indicator(1.0, 2.0);
    const DecayDiagnostic d = delta_inf_diagnostic(f, 8.0, 24);
    REQUIRE(d.grid.size() == 24);
    CHECK(d.grid.front() == Catch::Approx(0.08));
    CHECK(std::abs(d.limsup_proxy) <= 1e-3);
    for (std::size_t i = 1; i < d.grid.size(); ++i) CHECK(d.grid[i] > d.grid[i - 1]);
}

TEST_CASE("delta_zero diagnostic stays bounded near the corner") {
    const RadialFunction f = RadialFunction::indicator(1.0, 2.0);
    const DecayDiagnostic d = delta_zero_diagnostic(f, 1e-4, 16);
    CHECK(d.grid.front() == Catch::Approx(1e-4));
    CHECK(std::abs(d.values.front()) <= 0.05);
    for (std::size_t i = 0; i < d.grid.size(); ++i) CHECK_FALSE(d.flagged[i]);
}

TEST_CASE("canonical strip grid covers the fundamental window") {
    const auto g = canonical_strip_grid(5, 10.0);
    REQUIRE(g.size() == 25);
    for (const cplx& s : g) {
        CHECK(s.real() >= 0.0);
        CHECK(s.real() <= 0.5);
        CHECK(s.imag() >= 0.0);
        CHECK(s.imag() <= 10.0);
    }
    CHECK(g.front() == cplx(0, 0));
    CHECK(g.back() == cplx(0.5, 10.0));
}

TEST_CASE("hull scan flags the corner for a mass-zero function") {
    const std::vector<RadialFunction> fam{hat_mass_zero()};
    const HullReport rep = hull_scan(fam, 11, 1e-6, 2.0);
    REQUIRE_FALSE(rep.common_zero_points.empty());
    bool corner = false;
    for (const cplx& s : rep.common_zero_points) {
        if (std::abs(s) < 1e-12) corner = true;
        // nothing flagged far from the corner at this tolerance
        CHECK(std::abs(s) < 0.3);
    }
    CHECK(corner);
}

TEST_CASE("hull scan of a nonvanishing family reports no common zeros") {
    const std::vector<RadialFunction> fam{RadialFunction::indicator(1.0, 2.0),
                                          RadialFunction::exp_decay(1.0)};
    const HullReport rep = hull_scan(fam, 7, 1e-6, 2.0);
    CHECK(rep.common_zero_points.empty());
}

TEST_CASE("theorem-2 hypothesis verdicts separate the two atom measures") {
    const RadialMeasure good({{0.5, cplx(1, 0)}});
    const Theorem2Report rg = theorem2_hypotheses(good, 15, 1e-4, 10.0);
    CHECK(rg.mass_is_one);
    CHECK_FALSE(rg.atom_at_zero);
    CHECK_FALSE(rg.transform_hits_one);
    CHECK(rg.min_distance_to_one > 1e-4);
    CHECK(rg.hypotheses_pass(1e-4));

    const RadialMeasure bad({{0.0, cplx(1, 0)}});
    const Theorem2Report rb = theorem2_hypotheses(bad, 15, 1e-4, 10.0);
    CHECK(rb.mass_is_one);
    CHECK(rb.atom_at_zero);
    CHECK(rb.transform_hits_one); // the transform is identically one
    CHECK_FALSE(rb.hypotheses_pass(1e-4));
}

TEST_CASE("corollary-3 decay curve for the half-shift atom") {
    const RadialMeasure mu({{0.5, cplx(1, 0)}});
    const auto grid = detail::log_spaced(1e-4, 0.45, 20);
    const DecayDiagnostic d = corollary3_decay(mu, grid);
    for (std::size_t i = 0; i < d.grid.size(); ++i) {
        CHECK_FALSE(d.flagged[i]);
        CHECK(d.values[i] >= -1e-9);
    }
    CHECK(d.values.front() <= 0.01);
}

TEST_CASE("corollary-3 flags the atom-at-zero measure") {
    const RadialMeasure mu({{0.0, cplx(1, 0)}});
    const DecayDiagnostic d = corollary3_decay(mu, {0.1, 0.2, 0.3});
    for (std::size_t i = 0; i < d.grid.size(); ++i) CHECK(d.flagged[i]);
}

TEST_CASE("decay diagnostics validate their parameters") {
    const RadialFunction f = RadialFunction::indicator(1.0, 2.0);
    CHECK_THROWS_AS(delta_inf_diagnostic(f, -1.0, 24), std::invalid_argument);
    CHECK_THROWS_AS(delta_zero_diagnostic(f, 0.7, 24), std::invalid_argument);
    CHECK_THROWS_AS(hull_scan({}, 5, 1e-6), std::invalid_argument);
}
