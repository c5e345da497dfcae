// Batch command-line front end: every library operation as a subcommand with
// deterministic, machine-readable output (key = value sections or CSV).
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypharm/disk.hpp"
#include "hypharm/morera.hpp"
#include "hypharm/parse.hpp"
#include "hypharm/report.hpp"
#include "hypharm/selftest.hpp"
#include "hypharm/tauberian.hpp"
#include "hypharm/transform.hpp"

namespace {

constexpr const char* kVersion = "1.0.0";

using namespace hypharm;

struct Options {
    std::string format = "structured";
    unsigned long seed = 12345;
};

struct Echo {
    std::vector<std::pair<std::string, std::string>> items;
    void add(const std::string& k, const std::string& v) { items.emplace_back(k, v); }
    void add(const std::string& k, double v) { items.emplace_back(k, fmt_real(v)); }
    void add(const std::string& k, int v) { items.emplace_back(k, std::to_string(v)); }
};

void begin_report(ReportWriter& w, const std::string& command, const Options& opt,
                  const Echo& echo) {
    w.section("run");
    w.kv("tool", "hypharm");
    w.kv("version", std::string(kVersion));
    w.kv("command", command);
    w.kv("seed", std::to_string(opt.seed));
    w.kv("format", opt.format);
    w.section("config");
    for (const auto& [k, v] : echo.items) w.kv(k, v);
}

bool parse_grid(const std::string& s, int& n, int& m) {
    const auto p = split(s, 'x');
    if (p.size() != 2) return false;
    try {
        n = std::stoi(p[0]);
        m = std::stoi(p[1]);
    } catch (...) {
        return false;
    }
    return n >= 2 && m >= 2;
}

Rectangle parse_window(const std::string& s) {
    const auto p = split(s, ':');
    if (p.size() != 4) throw parse_error("window must be re0:im0:re1:im1");
    return Rectangle(cplx(std::stod(p[0]), std::stod(p[1])),
                     cplx(std::stod(p[2]), std::stod(p[3])));
}

std::vector<cplx> default_growth_samples() {
    std::vector<cplx> zs;
    const double pi = 3.14159265358979323846;
    for (double r : {0.0, 0.2, 0.4, 0.6, 0.8, 0.9, 0.99, 0.999}) {
        if (r == 0.0) {
            zs.emplace_back(0.0, 0.0);
            continue;
        }
        for (int k = 0; k < 8; ++k)
            zs.push_back(r * std::exp(cplx(0, 2.0 * pi * k / 8)));
    }
    return zs;
}

void emit_decay(ReportWriter& w, const DecayDiagnostic& d, const char* param_name) {
    w.section("curve");
    w.table_header({param_name, "value", "flagged"});
    for (std::size_t i = 0; i < d.grid.size(); ++i)
        w.table_row({fmt_real(d.grid[i]),
                     d.flagged[i] ? "nan" : fmt_real(d.values[i]),
                     d.flagged[i] ? "true" : "false"});
    w.section("result");
    w.kv("limsup_proxy", d.limsup_proxy);
}

void emit_zero_report(ReportWriter& w, const ZeroReport& rep, const std::string& prefix) {
    w.kv(prefix + "winding_count", rep.winding_count);
    w.kv(prefix + "zeros_found", static_cast<int>(rep.zeros.size()));
    w.kv(prefix + "refined", rep.refined);
    w.table_header({"zero", "residual"});
    for (const auto& z : rep.zeros)
        w.table_row({fmt_complex(z.location), fmt_real(z.residual)});
}

int run(int argc, char** argv) {
    CLI::App app{"Spherical-transform diagnostics for radial harmonic analysis "
                 "on the hyperbolic disk"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format: structured | csv")
        ->check(CLI::IsMember({"structured", "csv"}))
        ->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for any randomized sampling")
        ->capture_default_str();

    // ---- shared option storage ----
    std::string fspec, gspec, muspec, dspec, s_str = "0.5+0i", lambda_str,
                grid_str = "5x5", window_str = "0:0:1:20", pairs_path;
    std::vector<std::string> fspecs;
    double t = 0.0, t_max = 8.0, x_min = 1e-3, im_max = 5.0, tol = 1e-6, r = 0.5,
           r1 = 0.3, r2 = 0.6, match_tol = 1e-6, c_bound = 1.0, x_max = 0.45;
    int n = 32, resolution = 21, num_g = 20, nodes = 256;
    bool have_t = false;

    auto* cmd_transform = app.add_subcommand(
        "transform", "Gelfand transform of an integrable radial function at s. "
                     "CSV columns: none (scalar result).");
    cmd_transform->add_option("--f", fspec, "Function spec")->required();
    cmd_transform->add_option("--s", s_str, "Strip point a+bi")->required();

    auto* cmd_mtransform = app.add_subcommand(
        "measure-transform", "Transform of a radial measure at s. CSV: scalar.");
    cmd_mtransform->add_option("--mu", muspec, "Measure spec")->required();
    cmd_mtransform->add_option("--s", s_str, "Strip point a+bi")->required();

    auto* cmd_resolvent = app.add_subcommand(
        "resolvent-check", "Resolvent identity residual over a strip grid. "
                           "CSV columns: re_s,im_s,residual.");
    cmd_resolvent->add_option("--lambda", lambda_str, "Resolvent parameter a+bi")
        ->required();
    cmd_resolvent->add_option("--grid", grid_str, "Grid NxM over the canonical window");
    cmd_resolvent->add_option("--im-max", im_max, "Largest Im s scanned");
    cmd_resolvent->add_option("--tol", tol, "Pass threshold on the max residual");

    auto* cmd_tlambda = app.add_subcommand(
        "tlambda-check", "Division-operator identity: transform of T_lambda f vs "
                         "the divided difference; or pointwise value with --t. "
                         "CSV: scalar.");
    cmd_tlambda->add_option("--f", fspec, "Function spec (compact support)")
        ->required();
    cmd_tlambda->add_option("--lambda", lambda_str, "Strip-interior lambda a+bi")
        ->required();
    cmd_tlambda->add_option("--s", s_str, "Strip point a+bi");
    cmd_tlambda->add_option("--t", t, "Evaluate (T_lambda f)(t) pointwise instead")
        ->each([&](const std::string&) { have_t = true; });
    cmd_tlambda->add_option("--tol", tol, "Pass threshold on the identity residual");

    auto* cmd_convolve = app.add_subcommand(
        "convolve-check", "Multiplicativity: transform of f*g vs the product of "
                          "transforms at s. CSV: scalar.");
    cmd_convolve->add_option("--f", fspec, "Left factor spec")->required();
    cmd_convolve->add_option("--g", gspec, "Right factor spec")->required();
    cmd_convolve->add_option("--s", s_str, "Strip point a+bi")->required();
    cmd_convolve->add_option("--tol", tol, "Pass threshold");

    auto* cmd_decay_inf = app.add_subcommand(
        "decay-inf", "Critical-line decay curve -exp(-pi t) log|f^(1/2+it)|. "
                     "CSV columns: t,value,flagged.");
    cmd_decay_inf->add_option("--f", fspec, "Function spec")->required();
    cmd_decay_inf->add_option("--t-max", t_max, "Largest t");
    cmd_decay_inf->add_option("--n", n, "Number of log-spaced nodes");

    auto* cmd_decay_zero = app.add_subcommand(
        "decay-zero", "Corner decay curve -x log|f^(x)| on real x in [x_min, 1/2). "
                      "CSV columns: x,value,flagged.");
    cmd_decay_zero->add_option("--f", fspec, "Function spec")->required();
    cmd_decay_zero->add_option("--x-min", x_min, "Smallest x");
    cmd_decay_zero->add_option("--n", n, "Number of log-spaced nodes");

    auto* cmd_hull = app.add_subcommand(
        "hull", "Common-zero scan of a family of transforms over the canonical "
                "strip window. CSV columns: re_s,im_s.");
    cmd_hull->add_option("--f", fspecs, "Function spec (repeatable)")->required();
    cmd_hull->add_option("--resolution", resolution, "Grid resolution per axis");
    cmd_hull->add_option("--tol", tol, "Common-zero modulus threshold");
    cmd_hull->add_option("--im-max", im_max, "Largest Im s scanned");

    auto* cmd_thm2 = app.add_subcommand(
        "thm2-check", "Hypothesis verdicts for the measure-harmonicity theorem. "
                      "CSV columns: x,value,flagged (corner curve).");
    cmd_thm2->add_option("--mu", muspec, "Measure spec")->required();
    cmd_thm2->add_option("--resolution", resolution, "Grid resolution per axis");
    cmd_thm2->add_option("--tol", tol, "Threshold for the transform-hits-one flag");
    cmd_thm2->add_option("--im-max", im_max, "Largest Im s scanned");

    auto* cmd_cor3 = app.add_subcommand(
        "cor3-check", "Probability-measure decay curve -x log(1 - mu^(x)). "
                      "CSV columns: x,value,flagged.");
    cmd_cor3->add_option("--mu", muspec, "Measure spec")->required();
    cmd_cor3->add_option("--x-min", x_min, "Smallest x");
    cmd_cor3->add_option("--x-max", x_max, "Largest x (< 1/2)");
    cmd_cor3->add_option("--n", n, "Number of log-spaced nodes");

    auto* cmd_morera_j = app.add_subcommand(
        "morera-j", "The two-circle spectral function J(r, s). CSV: scalar.");
    cmd_morera_j->add_option("--r", r, "Circle radius in (0, 1)")->required();
    cmd_morera_j->add_option("--s", s_str, "Spectral argument a+bi")->required();

    auto* cmd_zero_scan = app.add_subcommand(
        "zero-scan", "Zeros of J(r, .) inside a rectangle, by argument principle "
                     "plus quadrisection. CSV columns: zero,residual.");
    cmd_zero_scan->add_option("--r", r, "Circle radius in (0, 1)")->required();
    cmd_zero_scan->add_option("--window", window_str, "Rectangle re0:im0:re1:im1");
    cmd_zero_scan->add_option("--tol", tol, "Location tolerance");

    auto* cmd_common = app.add_subcommand(
        "common-zero-scan", "Common zeros of J(r1, .) and J(r2, .) on a window; "
                            "batch mode via --pairs. CSV columns: "
                            "r1,r2,zeros1,zeros2,common.");
    cmd_common->add_option("--r1", r1, "First radius");
    cmd_common->add_option("--r2", r2, "Second radius");
    cmd_common->add_option("--pairs", pairs_path, "Two-column (r1 r2) batch file");
    cmd_common->add_option("--window", window_str, "Rectangle re0:im0:re1:im1");
    cmd_common->add_option("--match-tol", match_tol, "Zero matching distance");

    auto* cmd_harmonic = app.add_subcommand(
        "harmonic-check", "Mean-value residual of a disk function against a "
                          "radial measure over seeded random automorphisms. "
                          "CSV: scalar.");
    cmd_harmonic->add_option("--fdisk", dspec, "Disk function spec")->required();
    cmd_harmonic->add_option("--mu", muspec, "Measure spec")->required();
    cmd_harmonic->add_option("--num-g", num_g, "Sampled automorphism count");
    cmd_harmonic->add_option("--n", nodes, "Circle quadrature nodes");
    cmd_harmonic->add_option("--tol", tol, "Pass threshold on the residual");

    auto* cmd_contour = app.add_subcommand(
        "contour", "Contour integral of a disk function over automorphism images "
                   "of the central circle of radius r. CSV columns: "
                   "g_index,integral_re,integral_im,abs.");
    cmd_contour->add_option("--fdisk", dspec, "Disk function spec")->required();
    cmd_contour->add_option("--r", r, "Circle radius in (0, 1)");
    cmd_contour->add_option("--num-g", num_g, "Sampled automorphism count");
    cmd_contour->add_option("--n", nodes, "Circle quadrature nodes");

    auto* cmd_growth = app.add_subcommand(
        "growth-check", "Growth bound |f(z)|(1 - |z|^2) <= c on a fixed radial "
                        "sample ladder. CSV: scalar.");
    cmd_growth->add_option("--fdisk", dspec, "Disk function spec")->required();
    cmd_growth->add_option("--c", c_bound, "Growth constant");

    auto* cmd_selftest =
        app.add_subcommand("selftest", "Run the full invariant suite.");

    CLI11_PARSE(app, argc, argv);

    ReportWriter w(std::cout, opt.format == "csv");
    std::ostringstream body;

    if (cmd_transform->parsed()) {
        Echo e;
        e.add("f", fspec);
        e.add("s", s_str);
        begin_report(w, "transform", opt, e);
        const RadialFunction f = parse_radial_function(fspec);
        double err = 0.0;
        const cplx v = gelfand_transform(f, StripPoint(parse_complex(s_str)), &err);
        w.section("result");
        w.kv("value", v);
        w.kv("quadrature_error", err);
        w.kv("l1_norm", f.l1_norm());
        return 0;
    }

    if (cmd_mtransform->parsed()) {
        Echo e;
        e.add("mu", muspec);
        e.add("s", s_str);
        begin_report(w, "measure-transform", opt, e);
        const RadialMeasure mu = parse_radial_measure(muspec);
        const cplx v = measure_gelfand(mu, StripPoint(parse_complex(s_str)));
        w.section("result");
        w.kv("value", v);
        w.kv("total_mass", mu.total_mass());
        return 0;
    }

    if (cmd_resolvent->parsed()) {
        Echo e;
        e.add("lambda", lambda_str);
        e.add("grid", grid_str);
        e.add("im_max", im_max);
        e.add("tol", tol);
        begin_report(w, "resolvent-check", opt, e);
        int ng, mg;
        if (!parse_grid(grid_str, ng, mg)) throw parse_error("bad grid: " + grid_str);
        const SpectralParameter lam{parse_complex(lambda_str)};
        const RadialFunction b = RadialFunction::resolvent_kernel(lam);
        w.section("grid");
        w.table_header({"re_s", "im_s", "residual"});
        double worst = 0.0;
        for (int i = 0; i < ng; ++i)
            for (int j = 0; j < mg; ++j) {
                const StripPoint s{cplx(0.5 * i / (ng - 1), im_max * j / (mg - 1))};
                const cplx bh = gelfand_transform(b, s);
                const double res =
                    std::abs(bh * (s.eigenvalue() - lam.eigenvalue()) - 1.0);
                worst = std::max(worst, res);
                w.table_row({fmt_real(s.s.real()), fmt_real(s.s.imag()),
                             fmt_real(res)});
            }
        w.section("result");
        w.kv("max_residual", worst);
        w.kv("pass", worst <= tol);
        return worst <= tol ? 0 : 1;
    }

    if (cmd_tlambda->parsed()) {
        Echo e;
        e.add("f", fspec);
        e.add("lambda", lambda_str);
        if (have_t)
            e.add("t", t);
        else
            e.add("s", s_str);
        e.add("tol", tol);
        begin_report(w, "tlambda-check", opt, e);
        const RadialFunction f = parse_radial_function(fspec);
        const SpectralParameter lam{parse_complex(lambda_str)};
        if (have_t) {
            w.section("result");
            w.kv("value", t_lambda(f, lam, t));
            return 0;
        }
        if (!f.has_compact_support())
            throw std::domain_error(
                "tlambda-check: the transform comparison needs compact support");
        const StripPoint s{parse_complex(s_str)};
        const cplx denom = lam.eigenvalue() - s.eigenvalue();
        if (std::abs(denom) < 1e-10)
            throw std::domain_error("tlambda-check: s too close to the lambda fiber");
        const cplx rhs = (gelfand_transform(f, StripPoint(lam.lambda)) -
                          gelfand_transform(f, s)) /
                         denom;
        const cplx nu = s.s - 1.0;
        const double B = f.support_upper();
        auto integrand = [&](double u) -> cplx {
            const double x = std::cosh(u);
            if (u == 0.0 || x >= B) return 0.0;
            return t_lambda(f, lam, x) * legendre_p(nu, x) * std::sinh(u);
        };
        QuadResult q = integrate(integrand, 0.0, std::acosh(B), 1e-10);
        const cplx lhs = 0.5 * q.value;
        const double diff = std::abs(lhs - rhs);
        w.section("result");
        w.kv("transform_of_tlambda_f", lhs);
        w.kv("divided_difference", rhs);
        w.kv("difference", diff);
        w.kv("pass", diff <= tol);
        return diff <= tol ? 0 : 1;
    }

    if (cmd_convolve->parsed()) {
        Echo e;
        e.add("f", fspec);
        e.add("g", gspec);
        e.add("s", s_str);
        e.add("tol", tol);
        begin_report(w, "convolve-check", opt, e);
        const RadialFunction f = parse_radial_function(fspec);
        const RadialFunction g = parse_radial_function(gspec);
        const StripPoint s{parse_complex(s_str)};
        const cplx conv = convolve_transform(f, g, s);
        const cplx prod = gelfand_transform(f, s) * gelfand_transform(g, s);
        const double diff = std::abs(conv - prod);
        w.section("result");
        w.kv("convolution_transform", conv);
        w.kv("product_of_transforms", prod);
        w.kv("difference", diff);
        w.kv("pass", diff <= tol);
        return diff <= tol ? 0 : 1;
    }

    if (cmd_decay_inf->parsed()) {
        Echo e;
        e.add("f", fspec);
        e.add("t_max", t_max);
        e.add("n", n);
        begin_report(w, "decay-inf", opt, e);
        emit_decay(w, delta_inf_diagnostic(parse_radial_function(fspec), t_max, n),
                   "t");
        return 0;
    }

    if (cmd_decay_zero->parsed()) {
        Echo e;
        e.add("f", fspec);
        e.add("x_min", x_min);
        e.add("n", n);
        begin_report(w, "decay-zero", opt, e);
        emit_decay(w, delta_zero_diagnostic(parse_radial_function(fspec), x_min, n),
                   "x");
        return 0;
    }

    if (cmd_hull->parsed()) {
        Echo e;
        for (std::size_t i = 0; i < fspecs.size(); ++i)
            e.add("f" + std::to_string(i), fspecs[i]);
        e.add("resolution", resolution);
        e.add("tol", tol);
        e.add("im_max", im_max);
        begin_report(w, "hull", opt, e);
        std::vector<RadialFunction> fs;
        for (const auto& sp : fspecs) fs.push_back(parse_radial_function(sp));
        const HullReport rep = hull_scan(fs, resolution, tol, im_max);
        w.section("common_zeros");
        w.table_header({"re_s", "im_s"});
        for (const cplx& z : rep.common_zero_points)
            w.table_row({fmt_real(z.real()), fmt_real(z.imag())});
        w.section("result");
        w.kv("grid_points", static_cast<int>(rep.grid.size()));
        w.kv("common_zero_points", static_cast<int>(rep.common_zero_points.size()));
        return 0;
    }

    if (cmd_thm2->parsed()) {
        Echo e;
        e.add("mu", muspec);
        e.add("resolution", resolution);
        e.add("tol", tol);
        e.add("im_max", im_max);
        begin_report(w, "thm2-check", opt, e);
        const RadialMeasure mu = parse_radial_measure(muspec);
        const Theorem2Report rep = theorem2_hypotheses(mu, resolution, tol, im_max);
        w.section("verdicts");
        w.kv("mass_is_one", rep.mass_is_one);
        w.kv("mass_deviation", rep.mass_deviation);
        w.kv("atom_at_zero", rep.atom_at_zero);
        w.kv("min_distance_to_one", rep.min_distance_to_one);
        w.kv("argmin_s", rep.argmin_s);
        w.kv("transform_hits_one", rep.transform_hits_one);
        emit_decay(w, rep.corner_decay, "x");
        w.kv("hypotheses_pass", rep.hypotheses_pass(tol));
        return rep.hypotheses_pass(tol) ? 0 : 1;
    }

    if (cmd_cor3->parsed()) {
        Echo e;
        e.add("mu", muspec);
        e.add("x_min", x_min);
        e.add("x_max", x_max);
        e.add("n", n);
        begin_report(w, "cor3-check", opt, e);
        const RadialMeasure mu = parse_radial_measure(muspec);
        emit_decay(w, corollary3_decay(mu, detail::log_spaced(x_min, x_max, n)), "x");
        return 0;
    }

    if (cmd_morera_j->parsed()) {
        Echo e;
        e.add("r", r);
        e.add("s", s_str);
        begin_report(w, "morera-j", opt, e);
        w.section("result");
        w.kv("value", morera_j(r, parse_complex(s_str)));
        return 0;
    }

    if (cmd_zero_scan->parsed()) {
        Echo e;
        e.add("r", r);
        e.add("window", window_str);
        e.add("tol", tol);
        begin_report(w, "zero-scan", opt, e);
        const Rectangle rect = parse_window(window_str);
        const ZeroReport rep =
            locate_zeros([r](cplx s) { return morera_j(r, s); }, rect, tol);
        w.section("result");
        emit_zero_report(w, rep, "");
        return 0;
    }

    if (cmd_common->parsed()) {
        Echo e;
        e.add("window", window_str);
        e.add("match_tol", match_tol);
        std::vector<std::pair<double, double>> pairs;
        if (!pairs_path.empty()) {
            e.add("pairs", pairs_path);
            pairs = read_pair_list(pairs_path);
        } else {
            e.add("r1", r1);
            e.add("r2", r2);
            pairs = {{r1, r2}};
        }
        begin_report(w, "common-zero-scan", opt, e);
        const Rectangle rect = parse_window(window_str);
        w.section("pairs");
        w.table_header({"r1", "r2", "zeros1", "zeros2", "common"});
        int total_common = 0;
        for (const auto& [a, b] : pairs) {
            const CommonZeroReport rep = common_zero_scan(a, b, rect, match_tol);
            total_common += static_cast<int>(rep.common.size());
            w.table_row({fmt_real(a), fmt_real(b),
                         std::to_string(rep.zeros1.size()),
                         std::to_string(rep.zeros2.size()),
                         std::to_string(rep.common.size())});
        }
        w.section("result");
        w.kv("pairs_scanned", static_cast<int>(pairs.size()));
        w.kv("common_zeros_total", total_common);
        w.kv("no_common_zero_found", total_common == 0);
        return 0;
    }

    if (cmd_harmonic->parsed()) {
        Echo e;
        e.add("fdisk", dspec);
        e.add("mu", muspec);
        e.add("num_g", num_g);
        e.add("n", nodes);
        e.add("tol", tol);
        begin_report(w, "harmonic-check", opt, e);
        const DiskFunction f = parse_disk_function(dspec);
        const RadialMeasure mu = parse_radial_measure(muspec);
        const double res = mu_mean_value_residual(
            f, mu, random_mobius_sample(num_g, opt.seed), nodes);
        w.section("result");
        w.kv("max_residual", res);
        w.kv("pass", res <= tol);
        return res <= tol ? 0 : 1;
    }

    if (cmd_contour->parsed()) {
        Echo e;
        e.add("fdisk", dspec);
        e.add("r", r);
        e.add("num_g", num_g);
        e.add("n", nodes);
        begin_report(w, "contour", opt, e);
        const DiskFunction f = parse_disk_function(dspec);
        std::vector<MobiusMap> gs{MobiusMap::identity()};
        for (const auto& g : random_mobius_sample(num_g, opt.seed)) gs.push_back(g);
        w.section("integrals");
        w.table_header({"g_index", "integral_re", "integral_im", "abs"});
        double worst = 0.0;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            const cplx v = morera_contour_integral(f, gs[i], r, nodes);
            worst = std::max(worst, std::abs(v));
            w.table_row({std::to_string(i), fmt_real(v.real()), fmt_real(v.imag()),
                         fmt_real(std::abs(v))});
        }
        w.section("result");
        w.kv("max_abs_integral", worst);
        return 0;
    }

    if (cmd_growth->parsed()) {
        Echo e;
        e.add("fdisk", dspec);
        e.add("c", c_bound);
        begin_report(w, "growth-check", opt, e);
        const DiskFunction f = parse_disk_function(dspec);
        const GrowthVerdict v = growth_check(f, c_bound, default_growth_samples());
        w.section("result");
        w.kv("satisfied", v.satisfied);
        w.kv("max_weighted", v.max_weighted);
        w.kv("argmax", v.argmax);
        return v.satisfied ? 0 : 1;
    }

    if (cmd_selftest->parsed()) {
        Echo e;
        begin_report(w, "selftest", opt, e);
        const auto results = run_selftest();
        w.section("checks");
        w.table_header({"name", "status", "detail"});
        int failures = 0;
        for (const auto& rres : results) {
            if (!rres.pass) ++failures;
            w.table_row({rres.name, rres.pass ? "ok" : "FAIL", rres.detail});
        }
        w.section("result");
        w.kv("checks", static_cast<int>(results.size()));
        w.kv("failures", failures);
        w.kv("pass", failures == 0);
        return failures == 0 ? 0 : 1;
    }

    std::cout << "error: usage: no subcommand handled\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hypharm::parse_error& e) {
        std::cout << "error: parse: " << e.what() << "\n";
        return 2;
    } catch (const hypharm::quadrature_error& e) {
        std::cout << "error: quadrature: " << e.what() << "\n";
        return 3;
    } catch (const hypharm::boundary_zero_error& e) {
        std::cout << "error: boundary-zero: " << e.what() << "\n";
        return 3;
    } catch (const hypharm::subdivision_budget_error& e) {
        std::cout << "error: subdivision-budget: " << e.what() << "\n";
        return 3;
    } catch (const hypharm::hyp2f1_error& e) {
        std::cout << "error: hypergeometric: " << e.what() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cout << "error: precondition: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cout << "error: precondition: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << "error: internal: " << e.what() << "\n";
        return 4;
    }
}
