#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sys/wait.h>
#include <string>

#include "hypharm/parse.hpp"
#include "hypharm/report.hpp"

using namespace hypharm;

namespace {

struct RunResult {
    int status;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HYPHARM_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    char buf[4096];
    while (size_t n = fread(buf, 1, sizeof(buf), p)) out.append(buf, n);
    const int rc = pclose(p);
    return {WEXITSTATUS(rc), out};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/hypharm_test_" + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST_CASE("complex literal parsing") {
    CHECK(parse_complex("2") == cplx(2, 0));
    CHECK(parse_complex("-0.5") == cplx(-0.5, 0));
    CHECK(parse_complex("3i") == cplx(0, 3));
    CHECK(parse_complex("-i") == cplx(0, -1));
    CHECK(parse_complex("1+2i") == cplx(1, 2));
    CHECK(parse_complex("1.5-0.25i") == cplx(1.5, -0.25));
    CHECK(parse_complex("1e-3+2e-4i") == cplx(1e-3, 2e-4));
    CHECK(parse_complex("-1.5e+2-2i") == cplx(-150, -2));
    CHECK_THROWS_AS(parse_complex(""), parse_error);
    CHECK_THROWS_AS(parse_complex("1+2j"), parse_error);
    CHECK_THROWS_AS(parse_complex("abc"), parse_error);
}

TEST_CASE("function mini-language") {
    const RadialFunction ind = parse_radial_function("indicator:1:2");
    CHECK(ind.l1_norm() == 1.0);
    const RadialFunction ed = parse_radial_function("expdecay:2");
    CHECK(std::abs(ed(2.0).real() - std::exp(-4.0)) < 1e-15);
    const RadialFunction bl = parse_radial_function("blambda:2:0");
    CHECK(bl.kind() == RadialFunction::Kind::resolvent_kernel);
    CHECK(parse_radial_function("zero").l1_norm() == 0.0);
    CHECK_THROWS_AS(parse_radial_function("indicator:1"), parse_error);
    CHECK_THROWS_AS(parse_radial_function("nosuch:1"), parse_error);
}

TEST_CASE("sampled function file round-trip") {
    const std::string path = write_temp(
        "sampled.txt", "# tail_exponent=10\n1.0 0.0\n1.5 1.0\n2.0 0.0\n");
    const RadialFunction f = parse_radial_function("sampled:" + path);
    CHECK(std::abs(f(1.5).real() - 1.0) < 1e-14);
    CHECK(f.support_upper() == 2.0);
    const std::string bad = write_temp("sampled_bad.txt", "1.0 0.0\n2.0 0.0\n");
    CHECK_THROWS_AS(parse_radial_function("sampled:" + bad), parse_error);
    CHECK_THROWS_AS(parse_radial_function("sampled:/nonexistent/file"), parse_error);
}

TEST_CASE("bounded function mini-language") {
    const BoundedRadialFunction c = parse_bounded_function("const:2+1i");
    CHECK(c(7.0) == cplx(2, 1));
    CHECK(c.sup_norm == Catch::Approx(std::sqrt(5.0)));
    const BoundedRadialFunction i = parse_bounded_function("indicator:1:3");
    CHECK(i.sup_norm == 1.0);
    CHECK_THROWS_AS(parse_bounded_function("blambda:2:0"), parse_error);
}

TEST_CASE("measure mini-language") {
    const RadialMeasure mu =
        parse_radial_measure("atom:0.5:0.6;atom:1.2:0.4+0i");
    REQUIRE(mu.atoms().size() == 2);
    CHECK(mu.atoms()[0].zeta == 0.5);
    CHECK(std::abs(mu.total_mass() - 1.0) < 1e-15);
    const RadialMeasure md = parse_radial_measure("density:expdecay:1");
    CHECK(md.density().has_value());
    CHECK_THROWS_AS(parse_radial_measure(""), parse_error);
    CHECK_THROWS_AS(parse_radial_measure("atom:0.5"), parse_error);
}

TEST_CASE("disk function mini-language and boundary files") {
    const DiskFunction poly = parse_disk_function("holo:poly:1:0:2");
    CHECK(std::abs(poly(cplx(0.5, 0)) - cplx(1.5, 0)) < 1e-15);
    CHECK(poly.tag == DiskFunction::Tag::holomorphic_test);
    const DiskFunction cz = parse_disk_function("conjz");
    CHECK(cz(cplx(0.3, 0.4)) == cplx(0.3, -0.4));
    const DiskFunction ig = parse_disk_function("invgrowth");
    CHECK(std::abs(ig(cplx(0, 0)) - 1.0) < 1e-15);

    const std::string path =
        write_temp("boundary.txt", "# cos(theta)\n1 0.5 0\n-1 0.5 0\n");
    const DiskFunction pf = parse_disk_function("poisson:" + path);
    CHECK(std::abs(pf(cplx(0.3, 0.2)) - cplx(0.3, 0)) < 1e-14);
    CHECK_THROWS_AS(parse_disk_function("holo:sin"), parse_error);
}

TEST_CASE("pair list files") {
    const std::string path = write_temp("pairs.txt", "# r1 r2\n0.3 0.6\n0.5 0.5\n");
    const auto pairs = read_pair_list(path);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0] == std::pair<double, double>(0.3, 0.6));
}

TEST_CASE("report formatting uses 12 significant digits") {
    CHECK(fmt_real(0.5) == "0.5");
    CHECK(fmt_real(1.0 / 3.0) == "0.333333333333");
    CHECK(fmt_real(1e-6) == "1e-06");
    CHECK(fmt_complex(cplx(1, -2)) == "1-2i");
    CHECK(fmt_complex(cplx(0.5, 0.25)) == "0.5+0.25i");
}

TEST_CASE("cli: scalar transform, errors and exit codes") {
    const RunResult ok = run_cli("transform --f indicator:1:2 --s 1+0i");
    CHECK(ok.status == 0);
    CHECK(ok.output.find("value = 0.5+0i") != std::string::npos);
    CHECK(ok.output.find("version = ") != std::string::npos);
    CHECK(ok.output.find("seed = ") != std::string::npos);

    const RunResult bad_spec = run_cli("transform --f nosuch:1 --s 1+0i");
    CHECK(bad_spec.status == 2);
    CHECK(bad_spec.output.find("error: parse:") != std::string::npos);

    const RunResult bad_domain = run_cli("transform --f indicator:1:2 --s 3+0i");
    CHECK(bad_domain.status == 2);
    CHECK(bad_domain.output.find("error: precondition:") != std::string::npos);
}

TEST_CASE("cli: csv format emits headers and rows") {
    const RunResult r =
        run_cli("--format csv resolvent-check --lambda 2+0i --grid 3x3 --im-max 2");
    CHECK(r.status == 0);
    CHECK(r.output.find("re_s,im_s,residual") != std::string::npos);
    CHECK(r.output.find("# max_residual = ") != std::string::npos);
}

TEST_CASE("cli: deterministic reruns") {
    const std::string cmd = "morera-j --r 0.5 --s 1+1i";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.status == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("0.0259305594554+0.0206067243754i") != std::string::npos);
}

TEST_CASE("cli: seeded subcommands echo the seed and reproduce") {
    const std::string cmd =
        "--seed 777 contour --fdisk holo:poly:0:0:1 --r 0.4 --num-g 3 --n 64";
    const RunResult a = run_cli(cmd);
    const RunResult b = run_cli(cmd);
    CHECK(a.status == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("seed = 777") != std::string::npos);
}
