// Parsing for the CLI surface: complex literals `a+bi`, the function and
// measure mini-languages, disk-function specifiers, and the small text file
// formats (sampled functions, boundary coefficients, radius pair lists).
#pragma once

#include <charconv>
#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypharm/disk.hpp"
#include "hypharm/radial.hpp"
#include "hypharm/transform.hpp"

namespace hypharm {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Complex literal: `a`, `bi`, `a+bi`, `a-bi` (no spaces).
inline cplx parse_complex(const std::string& text) {
    if (text.empty()) throw parse_error("empty complex literal");
    std::string s = text;
    bool has_i = s.back() == 'i' || s.back() == 'I';
    if (has_i) s.pop_back();

    auto to_double = [&](const std::string& d) {
        if (d.empty() || d == "+") return 1.0;
        if (d == "-") return -1.0;
        std::size_t used = 0;
        double v;
        try {
            v = std::stod(d, &used);
        } catch (const std::exception&) {
            throw parse_error("bad complex literal: " + text);
        }
        if (used != d.size()) throw parse_error("bad complex literal: " + text);
        return v;
    };

    // split at the last +/- that is not an exponent sign and not leading
    std::size_t split = std::string::npos;
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    if (!has_i) {
        return {to_double(s), 0.0};
    }
    if (split == std::string::npos) return {0.0, to_double(s)};
    return {to_double(s.substr(0, split)), to_double(s.substr(split))};
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

inline double parse_real(const std::string& s) {
    const cplx z = parse_complex(s);
    if (z.imag() != 0.0) throw parse_error("expected a real number: " + s);
    return z.real();
}

/// Sampled two-column file: header `# tail_exponent=<p>`, rows `x value`.
inline RadialFunction read_sampled_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open sampled function file: " + path);
    std::string line;
    double tail_exponent = 0.0;
    bool have_tail = false;
    std::vector<double> xs, vs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("tail_exponent=");
            if (pos != std::string::npos) {
                tail_exponent = std::stod(line.substr(pos + 14));
                have_tail = true;
            }
            continue;
        }
        std::istringstream row(line);
        double x, v;
        if (!(row >> x >> v)) throw parse_error("bad sample row: " + line);
        xs.push_back(x);
        vs.push_back(v);
    }
    if (!have_tail)
        throw parse_error("sampled file missing `# tail_exponent=` header: " + path);
    return RadialFunction::sampled(std::move(xs), std::move(vs), tail_exponent);
}

/// Function mini-language: indicator:a:b | expdecay:alpha | blambda:re:im |
/// sampled:<path> | zero
inline RadialFunction parse_radial_function(const std::string& spec) {
    const auto parts = split(spec, ':');
    const std::string& head = parts[0];
    try {
        if (head == "indicator" && parts.size() == 3)
            return RadialFunction::indicator(std::stod(parts[1]), std::stod(parts[2]));
        if (head == "expdecay" && parts.size() == 2)
            return RadialFunction::exp_decay(std::stod(parts[1]));
        if (head == "blambda" && parts.size() == 3)
            return RadialFunction::resolvent_kernel(
                SpectralParameter{cplx(std::stod(parts[1]), std::stod(parts[2]))});
        if (head == "sampled" && parts.size() == 2) return read_sampled_function(parts[1]);
        if (head == "zero" && parts.size() == 1) return RadialFunction::zero();
    } catch (const std::invalid_argument& e) {
        throw parse_error(std::string("bad function spec `") + spec + "`: " + e.what());
    }
    throw parse_error("unknown function spec: " + spec);
}

/// Bounded-function mini-language: const:c plus any integrable spec that is
/// bounded away from x = 1 concerns (indicator, expdecay, sampled).
inline BoundedRadialFunction parse_bounded_function(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts[0] == "const" && parts.size() == 2)
        return BoundedRadialFunction::constant(parse_complex(parts[1]));
    if (parts[0] == "indicator" || parts[0] == "expdecay" || parts[0] == "sampled") {
        RadialFunction f = parse_radial_function(spec);
        double sup = 1.0;
        if (parts[0] == "expdecay") sup = std::exp(-std::stod(parts[1]));
        if (parts[0] == "sampled") {
            sup = 0.0;
            for (double x = 1.0; x <= f.support_upper(); x += 1e-3)
                sup = std::max(sup, std::abs(f(x)));
        }
        return BoundedRadialFunction::from(f, sup);
    }
    throw parse_error("unknown bounded function spec: " + spec);
}

/// Measure mini-language: `atom:zeta:w[;atom:...][;density:<fspec>]`,
/// weights are complex literals.
inline RadialMeasure parse_radial_measure(const std::string& spec) {
    std::vector<RadialMeasure::Atom> atoms;
    std::optional<RadialFunction> density;
    for (const std::string& item : split(spec, ';')) {
        if (item.empty()) continue;
        if (item.rfind("atom:", 0) == 0) {
            const auto p = split(item, ':');
            if (p.size() != 3) throw parse_error("bad atom spec: " + item);
            atoms.push_back({std::stod(p[1]), parse_complex(p[2])});
        } else if (item.rfind("density:", 0) == 0) {
            density = parse_radial_function(item.substr(8));
        } else {
            throw parse_error("unknown measure item: " + item);
        }
    }
    if (atoms.empty() && !density) throw parse_error("empty measure spec: " + spec);
    return RadialMeasure(std::move(atoms), std::move(density));
}

/// Boundary coefficients: rows `k re im`.
inline BoundaryFunction read_boundary_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open boundary coefficient file: " + path);
    BoundaryFunction b;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int k;
        double re, im;
        if (!(row >> k >> re >> im)) throw parse_error("bad coefficient row: " + line);
        b.coefficients.emplace_back(k, cplx(re, im));
    }
    return b;
}

/// Disk-function mini-language: holo:poly:c0:c1:... | conjz | poisson:<path>
/// | invgrowth
inline DiskFunction parse_disk_function(const std::string& spec) {
    const auto parts = split(spec, ':');
    if (parts[0] == "holo" && parts.size() >= 3 && parts[1] == "poly") {
        std::vector<cplx> coeffs;
        for (std::size_t i = 2; i < parts.size(); ++i)
            coeffs.push_back(parse_complex(parts[i]));
        return {[coeffs](cplx z) {
                    cplx v = 0.0;
                    for (std::size_t i = coeffs.size(); i-- > 0;) v = v * z + coeffs[i];
                    return v;
                },
                DiskFunction::Tag::holomorphic_test};
    }
    if (parts[0] == "conjz" && parts.size() == 1)
        return {[](cplx z) { return std::conj(z); }, DiskFunction::Tag::custom};
    if (parts[0] == "poisson" && parts.size() == 2)
        return poisson_disk_function(read_boundary_function(parts[1]));
    if (parts[0] == "invgrowth" && parts.size() == 1)
        return {[](cplx z) { return cplx(1.0 / (1.0 - std::norm(z)), 0.0); },
                DiskFunction::Tag::custom};
    throw parse_error("unknown disk function spec: " + spec);
}

/// Radius pair batch file: rows `r1 r2`.
inline std::vector<std::pair<double, double>> read_pair_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open pair list file: " + path);
    std::vector<std::pair<double, double>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        double r1, r2;
        if (!(row >> r1 >> r2)) throw parse_error("bad pair row: " + line);
        out.emplace_back(r1, r2);
    }
    return out;
}

} // namespace hypharm
