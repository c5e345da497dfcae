// Deterministic report writer for the CLI: line-oriented `key = value` with
// `[section]` headers, plus a CSV mode for grid-shaped output.  All numbers
// are printed with 12 significant digits so reruns are byte-identical.
#pragma once

#include <complex>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace hypharm {

inline std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

inline std::string fmt_complex(std::complex<double> z) {
    std::string s = fmt_real(z.real());
    s += (z.imag() < 0 || std::signbit(z.imag())) ? "" : "+";
    s += fmt_real(z.imag());
    s += "i";
    return s;
}

class ReportWriter {
public:
    explicit ReportWriter(std::ostream& out, bool csv = false) : out_(out), csv_(csv) {}

    bool csv_mode() const { return csv_; }

    void section(const std::string& name) {
        if (!csv_) out_ << "[" << name << "]\n";
    }
    void kv(const std::string& key, const std::string& value) {
        if (csv_)
            out_ << "# " << key << " = " << value << "\n";
        else
            out_ << key << " = " << value << "\n";
    }
    void kv(const std::string& key, const char* value) { kv(key, std::string(value)); }
    void kv(const std::string& key, double value) { kv(key, fmt_real(value)); }
    void kv(const std::string& key, int value) { kv(key, std::to_string(value)); }
    void kv(const std::string& key, bool value) {
        kv(key, std::string(value ? "true" : "false"));
    }
    void kv(const std::string& key, std::complex<double> value) {
        kv(key, fmt_complex(value));
    }

    void table_header(const std::vector<std::string>& cols) {
        cols_ = cols;
        row_index_ = 0;
        if (csv_) {
            for (std::size_t i = 0; i < cols.size(); ++i)
                out_ << (i ? "," : "") << cols[i];
            out_ << "\n";
        }
    }
    void table_row(const std::vector<std::string>& vals) {
        if (csv_) {
            for (std::size_t i = 0; i < vals.size(); ++i)
                out_ << (i ? "," : "") << vals[i];
            out_ << "\n";
        } else {
            for (std::size_t i = 0; i < vals.size() && i < cols_.size(); ++i)
                out_ << "row" << row_index_ << "." << cols_[i] << " = " << vals[i]
                     << "\n";
        }
        ++row_index_;
    }

private:
    std::ostream& out_;
    bool csv_;
    std::vector<std::string> cols_;
    int row_index_ = 0;
};

} // namespace hypharm
