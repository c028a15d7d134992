#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qelliptic {

/// Fixed numeric formatting used everywhere a double reaches an output
/// stream: 12 significant digits, shortest form.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// Outcome of one named verification check. `max_abs_residual` is empty for
/// checks that hold exactly (coefficientwise zero or structural equality);
/// pass means the residual met the check's tolerance.
struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;  // insertion-ordered
    std::optional<double> max_abs_residual;                   // empty == exact-zero
    bool pass = false;
    std::int64_t runtime_ms = 0;

    void add_param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }
};

inline std::string residual_string(const VerificationReport& r) {
    return r.max_abs_residual ? format_double(*r.max_abs_residual)
                              : std::string("exact-zero");
}

inline std::string to_text(const VerificationReport& r) {
    std::string out = r.pass ? "[PASS] " : "[FAIL] ";
    out += r.suite;
    for (const auto& [k, v] : r.params) {
        out += "  " + k + "=" + v;
    }
    out += "  residual=" + residual_string(r);
    out += "  (" + std::to_string(r.runtime_ms) + " ms)";
    return out;
}

namespace detail {

inline std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += ch;
        }
    }
    return out;
}

}  // namespace detail

/// One JSON object per line; field order fixed, params in insertion order.
inline std::string to_json_line(const VerificationReport& r) {
    std::string out = "{\"suite\":\"" + detail::json_escape(r.suite) + "\",\"params\":{";
    bool first = true;
    for (const auto& [k, v] : r.params) {
        if (!first) out += ',';
        first = false;
        out += "\"" + detail::json_escape(k) + "\":\"" + detail::json_escape(v) + "\"";
    }
    out += "},\"max_abs_residual\":";
    out += r.max_abs_residual ? format_double(*r.max_abs_residual) : "\"exact-zero\"";
    out += ",\"pass\":";
    out += r.pass ? "true" : "false";
    out += ",\"runtime_ms\":" + std::to_string(r.runtime_ms) + "}";
    return out;
}

/// Wall-clock stopwatch for filling VerificationReport::runtime_ms.
class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    std::int64_t elapsed_ms() const {
        const auto d = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration_cast<std::chrono::milliseconds>(d).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

}  // namespace qelliptic
