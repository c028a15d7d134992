// Command-line front end: exact series emission, function evaluation, nome
// inversion, and named verification suites with machine-readable reports.

#include <CLI11.hpp>

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qelliptic/qelliptic.hpp"

namespace {

using qelliptic::VerificationReport;

double default_tol() {
    if (const char* env = std::getenv("ELLIPTIC_DEFAULT_TOL")) {
        const double v = std::atof(env);
        if (v > 0.0) return v;
    }
    return 1e-10;
}

std::complex<double> parse_theta(const std::string& text) {
    if (text.empty()) return {0.0, 0.0};
    if (text.back() != 'i') {
        return {std::stod(text), 0.0};
    }
    const std::string body = text.substr(0, text.size() - 1);
    // split at the last sign that is not an exponent sign and not leading
    for (std::size_t pos = body.size(); pos-- > 1;) {
        const char ch = body[pos];
        if ((ch == '+' || ch == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
            const double re = std::stod(body.substr(0, pos));
            const double im = std::stod(body.substr(pos));
            return {re, im};
        }
    }
    return {0.0, std::stod(body)};  // pure imaginary
}

std::string format_value(std::complex<double> v) {
    if (v.imag() == 0.0) return qelliptic::format_double(v.real());
    const std::string sign = v.imag() > 0.0 ? "+" : "";
    return qelliptic::format_double(v.real()) + sign + qelliptic::format_double(v.imag()) + "i";
}

int emit_series(const std::string& name, long order, const std::string& format) {
    using qelliptic::BigRational;
    using qelliptic::QSeries;
    if (order < 0) {
        std::fprintf(stderr, "series: order must be nonnegative\n");
        return 2;
    }
    const auto n = static_cast<std::size_t>(order);
    std::optional<QSeries> series;
    try {
        if (name == "P") {
            series = qelliptic::eisenstein_series(qelliptic::Eisenstein::P, n);
        } else if (name == "Q") {
            series = qelliptic::eisenstein_series(qelliptic::Eisenstein::Q, n);
        } else if (name == "R") {
            series = qelliptic::eisenstein_series(qelliptic::Eisenstein::R, n);
        } else if (name == "theta3") {
            series = qelliptic::theta3_series(n);
        } else if (name == "cubic_a") {
            series = qelliptic::cubic_a_series(n);
        } else if (name == "x4" || name == "x3") {
            if (order < 1) {
                std::fprintf(stderr, "series: %s needs order >= 1\n", name.c_str());
                return 2;
            }
            series = qelliptic::x_series(name == "x4" ? 4 : 3, n);
        } else if (name == "2f1_half" || name == "2f1_third") {
            const qelliptic::HypParams p =
                name == "2f1_half" ? qelliptic::inversion_level(4).hyp
                                   : qelliptic::inversion_level(3).hyp;
            series = QSeries(qelliptic::hyp2f1_taylor(p, n));
        } else {
            std::fprintf(stderr, "series: unknown name '%s'\n", name.c_str());
            return 2;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "series: %s\n", e.what());
        return 2;
    }
    if (format == "json") {
        std::string out = "[";
        for (std::size_t k = 0; k <= series->order(); ++k) {
            if (k > 0) out += ",";
            out += "\"" + qelliptic::fraction_string((*series)[k]) + "\"";
        }
        out += "]";
        std::printf("%s\n", out.c_str());
    } else {
        std::fputs(qelliptic::to_text(*series).c_str(), stdout);
    }
    return 0;
}

using SuiteFn = std::function<std::vector<VerificationReport>()>;

std::vector<std::pair<std::string, SuiteFn>> suite_table(std::optional<long> order,
                                                         std::optional<double> tol) {
    namespace suites = qelliptic::suites;
    const auto ord = [&](std::size_t dflt) {
        return order ? static_cast<std::size_t>(*order) : dflt;
    };
    const auto tl = [&](double dflt) { return tol ? *tol : dflt; };
    // the 1e-10 defaults track the global numeric tolerance knob
    const double global = default_tol();
    return {
        {"eq1-exact", [=] { return suites::eq1_exact(ord(30)); }},
        {"eq1-numeric",
         [=] { return suites::eq1_numeric_suite(tl(global), tl(1e-9), tl(1e-11)); }},
        {"eisenstein-ode", [=] { return suites::eisenstein_ode(ord(500)); }},
        {"inversion-level4", [=] { return suites::inversion_suite(4, tl(1e-8), tl(1e-9)); }},
        {"inversion-level3", [=] { return suites::inversion_suite(3, tl(1e-8), tl(1e-9)); }},
        {"moreover-num", [=] { return suites::moreover_num_suite(tl(1e-9)); }},
        {"moreover-exact", [=] { return suites::moreover_exact_suite(ord(60)); }},
        {"monotonic", [=] { return suites::monotonic_suite(); }},
        {"jacobian-deriv", [=] { return suites::jacobian_deriv_suite(tl(global)); }},
        {"pythagorean", [=] { return suites::pythagorean_suite(tl(1e-9), 1e-8); }},
        {"quasi-period", [=] { return suites::quasi_period_suite(tl(global)); }},
        {"fprime-elliptic", [=] { return suites::fprime_elliptic_suite(tl(global)); }},
    };
}

int run_verify(const std::string& suite, std::optional<long> order, std::optional<double> tol,
               bool json, bool serial) {
    const auto table = suite_table(order, tol);
    std::vector<SuiteFn> selected;
    if (suite == "all") {
        for (const auto& [name, fn] : table) selected.push_back(fn);
    } else {
        for (const auto& [name, fn] : table) {
            if (name == suite) selected.push_back(fn);
        }
        if (selected.empty()) {
            std::fprintf(stderr, "verify: unknown suite '%s'\n", suite.c_str());
            return 2;
        }
    }

    bool all_pass = true;
    const auto emit = [&](const std::vector<VerificationReport>& reps) {
        for (const auto& r : reps) {
            std::printf("%s\n", json ? qelliptic::to_json_line(r).c_str()
                                     : qelliptic::to_text(r).c_str());
            std::fflush(stdout);
            all_pass = all_pass && r.pass;
        }
    };

    if (serial || selected.size() == 1) {
        for (const auto& fn : selected) emit(fn());
    } else {
        // checks are pure; run suites concurrently but print in fixed order
        std::vector<std::future<std::vector<VerificationReport>>> futures;
        futures.reserve(selected.size());
        for (const auto& fn : selected) {
            futures.push_back(std::async(std::launch::async, fn));
        }
        for (auto& f : futures) emit(f.get());
    }
    return all_pass ? 0 : 1;
}

int run_eval(const std::string& fn, std::optional<double> q_opt, std::optional<double> y_opt,
             const std::string& theta_text, double tol) {
    if (q_opt.has_value() == y_opt.has_value()) {
        std::fprintf(stderr, "eval: provide exactly one of --q or --y\n");
        return 2;
    }
    try {
        const std::complex<double> theta = parse_theta(theta_text);
        const bool jacobi_fn = fn == "S" || fn == "C" || fn == "C1";
        std::complex<double> value;
        if (jacobi_fn) {
            const qelliptic::JacobiContext ctx = q_opt
                                                     ? qelliptic::JacobiContext::from_q(*q_opt)
                                                     : qelliptic::JacobiContext::from_y(*y_opt);
            const qelliptic::JacobiFn jf = fn == "S"   ? qelliptic::JacobiFn::S
                                           : fn == "C" ? qelliptic::JacobiFn::C
                                                       : qelliptic::JacobiFn::C1;
            value = qelliptic::jacobi_eval(jf, theta, ctx, tol);
        } else if (fn == "f") {
            const double q = q_opt ? *q_opt : std::exp(-*y_opt);
            value = qelliptic::f_strip(theta, qelliptic::FContext::from_q(q), tol);
        } else {
            const double q = q_opt ? *q_opt : std::exp(-*y_opt);
            if (fn == "theta3") {
                value = qelliptic::theta_num(qelliptic::ThetaKind::theta3, q, tol);
            } else if (fn == "cubic_a") {
                value = qelliptic::theta_num(qelliptic::ThetaKind::cubic_a, q, tol);
            } else if (fn == "x4") {
                value = qelliptic::x_num(4, q, tol);
            } else if (fn == "x3") {
                value = qelliptic::x_num(3, q, tol);
            } else {
                std::fprintf(stderr, "eval: unknown function '%s'\n", fn.c_str());
                return 2;
            }
        }
        std::printf("%s  tol=%s\n", format_value(value).c_str(),
                    qelliptic::format_double(tol).c_str());
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "eval: %s\n", e.what());
        return 1;
    }
}

int run_invert(int level, double x, double tol) {
    try {
        const double q = qelliptic::q_of_x(qelliptic::inversion_level(level), x, tol);
        std::printf("%s  tol=%s\n", qelliptic::format_double(q).c_str(),
                    qelliptic::format_double(tol).c_str());
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "invert: %s\n", e.what());
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and numeric verification toolkit for the classical "
                 "q-series and elliptic-function identities"};
    app.require_subcommand(1);

    auto* series_cmd = app.add_subcommand("series", "emit exact series coefficients");
    std::string series_name;
    long series_order = 0;
    std::string series_format = "text";
    series_cmd->add_option("name", series_name,
                           "P|Q|R|theta3|cubic_a|x4|x3|2f1_half|2f1_third")
        ->required();
    series_cmd->add_option("--order", series_order, "truncation order")->required();
    series_cmd->add_option("--format", series_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    std::string suite_name;
    std::optional<long> verify_order;
    std::optional<double> verify_tol;
    bool verify_json = false;
    bool verify_serial = false;
    verify_cmd->add_option("suite", suite_name, "suite name or 'all'")->required();
    verify_cmd->add_option("--order", verify_order, "override truncation order");
    verify_cmd->add_option("--tol", verify_tol, "override residual tolerance");
    verify_cmd->add_flag("--json", verify_json, "one JSON object per report line");
    verify_cmd->add_flag("--serial", verify_serial, "force sequential execution");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a function numerically");
    std::string eval_fn;
    std::optional<double> eval_q, eval_y;
    std::string eval_theta = "0";
    std::optional<double> eval_tol;
    eval_cmd->add_option("--fn", eval_fn, "S|C|C1|f|theta3|cubic_a|x4|x3")->required();
    eval_cmd->add_option("--q", eval_q, "nome in [0,1)");
    eval_cmd->add_option("--y", eval_y, "decay parameter, q = e^-y");
    eval_cmd->add_option("--theta", eval_theta, "angle, re or re+imi");
    eval_cmd->add_option("--tol", eval_tol, "evaluation tolerance");

    auto* invert_cmd = app.add_subcommand("invert", "invert the modulus map q(x)");
    int invert_level = 4;
    double invert_x = 0.5;
    std::optional<double> invert_tol;
    invert_cmd->add_option("--level", invert_level, "3 or 4")->required();
    invert_cmd->add_option("--x", invert_x, "modulus in (0,1)")->required();
    invert_cmd->add_option("--tol", invert_tol, "evaluation tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (series_cmd->parsed()) {
        return emit_series(series_name, series_order, series_format);
    }
    if (verify_cmd->parsed()) {
        return run_verify(suite_name, verify_order, verify_tol, verify_json, verify_serial);
    }
    if (eval_cmd->parsed()) {
        return run_eval(eval_fn, eval_q, eval_y, eval_theta, eval_tol.value_or(default_tol()));
    }
    if (invert_cmd->parsed()) {
        if (invert_level != 3 && invert_level != 4) {
            std::fprintf(stderr, "invert: level must be 3 or 4\n");
            return 2;
        }
        return run_invert(invert_level, invert_x, invert_tol.value_or(default_tol()));
    }
    return 2;
}
