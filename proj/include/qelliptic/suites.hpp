#pragma once

#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "qelliptic/eisenstein.hpp"
#include "qelliptic/elliptic_f.hpp"
#include "qelliptic/inversion.hpp"
#include "qelliptic/jacobi_fourier.hpp"
#include "qelliptic/report.hpp"
#include "qelliptic/trig_identity.hpp"

// Named verification suites with defaults mirroring the acceptance gate, so
// that running everything at defaults *is* the acceptance run.

namespace qelliptic::suites {

inline std::vector<double> linspace(double a, double b, std::size_t n) {
    std::vector<double> g(n);
    if (n == 1) {
        g[0] = a;
        return g;
    }
    for (std::size_t i = 0; i < n; ++i) {
        g[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return g;
}

/// start, start+step, ..., count points.
inline std::vector<double> arith_grid(double start, double step, std::size_t count) {
    std::vector<double> g(count);
    for (std::size_t i = 0; i < count; ++i) g[i] = start + step * static_cast<double>(i);
    return g;
}

/// [0, span) with n points, open at the right end.
inline std::vector<double> periodic_grid(double span, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i) g[i] = span * static_cast<double>(i) / static_cast<double>(n);
    return g;
}

inline std::vector<VerificationReport> eq1_exact(std::size_t order = 30) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "eq1-exact";
    rep.add_param("order", std::to_string(order));
    rep.add_param("harmonics", std::to_string(2 * order));
    const TrigQSeries residual = eq1_residual(order);
    if (residual.is_zero()) {
        rep.max_abs_residual.reset();
        rep.pass = true;
    } else {
        double worst = 0.0;
        const auto scan = [&worst](const QSeries& s) {
            for (std::size_t k = 0; k <= s.order(); ++k) {
                worst = std::max(worst, std::abs(to_double(s[k])));
            }
        };
        scan(residual.cot2);
        for (const auto& c : residual.cos_coeffs) scan(c);
        rep.max_abs_residual = worst;
        rep.pass = false;
    }
    rep.runtime_ms = sw.elapsed_ms();
    return {rep};
}

inline std::vector<VerificationReport> eisenstein_ode(std::size_t order = 500) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "eisenstein-ode";
    rep.add_param("order", std::to_string(order));
    const OdeResiduals res = ode_residuals(order);
    if (res.for_p.is_zero() && res.for_q.is_zero() && res.for_r.is_zero()) {
        rep.max_abs_residual.reset();
        rep.pass = true;
    } else {
        double worst = 0.0;
        for (const QSeries* s : {&res.for_p, &res.for_q, &res.for_r}) {
            for (std::size_t k = 0; k <= s->order(); ++k) {
                worst = std::max(worst, std::abs(to_double((*s)[k])));
            }
        }
        rep.max_abs_residual = worst;
        rep.pass = false;
    }
    rep.runtime_ms = sw.elapsed_ms();
    return {rep};
}

inline std::vector<VerificationReport> inversion_suite(int level, double tol_roundtrip = 1e-8,
                                                       double tol_symmetry = 1e-9) {
    const InversionLevel lvl = inversion_level(level);
    const std::vector<double> grid =
        level == 4 ? arith_grid(0.001, 0.01, 26) : arith_grid(0.001, 0.01, 21);
    return {roundtrip_check(lvl, grid, tol_roundtrip), symmetry_point_check(lvl, tol_symmetry)};
}

inline std::vector<VerificationReport> moreover_num_suite(double tol = 1e-9) {
    std::vector<VerificationReport> reps;
    for (int level : {4, 3}) {
        const InversionLevel lvl = inversion_level(level);
        for (double q : {0.01, 0.05, 0.1}) {
            reps.push_back(moreover_check_num(lvl, q, tol));
        }
    }
    return reps;
}

inline std::vector<VerificationReport> moreover_exact_suite(std::size_t order = 60) {
    return {moreover_check_exact(inversion_level(4), order),
            moreover_check_exact(inversion_level(3), order)};
}

inline std::vector<VerificationReport> monotonic_suite() {
    const auto grid4 = linspace(0.001, 0.9, 1000);
    const auto grid3 = linspace(0.001, 0.6, 1000);
    return {monotonicity_scan(inversion_level(4), grid4, 1e-14),
            monotonicity_scan(inversion_level(3), grid3, 1e-14)};
}

inline std::vector<VerificationReport> jacobian_deriv_suite(double tol = 1e-10) {
    std::vector<VerificationReport> reps;
    const auto grid = periodic_grid(4.0 * std::numbers::pi, 64);
    for (double y : {0.5, 1.0, 2.0}) {
        reps.push_back(derivative_identity_check(JacobiContext::from_y(y), grid, tol));
    }
    return reps;
}

inline std::vector<VerificationReport> pythagorean_suite(double tol = 1e-9,
                                                         double refit_tol = 1e-8) {
    std::vector<VerificationReport> reps;
    const auto grid = periodic_grid(4.0 * std::numbers::pi, 64);
    for (double y : {0.5, 1.0, 2.0}) {
        const JacobiContext ctx = JacobiContext::from_y(y);
        reps.push_back(pythagorean_probe(ctx, {0.7, 2.1}, grid, tol));

        Stopwatch sw;
        VerificationReport stab;
        stab.suite = "pythagorean/refit-stability";
        stab.add_param("y", format_double(y));
        stab.add_param("fit_pairs", "0.7,2.1 vs 1.1,2.6");
        stab.add_param("tol", format_double(refit_tol));
        const PythagoreanFit a = pythagorean_fit(ctx, 0.7, 2.1);
        const PythagoreanFit b = pythagorean_fit(ctx, 1.1, 2.6);
        const double drift = std::max({std::abs(a.alpha - b.alpha), std::abs(a.beta - b.beta),
                                       std::abs(a.gamma - b.gamma), std::abs(a.delta - b.delta)});
        stab.max_abs_residual = drift;
        stab.pass = drift <= refit_tol;
        stab.runtime_ms = sw.elapsed_ms();
        reps.push_back(stab);
    }
    return reps;
}

inline std::vector<VerificationReport> quasi_period_suite(double tol = 1e-10) {
    std::vector<VerificationReport> reps;
    const auto grid = linspace(0.15, 2.0 * std::numbers::pi - 0.15, 32);
    for (double q : {0.01, 0.05, 0.1}) {
        reps.push_back(quasi_period_check(FContext::from_q(q), grid, tol));
    }
    return reps;
}

inline std::vector<VerificationReport> fprime_elliptic_suite(double tol = 1e-10) {
    std::vector<VerificationReport> reps;
    const auto grid = linspace(0.15, 2.0 * std::numbers::pi - 0.15, 32);
    for (double q : {0.01, 0.05, 0.1}) {
        reps.push_back(fprime_elliptic_check(FContext::from_q(q), grid, tol));
    }
    return reps;
}

/// Continuation consistency plus numeric residuals of the squared-cotangent
/// identity, at real and in-strip complex angles.
inline std::vector<VerificationReport> eq1_numeric_suite(double tol_real = 1e-10,
                                                         double tol_complex = 1e-9,
                                                         double tol_overlap = 1e-11) {
    std::vector<VerificationReport> reps;
    for (double q : {0.02, 0.05, 0.1}) {
        reps.push_back(continuation_overlap_check(FContext::from_q(q), 20, 20260809u, tol_overlap));
    }
    const std::vector<double> real_thetas = {0.4, 0.7, 1.0, 1.3, 2.9};
    for (double q : {0.01, 0.05, 0.1}) {
        const FContext ctx = FContext::from_q(q);
        Stopwatch sw;
        VerificationReport rep;
        rep.suite = "eq1-numeric/real-theta";
        rep.add_param("q", format_double(q));
        rep.add_param("thetas", std::to_string(real_thetas.size()));
        rep.add_param("tol", format_double(tol_real));
        double worst = 0.0;
        for (double t : real_thetas) {
            const auto sub = eq1_numeric_check(ctx, {t, 0.0}, tol_real);
            worst = std::max(worst, sub.max_abs_residual.value_or(0.0));
        }
        rep.max_abs_residual = worst;
        rep.pass = worst <= tol_real;
        rep.runtime_ms = sw.elapsed_ms();
        reps.push_back(rep);
    }
    {
        const FContext ctx = FContext::from_q(0.05);
        const std::vector<std::complex<double>> complex_thetas = {
            {1.0, 0.5}, {0.7, 1.0}, {2.0, -0.8}};
        Stopwatch sw;
        VerificationReport rep;
        rep.suite = "eq1-numeric/complex-theta";
        rep.add_param("q", "0.05");
        rep.add_param("thetas", std::to_string(complex_thetas.size()));
        rep.add_param("tol", format_double(tol_complex));
        double worst = 0.0;
        for (const auto& t : complex_thetas) {
            const auto sub = eq1_numeric_check(ctx, t, tol_complex);
            worst = std::max(worst, sub.max_abs_residual.value_or(0.0));
        }
        rep.max_abs_residual = worst;
        rep.pass = worst <= tol_complex;
        rep.runtime_ms = sw.elapsed_ms();
        reps.push_back(rep);
    }
    return reps;
}

}  // namespace qelliptic::suites
