#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qelliptic/hyper2f1.hpp"
#include "qelliptic/qseries.hpp"
#include "qelliptic/report.hpp"
#include "qelliptic/theta.hpp"

namespace qelliptic {

/// One inversion theory: the modular level, the constant in the exponent of
/// the inverse map, and the hypergeometric parameter set.
struct InversionLevel {
    int level;        // 3 or 4
    double constant;  // pi for level 4, 2 pi / sqrt(3) for level 3
    HypParams hyp;
};

inline InversionLevel inversion_level(int level) {
    if (level == 4) {
        return {4, std::numbers::pi, {BigRational(1, 2), BigRational(1, 2), BigRational(1)}};
    }
    if (level == 3) {
        return {3, 2.0 * std::numbers::pi / std::sqrt(3.0),
                {BigRational(1, 3), BigRational(2, 3), BigRational(1)}};
    }
    throw std::invalid_argument("inversion_level: unknown level");
}

/// The explicit inverse of the modulus map:
///   q = exp(-constant * F(1-x) / F(x)),  F = 2F1(hyp; .)
inline double q_of_x(const InversionLevel& lvl, double x, double tol = 1e-13) {
    if (!(x > 0.0 && x < 1.0)) {
        throw std::domain_error("modulus out of range: x must lie in (0,1)");
    }
    const double num = hyp2f1_num(lvl.hyp, 1.0 - x, tol);
    const double den = hyp2f1_num(lvl.hyp, x, tol);
    return std::exp(-lvl.constant * num / den);
}

namespace detail {

inline std::string grid_string(std::span<const double> grid) {
    if (grid.empty()) return "(empty)";
    if (grid.size() == 1) return format_double(grid.front());
    return format_double(grid.front()) + ".." + format_double(grid.back()) + " (" +
           std::to_string(grid.size()) + " pts)";
}

}  // namespace detail

/// max over the grid of |q(x(q)) - q|, composing the two independent
/// implementations. Mathematical failures are reported, never thrown.
inline VerificationReport roundtrip_check(const InversionLevel& lvl,
                                          std::span<const double> q_grid, double tol) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "inversion-level" + std::to_string(lvl.level) + "/roundtrip";
    rep.add_param("grid", detail::grid_string(q_grid));
    rep.add_param("tol", format_double(tol));
    double worst = 0.0;
    bool ok = true;
    for (double q : q_grid) {
        try {
            const double x = x_num(lvl.level, q, 1e-14);
            worst = std::max(worst, std::abs(q_of_x(lvl, x) - q));
        } catch (const std::exception& e) {
            ok = false;
            rep.add_param("error", e.what());
            break;
        }
    }
    rep.max_abs_residual = worst;
    rep.pass = ok && worst <= tol;
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

/// The symmetry point x = 1/2, where F(1-x) = F(x) cancels and the inverse
/// map collapses to exp(-constant).
inline VerificationReport symmetry_point_check(const InversionLevel& lvl, double tol) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "inversion-level" + std::to_string(lvl.level) + "/symmetry-point";
    rep.add_param("x", "0.5");
    rep.add_param("tol", format_double(tol));
    const double expected = std::exp(-lvl.constant);
    rep.add_param("closed_form", format_double(expected));
    const double residual = std::abs(q_of_x(lvl, 0.5) - expected);
    rep.max_abs_residual = residual;
    rep.pass = residual <= tol;
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

/// Numeric check of the hypergeometric-theta identity at one nome:
///   level 4: 2F1(1/2,1/2;1;x4(q)) = theta3(q)^2
///   level 3: 2F1(1/3,2/3;1;x3(q)) = a(q)
inline VerificationReport moreover_check_num(const InversionLevel& lvl, double q, double tol) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "moreover-num/level" + std::to_string(lvl.level);
    rep.add_param("q", format_double(q));
    rep.add_param("tol", format_double(tol));
    double residual = 0.0;
    bool ok = true;
    try {
        const double x = x_num(lvl.level, q, 1e-14);
        const double lhs = hyp2f1_num(lvl.hyp, x);
        double rhs = 0.0;
        if (lvl.level == 4) {
            const double t3 = theta_num(ThetaKind::theta3, q, 1e-15);
            rhs = t3 * t3;
        } else {
            rhs = theta_num(ThetaKind::cubic_a, q, 1e-15);
        }
        residual = std::abs(lhs - rhs);
    } catch (const std::exception& e) {
        ok = false;
        rep.add_param("error", e.what());
    }
    rep.max_abs_residual = residual;
    rep.pass = ok && residual <= tol;
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

/// The same identity as exact formal q-series through the given order:
/// composing the 2F1 Taylor coefficients with the modulus series must
/// reproduce theta3^2 (level 4) or a(q) (level 3) coefficientwise.
inline VerificationReport moreover_check_exact(const InversionLevel& lvl, std::size_t order) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "moreover-exact/level" + std::to_string(lvl.level);
    rep.add_param("order", std::to_string(order));
    const auto taylor = hyp2f1_taylor(lvl.hyp, order);
    const QSeries composed = compose(taylor, x_series(lvl.level, order));
    const QSeries target = lvl.level == 4 ? pow(theta3_series(order), 2)
                                          : cubic_a_series(order);
    const QSeries residual = composed - target;
    if (residual.is_zero()) {
        rep.max_abs_residual.reset();
        rep.pass = true;
    } else {
        double worst = 0.0;
        for (std::size_t k = 0; k <= residual.order(); ++k) {
            worst = std::max(worst, std::abs(to_double(residual[k])));
        }
        rep.max_abs_residual = worst;
        rep.pass = false;
    }
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

/// Strict monotonicity of the modulus along an increasing nome grid.
/// Where x saturates toward 1 in binary64 (level 4 beyond q ~ 0.78) the
/// comparison switches to the complement 1 - x4 = (theta4/theta3)^4, which
/// keeps full relative precision; x increases iff the complement decreases.
inline VerificationReport monotonicity_scan(const InversionLevel& lvl,
                                            std::span<const double> grid, double tol) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "monotonic/level" + std::to_string(lvl.level);
    rep.add_param("grid", detail::grid_string(grid));
    std::vector<double> xs(grid.size()), comps(grid.size(), 1.0);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        xs[i] = x_num(lvl.level, grid[i], tol);
        if (lvl.level == 4) comps[i] = x4_complement_num(grid[i], tol);
    }
    std::size_t violations = 0;
    bool in_range = true;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const bool below_one = lvl.level == 4 ? comps[i] > 0.0 : xs[i] < 1.0;
        if (!(xs[i] > 0.0) || !below_one) in_range = false;
    }
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        bool strict;
        if (lvl.level == 4 && std::min(comps[i], comps[i + 1]) < 0.5) {
            strict = comps[i + 1] < comps[i];
        } else {
            strict = xs[i + 1] > xs[i];
        }
        if (!strict) ++violations;
    }
    rep.add_param("violations", std::to_string(violations));
    rep.add_param("in_range", in_range ? "yes" : "no");
    rep.max_abs_residual = static_cast<double>(violations);
    rep.pass = violations == 0 && in_range && grid.size() >= 2;
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

}  // namespace qelliptic
