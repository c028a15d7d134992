#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

#include "qelliptic/detail/tails.hpp"
#include "qelliptic/report.hpp"

namespace qelliptic {

/// Evaluation context for the Fourier-series elliptic functions: decay
/// parameter y > 0 with nome q = e^{-y}; the series converge absolutely on
/// the strip |Im theta| < y.
struct JacobiContext {
    double y;
    double q;

    static JacobiContext from_y(double y) {
        if (!(y > 0.0)) {
            throw std::domain_error("invalid decay parameter: y must be positive");
        }
        return JacobiContext{y, std::exp(-y)};
    }

    static JacobiContext from_q(double q) {
        if (!(q > 0.0 && q < 1.0)) {
            throw std::domain_error("nome out of range: q must lie in (0,1)");
        }
        return JacobiContext{-std::log(q), q};
    }
};

enum class JacobiFn { S, C, C1, dS, dC, dC1 };

/// Fourier-series elliptic functions and their termwise theta-derivatives:
///   S  = sum_{n>=0} sin((n+1/2) theta) / sinh((n+1/2) y)
///   C  = sum_{n>=0} cos((n+1/2) theta) / cosh((n+1/2) y)
///   C1 = 1/2 + sum_{n>=1} cos(n theta) / cosh(n y)
/// Truncation is certified by the termwise bound e^{|Im theta| - y} per unit
/// frequency inside the strip.
inline std::complex<double> jacobi_eval(JacobiFn fn, std::complex<double> theta,
                                        const JacobiContext& ctx, double tol = 1e-13) {
    if (!(tol > 0.0)) {
        throw std::domain_error("invalid tolerance: tol must be positive");
    }
    const double im = std::abs(theta.imag());
    if (!(im < ctx.y)) {
        throw std::domain_error("outside convergence strip: requires |Im theta| < y");
    }
    const double delta = ctx.y - im;           // decay per unit frequency
    const double rho = std::exp(-delta);       // ratio per whole step in n
    // 1/sinh(t), 1/cosh(t) <= 2 e^{-t} / (1 - e^{-y}) for t >= y/2
    const double lead = 2.0 / (1.0 - std::exp(-ctx.y));

    const bool half_freq = fn == JacobiFn::S || fn == JacobiFn::C ||
                           fn == JacobiFn::dS || fn == JacobiFn::dC;
    const bool derivative = fn == JacobiFn::dS || fn == JacobiFn::dC || fn == JacobiFn::dC1;

    std::complex<double> acc = fn == JacobiFn::C1 ? 0.5 : 0.0;
    const long n_start = half_freq ? 0 : 1;
    for (long n = n_start;; ++n) {
        const double freq = half_freq ? (n + 0.5) : static_cast<double>(n);
        std::complex<double> term;
        switch (fn) {
            case JacobiFn::S:
                term = std::sin(freq * theta) / std::sinh(freq * ctx.y);
                break;
            case JacobiFn::C:
                term = std::cos(freq * theta) / std::cosh(freq * ctx.y);
                break;
            case JacobiFn::C1:
                term = std::cos(freq * theta) / std::cosh(freq * ctx.y);
                break;
            case JacobiFn::dS:
                term = freq * std::cos(freq * theta) / std::sinh(freq * ctx.y);
                break;
            case JacobiFn::dC:
                term = -freq * std::sin(freq * theta) / std::cosh(freq * ctx.y);
                break;
            case JacobiFn::dC1:
                term = -freq * std::sin(freq * theta) / std::cosh(freq * ctx.y);
                break;
        }
        acc += term;
        const double next_freq = freq + 1.0;
        double tail = lead * std::exp(-next_freq * delta);
        tail = derivative ? tail * detail::linear_weighted_tail(next_freq, rho)
                          : tail / (1.0 - rho);
        if (tail < tol) break;
    }
    return acc;
}

/// Residual of the three differentiation formulas
///   dS/dtheta = C C1,  dC/dtheta = -S C1,  dC1/dtheta = -S C
/// maximized over the grid.
inline VerificationReport derivative_identity_check(const JacobiContext& ctx,
                                                    std::span<const double> theta_grid,
                                                    double tol) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "jacobian-deriv";
    rep.add_param("y", format_double(ctx.y));
    rep.add_param("grid_points", std::to_string(theta_grid.size()));
    rep.add_param("tol", format_double(tol));
    double worst = 0.0;
    for (double t : theta_grid) {
        const std::complex<double> theta(t, 0.0);
        const auto s = jacobi_eval(JacobiFn::S, theta, ctx);
        const auto c = jacobi_eval(JacobiFn::C, theta, ctx);
        const auto c1 = jacobi_eval(JacobiFn::C1, theta, ctx);
        worst = std::max(worst, std::abs(jacobi_eval(JacobiFn::dS, theta, ctx) - c * c1));
        worst = std::max(worst, std::abs(jacobi_eval(JacobiFn::dC, theta, ctx) + s * c1));
        worst = std::max(worst, std::abs(jacobi_eval(JacobiFn::dC1, theta, ctx) + s * c));
    }
    rep.max_abs_residual = worst;
    rep.pass = worst <= tol;
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

/// Constants of the two Pythagorean-type relations fitted from two angles:
///   C(theta)^2  + alpha S(theta)^2 = beta
///   C1(theta)^2 + gamma S(theta)^2 = delta
struct PythagoreanFit {
    double alpha;
    double beta;
    double gamma;
    double delta;
};

inline PythagoreanFit pythagorean_fit(const JacobiContext& ctx, double theta1, double theta2) {
    const auto value = [&](JacobiFn fn, double t) {
        return jacobi_eval(fn, {t, 0.0}, ctx).real();
    };
    const double s1 = value(JacobiFn::S, theta1), s2 = value(JacobiFn::S, theta2);
    const double ds2 = s1 * s1 - s2 * s2;
    if (s1 == 0.0 || s2 == 0.0 || std::abs(ds2) < 1e-12 * std::max(s1 * s1, s2 * s2)) {
        throw std::domain_error("degenerate fit: needs fit points with distinct nonzero S^2");
    }
    const double c1 = value(JacobiFn::C, theta1), c2 = value(JacobiFn::C, theta2);
    const double d1 = value(JacobiFn::C1, theta1), d2 = value(JacobiFn::C1, theta2);
    PythagoreanFit fit{};
    fit.alpha = (c2 * c2 - c1 * c1) / ds2;
    fit.beta = c1 * c1 + fit.alpha * s1 * s1;
    fit.gamma = (d2 * d2 - d1 * d1) / ds2;
    fit.delta = d1 * d1 + fit.gamma * s1 * s1;
    return fit;
}

/// Empirical probe of the Pythagorean analogues: the relations hold with
/// *some* q-dependent constants, so fitting them at two angles must make
/// the combinations theta-independent across the whole check grid.
inline VerificationReport pythagorean_probe(const JacobiContext& ctx,
                                            std::pair<double, double> fit_thetas,
                                            std::span<const double> check_grid, double tol) {
    Stopwatch sw;
    VerificationReport rep;
    rep.suite = "pythagorean";
    rep.add_param("y", format_double(ctx.y));
    rep.add_param("fit_thetas", format_double(fit_thetas.first) + "," +
                                    format_double(fit_thetas.second));
    rep.add_param("grid_points", std::to_string(check_grid.size()));
    rep.add_param("tol", format_double(tol));
    const PythagoreanFit fit = pythagorean_fit(ctx, fit_thetas.first, fit_thetas.second);
    rep.add_param("alpha", format_double(fit.alpha));
    rep.add_param("beta", format_double(fit.beta));
    rep.add_param("gamma", format_double(fit.gamma));
    rep.add_param("delta", format_double(fit.delta));
    double worst = 0.0;
    for (double t : check_grid) {
        const std::complex<double> theta(t, 0.0);
        const double s = jacobi_eval(JacobiFn::S, theta, ctx).real();
        const double c = jacobi_eval(JacobiFn::C, theta, ctx).real();
        const double c1 = jacobi_eval(JacobiFn::C1, theta, ctx).real();
        worst = std::max(worst, std::abs(c * c + fit.alpha * s * s - fit.beta));
        worst = std::max(worst, std::abs(c1 * c1 + fit.gamma * s * s - fit.delta));
    }
    rep.max_abs_residual = worst;
    rep.pass = worst <= tol;
    rep.runtime_ms = sw.elapsed_ms();
    return rep;
}

}  // namespace qelliptic
