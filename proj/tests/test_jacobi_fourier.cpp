#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "qelliptic/jacobi_fourier.hpp"
#include "qelliptic/suites.hpp"

using qelliptic::JacobiContext;
using qelliptic::JacobiFn;
using std::complex;

namespace {

double eval_real(JacobiFn fn, double theta, const JacobiContext& ctx) {
    return qelliptic::jacobi_eval(fn, {theta, 0.0}, ctx).real();
}

// test-local partial-sum oracles
double s_oracle(double theta, double y, int terms) {
    double acc = 0.0;
    for (int n = 0; n < terms; ++n) {
        const double f = n + 0.5;
        acc += std::sin(f * theta) / std::sinh(f * y);
    }
    return acc;
}

double c1_oracle(double theta, double y, int terms) {
    double acc = 0.5;
    for (int n = 1; n <= terms; ++n) {
        acc += std::cos(n * theta) / std::cosh(n * y);
    }
    return acc;
}

}  // namespace

TEST_CASE("odd function vanishes at the origin", "[jacobi-fourier]") {
    const auto ctx = JacobiContext::from_y(2.0);
    CHECK(std::abs(qelliptic::jacobi_eval(JacobiFn::S, {0.0, 0.0}, ctx)) == 0.0);
}

TEST_CASE("values at pinned points match partial-sum oracles", "[jacobi-fourier]") {
    const auto ctx = JacobiContext::from_y(2.0);
    // alternating sum 1/sinh(1) - 1/sinh(3) + ... = 0.7629667...
    const double s_pi = s_oracle(std::numbers::pi, 2.0, 40);
    CHECK(eval_real(JacobiFn::S, std::numbers::pi, ctx) == Catch::Approx(s_pi).margin(1e-12));
    CHECK(s_pi == Catch::Approx(0.7629667).margin(1e-5));

    // 1/2 + sum 1/cosh(2n) = 0.8081546...
    const double c1_0 = c1_oracle(0.0, 2.0, 60);
    CHECK(eval_real(JacobiFn::C1, 0.0, ctx) == Catch::Approx(c1_0).margin(1e-12));
    CHECK(c1_0 == Catch::Approx(0.8081546).margin(1e-5));
}

TEST_CASE("strip violations and bad parameters are rejected", "[jacobi-fourier]") {
    const auto ctx = JacobiContext::from_y(1.0);
    CHECK_THROWS_WITH(qelliptic::jacobi_eval(JacobiFn::C, {0.3, 1.2}, ctx),
                      Catch::Matchers::ContainsSubstring("outside convergence strip"));
    CHECK_THROWS(JacobiContext::from_y(0.0));
    CHECK_THROWS(JacobiContext::from_q(1.2));
}

TEST_CASE("parity and shift structure", "[jacobi-fourier][property]") {
    const auto ctx = JacobiContext::from_y(1.5);
    std::mt19937 rng(777u);
    std::uniform_real_distribution<double> dist(-6.0, 6.0);
    const double two_pi = 2.0 * std::numbers::pi;
    for (int round = 0; round < 12; ++round) {
        const double t = dist(rng);
        const double s = eval_real(JacobiFn::S, t, ctx);
        const double c = eval_real(JacobiFn::C, t, ctx);
        const double c1 = eval_real(JacobiFn::C1, t, ctx);
        CHECK(std::abs(eval_real(JacobiFn::S, -t, ctx) + s) < 1e-12);
        CHECK(std::abs(eval_real(JacobiFn::C, -t, ctx) - c) < 1e-12);
        CHECK(std::abs(eval_real(JacobiFn::C1, -t, ctx) - c1) < 1e-12);
        CHECK(std::abs(eval_real(JacobiFn::S, t + two_pi, ctx) + s) < 1e-12);
        CHECK(std::abs(eval_real(JacobiFn::C, t + two_pi, ctx) + c) < 1e-12);
        CHECK(std::abs(eval_real(JacobiFn::C1, t + two_pi, ctx) - c1) < 1e-12);
        CHECK(std::abs(eval_real(JacobiFn::S, t + 2 * two_pi, ctx) - s) < 1e-12);
        CHECK(std::abs(eval_real(JacobiFn::C, t + 2 * two_pi, ctx) - c) < 1e-12);
    }
}

TEST_CASE("differentiation formulas hold on real grids", "[jacobi-fourier]") {
    const auto grid = qelliptic::suites::periodic_grid(4.0 * std::numbers::pi, 64);
    for (double y : {0.5, 1.0, 2.0}) {
        const auto rep =
            qelliptic::derivative_identity_check(JacobiContext::from_y(y), grid, 1e-10);
        CAPTURE(y);
        CHECK(rep.pass);
    }
}

TEST_CASE("termwise derivatives agree with central differences", "[jacobi-fourier]") {
    // secondary cross-check of the termwise route; step-limited accuracy
    const auto ctx = JacobiContext::from_y(1.0);
    const double h = 1e-5;
    for (double t : {0.6, 1.9, 4.4}) {
        for (auto [fn, dfn] : {std::pair{JacobiFn::S, JacobiFn::dS},
                               std::pair{JacobiFn::C, JacobiFn::dC},
                               std::pair{JacobiFn::C1, JacobiFn::dC1}}) {
            const double fd = (eval_real(fn, t + h, ctx) - eval_real(fn, t - h, ctx)) / (2 * h);
            CHECK(std::abs(eval_real(dfn, t, ctx) - fd) < 1e-6);
        }
    }
}

TEST_CASE("large-y asymptotics of the derivative", "[jacobi-fourier]") {
    // y = 20: dS ~ e^{-y/2} cos(theta/2) and the identity still balances
    const auto ctx = JacobiContext::from_y(20.0);
    for (double t : {0.8, 2.2}) {
        const double lead = std::exp(-10.0) * std::cos(t / 2.0);
        CHECK(std::abs(eval_real(JacobiFn::dS, t, ctx) - lead) < 1e-11);
        const double prod = eval_real(JacobiFn::C, t, ctx) * eval_real(JacobiFn::C1, t, ctx);
        CHECK(std::abs(eval_real(JacobiFn::dS, t, ctx) - prod) < 1e-12);
    }
}

TEST_CASE("Pythagorean probe fits theta-independent constants", "[jacobi-fourier]") {
    const auto grid = qelliptic::suites::periodic_grid(4.0 * std::numbers::pi, 64);
    const auto ctx = JacobiContext::from_y(2.0);
    const auto rep = qelliptic::pythagorean_probe(ctx, {0.7, 2.1}, grid, 1e-9);
    CHECK(rep.pass);
    bool saw_alpha = false;
    for (const auto& [k, v] : rep.params) saw_alpha |= k == "alpha";
    CHECK(saw_alpha);
}

TEST_CASE("degenerate fit points are rejected", "[jacobi-fourier]") {
    const auto ctx = JacobiContext::from_y(2.0);
    CHECK_THROWS_WITH(qelliptic::pythagorean_fit(ctx, 0.0, 0.0),
                      Catch::Matchers::ContainsSubstring("degenerate fit"));
}

TEST_CASE("fitted constants are independent of the fit points", "[jacobi-fourier][property]") {
    for (double y : {0.5, 1.0, 2.0}) {
        const auto ctx = JacobiContext::from_y(y);
        const auto a = qelliptic::pythagorean_fit(ctx, 0.7, 2.1);
        const auto b = qelliptic::pythagorean_fit(ctx, 1.1, 2.6);
        CHECK(std::abs(a.alpha - b.alpha) < 1e-8);
        CHECK(std::abs(a.beta - b.beta) < 1e-8);
        CHECK(std::abs(a.gamma - b.gamma) < 1e-8);
        CHECK(std::abs(a.delta - b.delta) < 1e-8);
    }
}

TEST_CASE("small-nome limit of the fitted relations", "[jacobi-fourier]") {
    // y = 20: C^2 + S^2 collapses to 4 e^{-y} and C1 -> 1/2
    const auto ctx = JacobiContext::from_y(20.0);
    const auto grid = qelliptic::suites::periodic_grid(4.0 * std::numbers::pi, 64);
    const auto fit = qelliptic::pythagorean_fit(ctx, 0.7, 2.1);
    CHECK(std::abs(fit.alpha - 1.0) < 1e-6);
    CHECK(std::abs(fit.beta - 4.0 * std::exp(-20.0)) < 1e-12);
    CHECK(std::abs(fit.delta - 0.25) < 1e-8);
    CHECK(qelliptic::pythagorean_probe(ctx, {0.7, 2.1}, grid, 1e-9).pass);
}
