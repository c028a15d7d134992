#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "qelliptic/elliptic_f.hpp"
#include "qelliptic/suites.hpp"

using qelliptic::FContext;
using std::complex;

TEST_CASE("strip bound follows the nome", "[elliptic-f]") {
    const auto ctx = FContext::from_q(0.05);
    CHECK(ctx.strip_bound == Catch::Approx(-std::log(0.05)));
    CHECK(ctx.tau().imag() == Catch::Approx(-std::log(0.05) / (2 * std::numbers::pi)));
    CHECK(std::isinf(FContext::from_q(0.0).strip_bound));
    CHECK_THROWS_WITH(FContext::from_q(1.0),
                      Catch::Matchers::ContainsSubstring("nome out of range"));
    CHECK_THROWS(FContext::from_q(-0.1));
}

TEST_CASE("q = 0 reduces f to the pure cotangent term", "[elliptic-f]") {
    const auto ctx = FContext::from_q(0.0);
    const double expected = 0.25 * std::cos(1.0) / std::sin(1.0);
    CHECK(std::abs(qelliptic::f_strip({2.0, 0.0}, ctx) - complex<double>(expected, 0.0)) <
          1e-15);
    CHECK(std::abs(qelliptic::f_mero({2.0, 0.0}, ctx) - complex<double>(expected, 0.0)) <
          1e-13);
}

TEST_CASE("f vanishes at theta = pi", "[elliptic-f]") {
    for (double q : {0.0, 0.1, 0.3}) {
        const auto ctx = FContext::from_q(q);
        CHECK(std::abs(qelliptic::f_strip({std::numbers::pi, 0.0}, ctx)) < 1e-13);
    }
}

TEST_CASE("strip and meromorphic forms agree where both converge", "[elliptic-f]") {
    const auto ctx = FContext::from_q(0.1);
    CHECK(std::abs(qelliptic::f_strip({1.0, 0.0}, ctx, 1e-14) -
                   qelliptic::f_mero({1.0, 0.0}, ctx, 1e-14)) < 1e-11);

    for (double q : {0.02, 0.05, 0.1}) {
        const auto rep = qelliptic::continuation_overlap_check(FContext::from_q(q), 20,
                                                               20260809u, 1e-11);
        CAPTURE(q);
        CHECK(rep.pass);
    }
}

TEST_CASE("strip and pole guards", "[elliptic-f]") {
    const auto ctx = FContext::from_q(0.1);
    CHECK_THROWS_WITH(qelliptic::f_strip({1.0, 4.0}, ctx),
                      Catch::Matchers::ContainsSubstring("outside convergence strip"));
    CHECK_THROWS_WITH(qelliptic::f_strip({1e-12, 0.0}, ctx),
                      Catch::Matchers::ContainsSubstring("pole of f"));
    // z = q is the first lattice pole below the real axis: theta = 2 pi tau
    const complex<double> pole_theta(0.0, -std::log(0.1));
    CHECK_THROWS_WITH(qelliptic::f_mero(pole_theta, ctx),
                      Catch::Matchers::ContainsSubstring("pole of f"));
}

TEST_CASE("residue at the origin is 1/2", "[elliptic-f]") {
    const auto ctx = FContext::from_q(0.05);
    const auto t = [&](double theta) {
        return (theta * qelliptic::f_mero({theta, 0.0}, ctx, 1e-14)).real();
    };
    // theta f(theta) = 1/2 + c theta^2 + ...: eliminate c from the two
    // smallest samples of {0.1, 0.01, 0.001}
    const double extrapolated = (100.0 * t(0.001) - t(0.01)) / 99.0;
    CHECK(std::abs(extrapolated - 0.5) < 1e-6);
    CHECK(std::abs(t(0.1) - 0.5) < 0.01);
}

TEST_CASE("f' has a second-order pole with coefficient -1/2", "[elliptic-f]") {
    const auto ctx = FContext::from_q(0.05);
    const auto t = [&](double theta) {
        return (theta * theta * qelliptic::f_mero_prime({theta, 0.0}, ctx, 1e-14)).real();
    };
    const double extrapolated = (100.0 * t(0.001) - t(0.01)) / 99.0;
    CHECK(std::abs(extrapolated + 0.5) < 1e-6);
}

TEST_CASE("q -> 0 limit of f'", "[elliptic-f]") {
    const auto ctx = FContext::from_q(0.0);
    for (double theta : {0.7, 2.0}) {
        const double csc = 1.0 / std::sin(theta / 2.0);
        const double expected = -0.125 * csc * csc;
        CHECK(std::abs(qelliptic::f_mero_prime({theta, 0.0}, ctx) -
                       complex<double>(expected, 0.0)) < 1e-13);
    }
}

TEST_CASE("quasi-periodicity f(theta + 2 pi tau) = f(theta) - i/2", "[elliptic-f]") {
    const auto grid = qelliptic::suites::linspace(0.15, 2 * std::numbers::pi - 0.15, 32);
    for (double q : {0.01, 0.05, 0.1}) {
        const auto rep = qelliptic::quasi_period_check(FContext::from_q(q), grid, 1e-10);
        CAPTURE(q);
        CHECK(rep.pass);
    }
}

TEST_CASE("f' is doubly periodic", "[elliptic-f]") {
    const auto grid = qelliptic::suites::linspace(0.15, 2 * std::numbers::pi - 0.15, 32);
    for (double q : {0.01, 0.05, 0.1}) {
        const auto rep = qelliptic::fprime_elliptic_check(FContext::from_q(q), grid, 1e-10);
        CAPTURE(q);
        CHECK(rep.pass);
    }
}

TEST_CASE("numeric verification of the squared identity", "[elliptic-f]") {
    const auto real_rep =
        qelliptic::eq1_numeric_check(FContext::from_q(0.1), {1.0, 0.0}, 1e-10);
    CHECK(real_rep.pass);

    const auto complex_rep =
        qelliptic::eq1_numeric_check(FContext::from_q(0.05), {1.0, 0.5}, 1e-9);
    CHECK(complex_rep.pass);

    // q -> 0: both sides collapse to the squared cotangent term
    const auto zero_rep = qelliptic::eq1_numeric_check(FContext::from_q(0.0), {1.3, 0.0}, 1e-13);
    CHECK(zero_rep.pass);
}
