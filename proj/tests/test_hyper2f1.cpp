#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "qelliptic/hyper2f1.hpp"

using qelliptic::BigRational;
using qelliptic::HypParams;

namespace {

const HypParams kHalf{BigRational(1, 2), BigRational(1, 2), BigRational(1)};
const HypParams kThird{BigRational(1, 3), BigRational(2, 3), BigRational(1)};

// test-local Pochhammer-ratio oracle in binary64
double pochhammer_sum(double a, double b, double c, double x, int terms) {
    double t = 1.0, acc = 1.0;
    for (int k = 0; k < terms; ++k) {
        t *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x;
        acc += t;
    }
    return acc;
}

}  // namespace

TEST_CASE("2F1 at the origin is 1", "[hyper2f1]") {
    CHECK(qelliptic::hyp2f1_num(kHalf, 0.0) == 1.0);
    CHECK(qelliptic::hyp2f1_num(kThird, 0.0) == 1.0);
}

TEST_CASE("2F1 matches the Pochhammer-ratio oracle at small x", "[hyper2f1]") {
    for (double x : {0.05, 0.1, 0.3}) {
        CHECK(qelliptic::hyp2f1_num(kHalf, x) ==
              Catch::Approx(pochhammer_sum(0.5, 0.5, 1.0, x, 200)).margin(1e-13));
        CHECK(qelliptic::hyp2f1_num(kThird, x) ==
              Catch::Approx(pochhammer_sum(1.0 / 3.0, 2.0 / 3.0, 1.0, x, 200)).margin(1e-13));
    }
}

TEST_CASE("exact Taylor coefficients", "[hyper2f1]") {
    const auto half = qelliptic::hyp2f1_taylor(kHalf, 3);
    CHECK(half[0] == 1);
    CHECK(half[1] == BigRational(1, 4));
    CHECK(half[2] == BigRational(9, 64));
    CHECK(half[3] == BigRational(25, 256));

    const auto third = qelliptic::hyp2f1_taylor(kThird, 1);
    CHECK(third[0] == 1);
    CHECK(third[1] == BigRational(2, 9));

    CHECK(qelliptic::hyp2f1_taylor(kHalf, 0) == std::vector<BigRational>{BigRational(1)});
}

TEST_CASE("numeric summation is consistent with the exact Taylor series",
          "[hyper2f1][property]") {
    for (const auto& p : {kHalf, kThird}) {
        const auto coeffs = qelliptic::hyp2f1_taylor(p, 60);
        for (double x : {0.05, 0.15, 0.3}) {
            double acc = 0.0;
            for (std::size_t k = coeffs.size(); k-- > 0;) {
                acc = acc * x + qelliptic::to_double(coeffs[k]);
            }
            CHECK(std::abs(qelliptic::hyp2f1_num(p, x) - acc) < 1e-12);
        }
    }
}

TEST_CASE("2F1 is symmetric in a and b", "[hyper2f1][property]") {
    std::mt19937 rng(555u);
    std::uniform_real_distribution<double> x_dist(0.0, 0.8);
    std::uniform_int_distribution<int> num_dist(1, 5);
    for (int round = 0; round < 20; ++round) {
        const BigRational a(num_dist(rng), 3);
        const BigRational b(num_dist(rng), 4);
        const BigRational c(num_dist(rng));
        const double x = x_dist(rng);
        const double fwd = qelliptic::hyp2f1_num({a, b, c}, x);
        const double swp = qelliptic::hyp2f1_num({b, a, c}, x);
        CHECK(std::abs(fwd - swp) < 1e-14 * std::max(1.0, std::abs(fwd)));
    }
}

TEST_CASE("paper parameter sets have positive Taylor coefficients", "[hyper2f1][property]") {
    for (const auto& p : {kHalf, kThird}) {
        for (const auto& c : qelliptic::hyp2f1_taylor(p, 200)) {
            CHECK(c > 0);
        }
    }
}

TEST_CASE("domain and convergence failures", "[hyper2f1]") {
    CHECK_THROWS_WITH(qelliptic::hyp2f1_num(kHalf, 1.0),
                      Catch::Matchers::ContainsSubstring("outside disc of convergence"));
    CHECK_THROWS_WITH(qelliptic::hyp2f1_num(kHalf, -0.2),
                      Catch::Matchers::ContainsSubstring("outside disc of convergence"));

    try {
        qelliptic::hyp2f1_num(kHalf, 0.999999, 1e-13, 50);
        FAIL("expected SlowConvergence");
    } catch (const qelliptic::SlowConvergence& e) {
        CHECK(e.term_count == 50);
        CHECK(e.partial_sum > 1.0);
        CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("slow convergence"));
    }

    const HypParams bad{BigRational(1, 2), BigRational(1, 2), BigRational(-2)};
    CHECK_THROWS_WITH(qelliptic::hyp2f1_taylor(bad, 5),
                      Catch::Matchers::ContainsSubstring("pole in parameter recurrence"));
}
