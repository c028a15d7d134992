#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qelliptic/eisenstein.hpp"

using qelliptic::BigInt;
using qelliptic::BigRational;
using qelliptic::Eisenstein;
using qelliptic::QSeries;

namespace {

// independent divisor oracle: walk every candidate divisor
BigInt sigma_oracle(unsigned s, unsigned long n) {
    BigInt total = 0;
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        BigInt p = 1;
        for (unsigned i = 0; i < s; ++i) p *= d;
        total += p;
    }
    return total;
}

}  // namespace

TEST_CASE("divisor power sums", "[eisenstein]") {
    CHECK(qelliptic::divisor_power_sum(1, 1) == 1);
    CHECK(qelliptic::divisor_power_sum(1, 6) == 12);   // 1+2+3+6
    CHECK(qelliptic::divisor_power_sum(3, 2) == 9);    // 1 + 8
    CHECK(qelliptic::divisor_power_sum(0, 12) == 6);   // divisor count
    CHECK_THROWS_WITH(qelliptic::divisor_power_sum(1, 0),
                      Catch::Matchers::ContainsSubstring("undefined"));
}

TEST_CASE("divisor power sums match the brute-force oracle", "[eisenstein][property]") {
    for (unsigned s : {0u, 1u, 3u, 5u}) {
        for (unsigned long n = 1; n <= 300; ++n) {
            CHECK(qelliptic::divisor_power_sum(s, n) == sigma_oracle(s, n));
        }
    }
}

TEST_CASE("lambert series coefficients are divisor power sums", "[eisenstein]") {
    const QSeries l1 = qelliptic::lambert_series(1, 3);
    CHECK(l1[0] == 0);
    CHECK(l1[1] == 1);
    CHECK(l1[2] == 3);
    CHECK(l1[3] == 4);

    const QSeries l3 = qelliptic::lambert_series(3, 2);
    CHECK(l3[1] == 1);
    CHECK(l3[2] == 9);

    const QSeries l0 = qelliptic::lambert_series(0, 2);
    CHECK(l0[1] == 1);
    CHECK(l0[2] == 2);
}

TEST_CASE("lambert series equals the divisor oracle through order 200", "[eisenstein][property]") {
    for (unsigned s : {0u, 1u, 3u, 5u}) {
        const QSeries l = qelliptic::lambert_series(s, 200);
        for (unsigned long k = 1; k <= 200; ++k) {
            CHECK(l[k] == BigRational(qelliptic::divisor_power_sum(s, k)));
        }
    }
}

TEST_CASE("Eisenstein series leading coefficients", "[eisenstein]") {
    const QSeries p = qelliptic::eisenstein_series(Eisenstein::P, 3);
    CHECK(p[0] == 1);
    CHECK(p[1] == -24);
    CHECK(p[2] == -72);
    CHECK(p[3] == -96);

    const QSeries q = qelliptic::eisenstein_series(Eisenstein::Q, 2);
    CHECK(q[0] == 1);
    CHECK(q[1] == 240);
    CHECK(q[2] == 2160);

    const QSeries r = qelliptic::eisenstein_series(Eisenstein::R, 2);
    CHECK(r[0] == 1);
    CHECK(r[1] == -504);
    CHECK(r[2] == -16632);  // 504 * sigma_5(2) = 504 * 33
}

TEST_CASE("Eisenstein ODE residuals vanish identically", "[eisenstein]") {
    for (std::size_t order : {0ul, 10ul, 200ul}) {
        const auto res = qelliptic::ode_residuals(order);
        CHECK(res.for_p.is_zero());
        CHECK(res.for_q.is_zero());
        CHECK(res.for_r.is_zero());
    }
}
