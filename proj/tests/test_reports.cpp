#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "qelliptic/report.hpp"

using qelliptic::VerificationReport;

TEST_CASE("text rendering", "[reports]") {
    VerificationReport rep;
    rep.suite = "eq1-exact";
    rep.add_param("order", "30");
    rep.pass = true;
    rep.runtime_ms = 42;
    CHECK(qelliptic::to_text(rep) == "[PASS] eq1-exact  order=30  residual=exact-zero  (42 ms)");

    rep.pass = false;
    rep.max_abs_residual = 2.5e-7;
    CHECK(qelliptic::to_text(rep) == "[FAIL] eq1-exact  order=30  residual=2.5e-07  (42 ms)");
}

TEST_CASE("json lines parse back with the exact field set", "[reports]") {
    VerificationReport rep;
    rep.suite = "quasi-period";
    rep.add_param("q", "0.05");
    rep.add_param("tol", "1e-10");
    rep.max_abs_residual = 3.25e-13;
    rep.pass = true;
    rep.runtime_ms = 7;

    const auto j = nlohmann::json::parse(qelliptic::to_json_line(rep));
    CHECK(j["suite"] == "quasi-period");
    CHECK(j["params"]["q"] == "0.05");
    CHECK(j["params"]["tol"] == "1e-10");
    CHECK(j["max_abs_residual"].get<double>() == Catch::Approx(3.25e-13));
    CHECK(j["pass"] == true);
    CHECK(j["runtime_ms"] == 7);

    rep.max_abs_residual.reset();
    const auto j2 = nlohmann::json::parse(qelliptic::to_json_line(rep));
    CHECK(j2["max_abs_residual"] == "exact-zero");
}

TEST_CASE("double formatting is 12 significant digits", "[reports]") {
    CHECK(qelliptic::format_double(0.0432139182637) == "0.0432139182637");
    CHECK(qelliptic::format_double(1.0) == "1");
    CHECK(qelliptic::format_double(2.5e-13) == "2.5e-13");
}
