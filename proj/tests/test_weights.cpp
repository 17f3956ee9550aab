#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <limits>

#include "wplap/mesh.hpp"
#include "wplap/weights.hpp"

using namespace wplap;

TEST_CASE("weight evaluation on the built-in kinds") {
    CHECK(eval_weight(WeightSpec::constant(3.0), 0.5) == 3.0);
    CHECK(eval_weight(WeightSpec::power_radial(-3.0), 0.5) == doctest::Approx(8.0));
    CHECK(eval_weight(WeightSpec::distance_boundary(-1.0, 0.0, 1.0), 0.25) ==
          doctest::Approx(4.0));

    SUBCASE("tabulated weights interpolate linearly") {
        const auto w = WeightSpec::tabulated({0.0, 1.0, 2.0}, {1.0, 3.0, 3.0});
        CHECK(w(0.5) == doctest::Approx(2.0));
        CHECK(w(1.5) == doctest::Approx(3.0));
        CHECK(w(0.0) == doctest::Approx(1.0));
        CHECK_THROWS_AS(w(2.5), std::domain_error);
        CHECK_THROWS_AS(w(-0.1), std::domain_error);
    }

    SUBCASE("distance weight rejects points outside the domain") {
        const auto w = WeightSpec::distance_boundary(-1.0, 0.0, 1.0);
        CHECK_THROWS_AS(w(1.5), std::domain_error);
    }

    SUBCASE("radial sections measure the distance to the outer boundary only") {
        const auto w = WeightSpec::distance_boundary(1.0, 0.0, 1.0, true);
        CHECK(w(0.25) == doctest::Approx(0.75));
    }

    SUBCASE("construction rejects malformed input") {
        CHECK_THROWS_AS(WeightSpec::constant(-1.0), std::invalid_argument);
        CHECK_THROWS_AS(WeightSpec::tabulated({0.0, 0.0}, {1.0, 1.0}), std::invalid_argument);
        CHECK_THROWS_AS(WeightSpec::tabulated({0.0, 1.0}, {1.0, -1.0}), std::invalid_argument);
        CHECK_THROWS_AS(WeightSpec::tabulated({0.0}, {1.0}), std::invalid_argument);
    }
}

TEST_CASE("truncation clamps, preserves bounded weights, and is monotone in the level") {
    const auto c3 = WeightSpec::constant(3.0);
    CHECK(truncate_weight(c3, 5.0)(0.123) == 3.0);
    CHECK(truncate_weight(WeightSpec::power_radial(-3.0), 5.0)(0.1) == 5.0);
    CHECK_THROWS_AS(truncate_weight(c3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(truncate_weight(c3, -2.0), std::invalid_argument);

    const WeightSpec weights[] = {WeightSpec::power_radial(-3.0),
                                  WeightSpec::distance_boundary(-4.0, 0.0, 1.0),
                                  WeightSpec::constant(7.0),
                                  WeightSpec::tabulated({0.0, 0.5, 1.0}, {0.0, 20.0, 2.0})};
    const double levels[] = {0.5, 1.0, 5.0, 50.0, 1e4};
    for (const auto& w : weights) {
        for (int i = 1; i < 40; ++i) {
            const double x = i / 40.0;
            const double wx = w(x);
            double previous = 0.0;
            for (double m : levels) {
                const double tm = truncate_weight(w, m)(x);
                CHECK(std::abs(tm) <= m);
                if (wx <= m) CHECK(tm == wx);
                CHECK(tm >= previous);      // nondecreasing in m
                CHECK(tm <= wx);            // never exceeds the original
                previous = tm;
            }
            // converges to the weight once the level passes it
            if (std::isfinite(wx)) CHECK(truncate_weight(w, std::max(wx, 1e-300) * 2.0)(x) == wx);
        }
    }

    SUBCASE("truncating twice keeps the smaller level") {
        const auto w = truncate_weight(truncate_weight(WeightSpec::power_radial(-3.0), 5.0), 9.0);
        CHECK(w(1e-3) == 5.0);
        // truncated weights are evaluable on the singular set itself
        CHECK(truncate_weight(WeightSpec::power_radial(-3.0), 5.0)(0.0) == 5.0);
    }
}

namespace {

// Closed-form antiderivative oracles for the admissibility integrands of the
// two classical weight pairs.  All windows avoid the singular endpoints.

// integral of r^k * r^(N-1) over [lo, hi]
double radial_power_integral(double k, int N, double lo, double hi) {
    const double e = k + N;
    return (std::pow(hi, e) - std::pow(lo, e)) / e;
}

// integral of min(x, 1-x)^k over [lo, hi] inside (0,1), symmetric window
double distance_power_integral(double k, double lo, double hi) {
    REQUIRE(lo + hi == doctest::Approx(1.0));
    const double e = k + 1.0;
    return 2.0 * (std::pow(0.5, e) - std::pow(lo, e)) / e;
}

}  // namespace

TEST_CASE("admissibility quadrature matches closed forms on the radial power pair") {
    const auto mesh = build_mesh(0.0, 1.0, 512, 2.0, Metric::Radial, 4);
    const auto w1 = WeightSpec::power_radial(-3.0);
    const auto w2 = WeightSpec::constant(1.0);
    const double p = 3.0, q = 4.0, s = 6.0;
    const auto report = check_admissibility(w1, w2, p, q, s, mesh);

    // W2 integrand: (r^-3)^(-2/(p-2)) = r^6, against the metric r^3.
    const double w2_exact = radial_power_integral(6.0, 4, 0.0, 1.0);
    CHECK(w2_exact == doctest::Approx(0.1));
    CHECK(report.entry(2).status == ConditionStatus::Pass);
    CHECK(report.entry(2).evidence == doctest::Approx(w2_exact).epsilon(0.01));

    CHECK(report.entry(1).status == ConditionStatus::Pass);
    CHECK(report.entry(3).status == ConditionStatus::Pass);
    CHECK(report.entry(3).evidence == doctest::Approx(1.0));
    CHECK(report.entry(6).status == ConditionStatus::Pass);
    CHECK(report.entry(4).status == ConditionStatus::AnalyticOnly);
    CHECK(report.entry(5).status == ConditionStatus::AnalyticOnly);
    CHECK(std::isnan(report.entry(4).evidence));

    // W6 integrands on the 10% interior window: r^6 and 1.
    const double w6a_exact = radial_power_integral(6.0, 4, 0.1, 0.9);
    const double w6b_exact = radial_power_integral(0.0, 4, 0.1, 0.9);
    CHECK(report.entry(6).evidence ==
          doctest::Approx(std::max(w6a_exact, w6b_exact)).epsilon(0.01));
}

TEST_CASE("admissibility quadrature matches closed forms on the distance pair") {
    const auto mesh = build_mesh(0.0, 1.0, 512, 1.0, Metric::Interval, 1);
    const double gamma = -1.0, p = 3.0, q = 4.0, s = 6.0;
    const auto w1 = WeightSpec::distance_boundary(gamma - p, 0.0, 1.0);
    const auto w2 = WeightSpec::distance_boundary(gamma, 0.0, 1.0);
    const auto report = check_admissibility(w1, w2, p, q, s, mesh);

    for (int k = 1; k <= 6; ++k) {
        if (k == 4 || k == 5) continue;
        CHECK(report.entry(k).status == ConditionStatus::Pass);
    }

    // W2 integrand: dist^8 over the whole interval.
    const double w2_exact = distance_power_integral(8.0, 0.0, 1.0);
    CHECK(w2_exact == doctest::Approx(1.0 / 2304.0));
    CHECK(report.entry(2).evidence == doctest::Approx(w2_exact).epsilon(0.01));

    // W6 integrands on [0.1, 0.9]: dist^8 and dist^-4.
    const double w6a_exact = distance_power_integral(8.0, 0.1, 0.9);
    const double w6b_exact = distance_power_integral(-4.0, 0.1, 0.9);
    CHECK(w6b_exact == doctest::Approx((2.0 / 3.0) * (1000.0 - 8.0)));
    CHECK(report.entry(6).evidence ==
          doctest::Approx(std::max(w6a_exact, w6b_exact)).epsilon(0.01));

    SUBCASE("the report distinguishes the global and local W2 scopes") {
        CHECK(report.entry(2).note.find("local") != std::string::npos);
        CHECK(report.entry(2).note.find("global") != std::string::npos);
    }
}

TEST_CASE("admissibility on constant weights and argument checking") {
    const auto mesh = build_mesh(0.0, 1.0, 64, 1.0, Metric::Interval, 1);
    const auto one = WeightSpec::constant(1.0);
    const auto report = check_admissibility(one, one, 3.0, 4.0, 6.0, mesh);
    CHECK(report.numeric_entries_pass());

    CHECK_THROWS_AS(check_admissibility(one, one, 2.0, 4.0, 6.0, mesh), std::invalid_argument);
    CHECK_THROWS_AS(check_admissibility(one, one, 3.0, 6.0, 4.0, mesh), std::invalid_argument);
    CHECK_THROWS_AS(check_admissibility(one, one, 3.0, 2.5, 6.0, mesh), std::invalid_argument);

    SUBCASE("a vanishing omega1 fails the W2 integrability evidence") {
        const auto zero = WeightSpec::constant(0.0);
        const auto bad = check_admissibility(zero, one, 3.0, 4.0, 6.0, mesh);
        CHECK(bad.entry(2).status == ConditionStatus::Fail);
        CHECK(!bad.numeric_entries_pass());
    }
}

TEST_CASE("check_admissibility is deterministic, bit for bit") {
    const auto mesh = build_mesh(0.0, 1.0, 256, 2.0, Metric::Radial, 4);
    const auto w1 = WeightSpec::power_radial(-3.0);
    const auto w2 = WeightSpec::constant(1.0);
    const auto a = check_admissibility(w1, w2, 3.0, 4.0, 6.0, mesh);
    const auto b = check_admissibility(w1, w2, 3.0, 4.0, 6.0, mesh);
    for (int k = 1; k <= 6; ++k) {
        CHECK(a.entry(k).status == b.entry(k).status);
        CHECK(std::memcmp(&a.entry(k).evidence, &b.entry(k).evidence, sizeof(double)) == 0);
        CHECK(a.entry(k).note == b.entry(k).note);
    }
}
