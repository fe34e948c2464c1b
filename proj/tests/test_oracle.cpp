#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "acc/oracle.hpp"

using Catch::Approx;
using namespace acc;

TEST_CASE("quantile_bisect recovers closed-form quantiles from the CDF alone", "[oracle]") {
    CHECK(quantile_bisect(DistributionSpec::exponential(100.0), 0.5) ==
          Approx(69.31472).margin(1e-6));
    CHECK(quantile_bisect(DistributionSpec::weibull(600.0, 1.5), 0.99865) ==
          Approx(quantile(DistributionSpec::weibull(600.0, 1.5), 0.99865)).epsilon(1e-8));
    CHECK(quantile_bisect(DistributionSpec::lognormal(0.0, 1.0), 0.5) ==
          Approx(1.0).margin(1e-9));
}

TEST_CASE("quantile_bisect guards its domain", "[oracle]") {
    const auto spec = DistributionSpec::exponential(100.0);
    CHECK_THROWS_AS(quantile_bisect(spec, 0.0), DomainError);
    CHECK_THROWS_AS(quantile_bisect(spec, 1.0), DomainError);
    CHECK_THROWS_AS(quantile_bisect(spec, 0.5, 1e-13), DomainError);
    // A Frechet tail quantile ~1e50 scales cannot be bracketed within 2^40 * alpha.
    CHECK_THROWS_AS(quantile_bisect(DistributionSpec::frechet(1.0, 0.1), 0.99999),
                    ConvergenceError);
}

TEST_CASE("verify_angles agrees with the closed forms on the exponential", "[oracle]") {
    const AngleReport report = verify_angles(DistributionSpec::exponential(250.0),
                                             FalseAlarmProb{}, DrawingScale::linear());
    REQUIRE(report.checks.size() == 2);
    CHECK(report.pass);
    CHECK(report.max_deviation < 1e-8);
    CHECK(report.checks[0].closed == Approx(89.888333294387061).margin(1e-8));
    CHECK(report.checks[1].closed == Approx(5.9884654470377985).margin(1e-8));
    CHECK(report.checks[0].bisected == Approx(report.checks[0].closed).margin(1e-8));
}

TEST_CASE("verify_angles sweeps the Weibull shape grid on all scales", "[oracle]") {
    for (double beta : {0.5, 1.0, 1.5, 2.0, 3.0, 5.0}) {
        for (int k = 1; k <= 4; ++k) {
            const AngleReport report = verify_angles(DistributionSpec::weibull(75.0, beta),
                                                     FalseAlarmProb{}, DrawingScale::power_root(k));
            CAPTURE(beta, k, report.max_deviation);
            CHECK(report.pass);
        }
    }
}

TEST_CASE("gamma and Erlang at the same shape give identical angles", "[oracle]") {
    const AngularLimits gamma = limit_angles(DistributionSpec::gamma(300.0, 2.0),
                                             FalseAlarmProb{}, DrawingScale::power_root(3));
    const AngularLimits erlang = limit_angles(DistributionSpec::erlang(300.0, 2),
                                              FalseAlarmProb{}, DrawingScale::power_root(3));
    CHECK(gamma.theta_L == erlang.theta_L);
    CHECK(gamma.theta_U == erlang.theta_U);
}

TEST_CASE("default sweep passes everywhere", "[oracle]") {
    const auto entries = run_default_sweep();
    CHECK(entries.size() == (2 + 4 * 6 + 4) * 4);
    for (const auto& entry : entries) {
        CAPTURE(family_name(entry.spec.family), entry.spec.shape, entry.scale.root,
                entry.report.max_deviation);
        CHECK(entry.report.pass);
    }
}

TEST_CASE("oracle quantiles match the main path across the grid", "[oracle]") {
    const FalseAlarmProb c{};
    for (const auto& spec : default_sweep_specs()) {
        for (double p : {c.value / 2.0, 0.5, 1.0 - c.value / 2.0}) {
            CAPTURE(family_name(spec.family), spec.shape, p);
            CHECK(quantile_bisect(spec, p, 1e-12) == Approx(quantile(spec, p)).epsilon(1e-8));
        }
    }
}
