#include <cmath>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "acc/rng.hpp"
#include "acc/scales.hpp"

using Catch::Approx;
using namespace acc;

namespace {

const std::vector<std::pair<double, double>> kProbPairs = {
    {0.5, 0.00135}, {0.5, 0.99865}, {0.5, 0.5}, {0.1, 0.9}, {0.73, 0.02},
};

}  // namespace

TEST_CASE("apply evaluates the power roots", "[scales]") {
    CHECK(DrawingScale::linear().apply(513.096) == 513.096);
    CHECK(DrawingScale::power_root(2).apply(513.096) ==
          Approx(22.651622458446547).epsilon(1e-14));
    CHECK(DrawingScale::power_root(3).apply(0.105) ==
          Approx(0.47176939803165334).epsilon(1e-14));
    CHECK(DrawingScale::power_root(4).apply(0.0) == 0.0);
    CHECK(DrawingScale::power_root(3).apply(1.0) == 1.0);
    CHECK_THROWS_AS(DrawingScale::linear().apply(-1.0), DomainError);
    CHECK_THROWS_AS(DrawingScale::power_root(0), ValidationError);
}

TEST_CASE("power roots are multiplicative", "[scales]") {
    SplitMix64 rng(7321ULL);
    for (int k = 1; k <= 4; ++k) {
        const DrawingScale scale = DrawingScale::power_root(k);
        for (int i = 0; i < 200; ++i) {
            const double x = 1e-3 + 1e4 * rng.next_unit();
            const double y = 1e-3 + 1e4 * rng.next_unit();
            CAPTURE(k, x, y);
            CHECK(scale.apply(x * y) == Approx(scale.apply(x) * scale.apply(y)).epsilon(1e-12));
            CHECK(scale.apply(x / y) == Approx(scale.apply(x) / scale.apply(y)).epsilon(1e-12));
        }
    }
}

TEST_CASE("power roots satisfy the distributive condition for every family", "[scales]") {
    const std::vector<DistributionSpec> specs = {
        DistributionSpec::exponential(400.0), DistributionSpec::weibull(600.0, 1.5),
        DistributionSpec::rayleigh(200.0),    DistributionSpec::lognormal(1.0, 0.8),
        DistributionSpec::frechet(250.0, 2.0), DistributionSpec::gamma(100.0, 3.0),
        DistributionSpec::erlang(400.0, 2),
    };
    for (int k = 1; k <= 4; ++k) {
        for (const auto& spec : specs) {
            CAPTURE(k, family_name(spec.family));
            CHECK(check_distributive(DrawingScale::power_root(k), spec, kProbPairs));
        }
    }
}

TEST_CASE("a logarithmic mapping violates the distributive condition", "[scales]") {
    // g(x) = ln(1 + x): monotone, but g(x/y) != g(x)/g(y).
    const auto spec = DistributionSpec::exponential(400.0);
    const auto g = [](double x) { return std::log1p(x); };
    bool all_within = true;
    for (const auto& [a, b] : kProbPairs) {
        const double lhs = g(quantile(spec, a)) / g(quantile(spec, b));
        const double rhs = g(ratio_of_quantiles(spec, a, b));
        if (std::abs(lhs - rhs) > 1e-12 * std::abs(rhs)) all_within = false;
    }
    CHECK_FALSE(all_within);
}

TEST_CASE("scale names round-trip", "[scales]") {
    for (const char* name : {"linear", "sqrt", "cbrt", "qrt"}) {
        CHECK(scale_name(scale_from_name(name)) == name);
    }
    CHECK(scale_from_name("cbrt").root == 3);
    CHECK_THROWS_AS(scale_from_name("log"), ValidationError);
}
