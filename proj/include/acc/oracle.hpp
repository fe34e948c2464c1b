#pragma once

// Independent verification path. Quantiles are recovered from the CDF alone
// by geometric bracket growth plus bisection, then turned into limit angles
// and compared against the closed-form path. Shares only cdf() with the main
// implementation, so agreement is evidence, not tautology.

#include <cmath>
#include <string>
#include <vector>

#include "acc/acl.hpp"
#include "acc/distributions.hpp"
#include "acc/error.hpp"
#include "acc/scales.hpp"

namespace acc {

namespace detail {
inline double bracket_scale(const DistributionSpec& spec) {
    return spec.family == DistributionFamily::Lognormal ? std::exp(spec.scale) : spec.scale;
}
}  // namespace detail

/// Brute-force quantile: grow [0, hi] geometrically from the scale parameter
/// until the CDF straddles p, then bisect to relative width `tol`.
inline double quantile_bisect(const DistributionSpec& spec, double p, double tol = 1e-10) {
    validate(spec);
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("quantile_bisect: p must lie strictly inside (0,1)");
    }
    if (tol < 1e-12) throw DomainError("quantile_bisect: tol must be at least 1e-12");

    const double unit = detail::bracket_scale(spec);
    double hi = unit;
    int growth = 0;
    // Heavy tails (Frechet, lognormal with large shape) put the 1-c/2
    // quantile millions of scale units out, so the growth cap sits well
    // beyond them while still catching unbracketable requests.
    while (cdf(spec, hi) < p) {
        hi *= 2.0;
        if (++growth > 40) {
            throw ConvergenceError("quantile_bisect: bracket exceeded 2^40 * scale");
        }
    }
    double lo = 0.0;
    for (int i = 0; i < 300 && (hi - lo) > tol * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(spec, mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct AngleCheck {
    std::string name;   // "theta_L" or "theta_U"
    double closed{};    // degrees, main path
    double bisected{};  // degrees, oracle path
    double deviation{};  // |closed - bisected| degrees
};

struct AngleReport {
    std::vector<AngleCheck> checks;
    double max_deviation{};
    double tolerance{};
    bool pass{true};
};

/// Recompute θ_L and θ_U from bisected quantiles and compare against
/// limit_angles at tolerance `tol` degrees.
inline AngleReport verify_angles(const DistributionSpec& spec, FalseAlarmProb c,
                                 const DrawingScale& scale, double tol = 1e-8) {
    if (tol < 1e-8) throw DomainError("verify_angles: tol must be at least 1e-8 degrees");
    const AngularLimits closed = limit_angles(spec, c, scale);

    const double t_c = quantile_bisect(spec, 0.5, 1e-12);
    const double t_l = quantile_bisect(spec, c.value / 2.0, 1e-12);
    const double t_u = quantile_bisect(spec, 1.0 - c.value / 2.0, 1e-12);
    const double theta_l = atan_degrees(scale.apply(t_c) / scale.apply(t_l));
    const double theta_u = atan_degrees(scale.apply(t_c) / scale.apply(t_u));

    AngleReport report;
    report.tolerance = tol;
    report.checks = {
        AngleCheck{"theta_L", closed.theta_L, theta_l, std::abs(closed.theta_L - theta_l)},
        AngleCheck{"theta_U", closed.theta_U, theta_u, std::abs(closed.theta_U - theta_u)},
    };
    for (const auto& check : report.checks) {
        report.max_deviation = std::max(report.max_deviation, check.deviation);
    }
    report.pass = report.max_deviation <= tol;
    return report;
}

struct SweepEntry {
    DistributionSpec spec;
    DrawingScale scale;
    AngleReport report;
};

/// Specs covering every family over the shape grid used for verification.
inline std::vector<DistributionSpec> default_sweep_specs() {
    const double shapes[] = {0.5, 1.0, 1.5, 2.0, 3.0, 5.0};
    std::vector<DistributionSpec> specs;
    specs.push_back(DistributionSpec::exponential(1.0));
    specs.push_back(DistributionSpec::rayleigh(1.0));
    for (double b : shapes) {
        specs.push_back(DistributionSpec::weibull(1.0, b));
        specs.push_back(DistributionSpec::lognormal(0.0, b));
        specs.push_back(DistributionSpec::frechet(1.0, b));
        specs.push_back(DistributionSpec::gamma(1.0, b));
    }
    for (int k : {1, 2, 3, 5}) specs.push_back(DistributionSpec::erlang(1.0, k));
    return specs;
}

/// Closed-form vs bisected angles over the full family × shape × scale grid.
inline std::vector<SweepEntry> run_default_sweep(FalseAlarmProb c = {}, double tol = 1e-8) {
    std::vector<SweepEntry> entries;
    for (const auto& spec : default_sweep_specs()) {
        for (int k = 1; k <= 4; ++k) {
            const DrawingScale scale = DrawingScale::power_root(k);
            entries.push_back(SweepEntry{spec, scale, verify_angles(spec, c, scale, tol)});
        }
    }
    return entries;
}

}  // namespace acc
