#pragma once

// Angular center line and control limits. The center line is 45° for every
// distribution; the control limits are arctangents of (drawing-scaled)
// quantile ratios at 1/2 vs c/2 and 1-c/2, and depend on the shape parameter
// only, never the scale parameter.

#include <cmath>
#include <numbers>
#include <utility>

#include "acc/distributions.hpp"
#include "acc/scales.hpp"

namespace acc {

/// Acceptable probability of a false alarm; the quality-engineering default
/// is 0.27%.
struct FalseAlarmProb {
    double value{0.0027};
};

inline void validate(const FalseAlarmProb& c) {
    if (!(c.value > 0.0 && c.value < 1.0)) {
        throw ValidationError("false-alarm probability must lie strictly inside (0,1)");
    }
}

/// Limit angles in degrees; 0 < theta_U < theta_C = 45 < theta_L < 90.
struct AngularLimits {
    double theta_U{};
    double theta_C{45.0};
    double theta_L{};
};

inline constexpr double degrees_per_radian = 180.0 / std::numbers::pi;

inline double atan_degrees(double x) { return std::atan(x) * degrees_per_radian; }

inline constexpr double center_angle() { return 45.0; }

/// θ_L = atan(g(ρ(1/2, c/2))), θ_U = atan(g(ρ(1/2, 1-c/2))).
inline AngularLimits limit_angles(const DistributionSpec& spec, FalseAlarmProb c,
                                  const DrawingScale& scale) {
    validate(c);
    const double rho_l = ratio_of_quantiles(spec, 0.5, c.value / 2.0);
    const double rho_u = ratio_of_quantiles(spec, 0.5, 1.0 - c.value / 2.0);
    return AngularLimits{
        .theta_U = atan_degrees(scale.apply(rho_u)),
        .theta_C = center_angle(),
        .theta_L = atan_degrees(scale.apply(rho_l)),
    };
}

/// The Weibull-family constants ρ(1/2, c/2) and ρ(1/2, 1-c/2) for the unit
/// shape; at c = 0.0027 these are the tabulated 513.096 and 0.105.
inline std::pair<double, double> family_constant_check(FalseAlarmProb c) {
    validate(c);
    const double log_half = std::log(0.5);
    return {log_half / std::log1p(-c.value / 2.0), log_half / std::log(c.value / 2.0)};
}

}  // namespace acc
