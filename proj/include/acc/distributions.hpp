#pragma once

// Quantile, CDF, ratio-of-quantiles and inverse-transform sampling for the
// supported non-negative continuous lifetime distributions. Rayleigh is
// Weibull with shape 2; Erlang is Gamma with integer shape. Gamma has no
// closed-form quantile and is inverted numerically from its CDF.

#include <cmath>
#include <string>

#include "acc/error.hpp"
#include "acc/special.hpp"

namespace acc {

enum class DistributionFamily {
    Exponential,
    Weibull,
    Rayleigh,
    Lognormal,
    Frechet,
    Gamma,
    Erlang,
};

inline const char* family_name(DistributionFamily f) {
    switch (f) {
        case DistributionFamily::Exponential: return "exponential";
        case DistributionFamily::Weibull: return "weibull";
        case DistributionFamily::Rayleigh: return "rayleigh";
        case DistributionFamily::Lognormal: return "lognormal";
        case DistributionFamily::Frechet: return "frechet";
        case DistributionFamily::Gamma: return "gamma";
        case DistributionFamily::Erlang: return "erlang";
    }
    return "?";
}

/// One state transition's time-to-failure law. `scale` is α (for Lognormal
/// the underlying normal mean, any real); `shape` is β where the family has
/// one (fixed to 2 for Rayleigh, a positive integer for Erlang, unused for
/// Exponential).
struct DistributionSpec {
    DistributionFamily family{DistributionFamily::Exponential};
    double scale{1.0};
    double shape{1.0};

    static DistributionSpec exponential(double scale) {
        return {DistributionFamily::Exponential, scale, 1.0};
    }
    static DistributionSpec weibull(double scale, double shape) {
        return {DistributionFamily::Weibull, scale, shape};
    }
    static DistributionSpec rayleigh(double scale) {
        return {DistributionFamily::Rayleigh, scale, 2.0};
    }
    static DistributionSpec lognormal(double log_mean, double log_sd) {
        return {DistributionFamily::Lognormal, log_mean, log_sd};
    }
    static DistributionSpec frechet(double scale, double shape) {
        return {DistributionFamily::Frechet, scale, shape};
    }
    static DistributionSpec gamma(double scale, double shape) {
        return {DistributionFamily::Gamma, scale, shape};
    }
    static DistributionSpec erlang(double scale, int shape) {
        return {DistributionFamily::Erlang, scale, static_cast<double>(shape)};
    }
};

inline bool has_shape_parameter(DistributionFamily f) {
    return f != DistributionFamily::Exponential && f != DistributionFamily::Rayleigh;
}

inline void validate(const DistributionSpec& spec) {
    const bool lognormal = spec.family == DistributionFamily::Lognormal;
    if (!std::isfinite(spec.scale) || (!lognormal && spec.scale <= 0.0)) {
        throw ValidationError(std::string("invalid scale parameter for ") +
                              family_name(spec.family));
    }
    if (!std::isfinite(spec.shape) || spec.shape <= 0.0) {
        throw ValidationError(std::string("invalid shape parameter for ") +
                              family_name(spec.family));
    }
    if (spec.family == DistributionFamily::Rayleigh && spec.shape != 2.0) {
        throw ValidationError("rayleigh is weibull with shape fixed to 2");
    }
    if (spec.family == DistributionFamily::Erlang &&
        (spec.shape != std::floor(spec.shape) || spec.shape < 1.0)) {
        throw ValidationError("erlang shape must be a positive integer");
    }
}

namespace detail {

inline void require_interior(double p, const char* what) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(std::string(what) + ": probability must lie strictly inside (0,1)");
    }
}

inline double gamma_cdf_unit(double shape, double x) {
    return regularized_gamma_p(shape, x);
}

/// Gamma quantile at unit scale: bracketed bisection on the CDF. The bracket
/// upper bound shape + 40·sqrt(shape) + 40 covers p up to 1-1e-12 for any
/// practical shape. Bisection runs to 1e-14 relative so quantile ratios keep
/// the distributive identity to 1e-12.
inline double gamma_quantile_unit(double shape, double p) {
    double lo = 0.0;
    double hi = shape + 40.0 * std::sqrt(shape) + 40.0;
    if (gamma_cdf_unit(shape, hi) < p) {
        throw ConvergenceError("gamma quantile: bracket does not straddle p");
    }
    for (int i = 0; i < 200 && (hi - lo) > 1e-14 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (gamma_cdf_unit(shape, mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace detail

/// F⁻¹(p). Strictly increasing in p on (0,1); probabilities at exactly 0 or 1
/// are rejected (the limits are 0 and ∞).
inline double quantile(const DistributionSpec& spec, double p) {
    validate(spec);
    detail::require_interior(p, "quantile");
    switch (spec.family) {
        case DistributionFamily::Exponential:
            return -spec.scale * std::log1p(-p);
        case DistributionFamily::Weibull:
        case DistributionFamily::Rayleigh:
            return spec.scale * std::pow(-std::log1p(-p), 1.0 / spec.shape);
        case DistributionFamily::Lognormal:
            return std::exp(spec.scale + spec.shape * inverse_standard_normal(p));
        case DistributionFamily::Frechet:
            return spec.scale * std::pow(-std::log(p), -1.0 / spec.shape);
        case DistributionFamily::Gamma:
        case DistributionFamily::Erlang:
            return spec.scale * detail::gamma_quantile_unit(spec.shape, p);
    }
    throw ValidationError("unknown distribution family");
}

inline double cdf(const DistributionSpec& spec, double t) {
    validate(spec);
    if (t < 0.0) throw DomainError("cdf: t must be non-negative");
    switch (spec.family) {
        case DistributionFamily::Exponential:
            return -std::expm1(-t / spec.scale);
        case DistributionFamily::Weibull:
        case DistributionFamily::Rayleigh:
            return -std::expm1(-std::pow(t / spec.scale, spec.shape));
        case DistributionFamily::Lognormal:
            if (t == 0.0) return 0.0;
            return standard_normal_cdf((std::log(t) - spec.scale) / spec.shape);
        case DistributionFamily::Frechet:
            if (t == 0.0) return 0.0;
            return std::exp(-std::pow(t / spec.scale, -spec.shape));
        case DistributionFamily::Gamma:
        case DistributionFamily::Erlang:
            return detail::gamma_cdf_unit(spec.shape, t / spec.scale);
    }
    throw ValidationError("unknown distribution family");
}

/// ρ(a, b) = F⁻¹(a) / F⁻¹(b). The scale parameter cancels for every
/// supported family, so the computation never touches it: closed forms where
/// they exist, unit-scale numeric quantiles for Gamma/Erlang. Identical bits
/// for any two specs differing only in scale.
inline double ratio_of_quantiles(const DistributionSpec& spec, double a, double b) {
    validate(spec);
    detail::require_interior(a, "ratio_of_quantiles");
    detail::require_interior(b, "ratio_of_quantiles");
    switch (spec.family) {
        case DistributionFamily::Exponential:
            return std::log1p(-a) / std::log1p(-b);
        case DistributionFamily::Weibull:
        case DistributionFamily::Rayleigh:
            return std::pow(std::log1p(-a) / std::log1p(-b), 1.0 / spec.shape);
        case DistributionFamily::Lognormal:
            return std::exp(spec.shape *
                            (inverse_standard_normal(a) - inverse_standard_normal(b)));
        case DistributionFamily::Frechet:
            return std::pow(std::log(b) / std::log(a), 1.0 / spec.shape);
        case DistributionFamily::Gamma:
        case DistributionFamily::Erlang:
            return detail::gamma_quantile_unit(spec.shape, a) /
                   detail::gamma_quantile_unit(spec.shape, b);
    }
    throw ValidationError("unknown distribution family");
}

/// Inverse-transform sampling; RNG state lives with the caller.
inline double sample(const DistributionSpec& spec, double u) {
    return quantile(spec, u);
}

}  // namespace acc
