#pragma once

// Scalar special functions backing the lifetime distributions: standard
// normal CDF and quantile, and the regularized lower incomplete gamma.

#include <cmath>
#include <numbers>

#include "acc/error.hpp"

namespace acc {

inline double standard_normal_cdf(double x) {
    return 0.5 * std::erfc(-x / std::numbers::sqrt2);
}

inline double standard_normal_pdf(double x) {
    constexpr double inv_sqrt_2pi = 0.3989422804014327;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

/// Inverse standard normal CDF. Rational approximation (Acklam) refined by
/// one Newton step against the erfc-based CDF; absolute error < 1e-10.
inline double inverse_standard_normal(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("inverse_standard_normal: p must lie strictly inside (0,1)");
    }

    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};

    constexpr double p_low = 0.02425;
    double x;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log1p(-p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }

    // One Newton step; the density underflows only past |x| ~ 38, where the
    // rational approximation already carries the full double precision.
    const double density = standard_normal_pdf(x);
    if (density > 0.0) {
        x -= (standard_normal_cdf(x) - p) / density;
    }
    return x;
}

/// Regularized lower incomplete gamma P(a, x): series for x < a+1,
/// Lentz continued fraction for the complement otherwise.
inline double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0)) throw DomainError("regularized_gamma_p: a must be positive");
    if (x < 0.0) throw DomainError("regularized_gamma_p: x must be non-negative");
    if (x == 0.0) return 0.0;

    const double log_prefix = a * std::log(x) - x - std::lgamma(a);

    if (x < a + 1.0) {
        double term = 1.0 / a;
        double sum = term;
        double denom = a;
        for (int n = 0; n < 1000; ++n) {
            denom += 1.0;
            term *= x / denom;
            sum += term;
            if (std::abs(term) < std::abs(sum) * 1e-16) break;
        }
        return sum * std::exp(log_prefix);
    }

    // Continued fraction for Q(a, x), modified Lentz.
    constexpr double tiny = 1e-300;
    double bb = x + 1.0 - a;
    double cc = 1.0 / tiny;
    double dd = 1.0 / bb;
    double h = dd;
    for (int i = 1; i <= 1000; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        bb += 2.0;
        dd = an * dd + bb;
        if (std::abs(dd) < tiny) dd = tiny;
        cc = bb + an / cc;
        if (std::abs(cc) < tiny) cc = tiny;
        dd = 1.0 / dd;
        const double delta = dd * cc;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    const double q = std::exp(log_prefix) * h;
    return 1.0 - q;
}

}  // namespace acc
