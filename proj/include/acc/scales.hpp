#pragma once

// Drawing scales: the axis mapping g applied to both chart axes. Only
// power-root mappings g(x) = x^(1/k) are constructible, so the admissibility
// condition g(x/y) = g(x)/g(y) holds by construction and angles stay free of
// the distributions' scale parameters.

#include <cmath>
#include <span>
#include <string>
#include <utility>

#include "acc/distributions.hpp"
#include "acc/error.hpp"

namespace acc {

struct DrawingScale {
    int root{1};  // g(x) = x^(1/root); root = 1 is the linear scale

    static DrawingScale linear() { return {1}; }
    static DrawingScale power_root(int k) {
        if (k < 1) throw ValidationError("drawing scale root must be a positive integer");
        return {k};
    }

    double apply(double x) const {
        if (x < 0.0) throw DomainError("drawing scale: x must be non-negative");
        if (root == 1) return x;
        if (root == 2) return std::sqrt(x);
        if (root == 3) return std::cbrt(x);
        return std::pow(x, 1.0 / root);
    }

    friend bool operator==(const DrawingScale&, const DrawingScale&) = default;
};

inline double apply(const DrawingScale& scale, double x) { return scale.apply(x); }

/// Config names: "linear" | "sqrt" | "cbrt" | "qrt".
inline DrawingScale scale_from_name(const std::string& name) {
    if (name == "linear") return DrawingScale::linear();
    if (name == "sqrt") return DrawingScale::power_root(2);
    if (name == "cbrt") return DrawingScale::power_root(3);
    if (name == "qrt") return DrawingScale::power_root(4);
    throw ValidationError("unknown drawing scale \"" + name +
                          "\" (expected linear, sqrt, cbrt or qrt)");
}

inline std::string scale_name(const DrawingScale& scale) {
    switch (scale.root) {
        case 1: return "linear";
        case 2: return "sqrt";
        case 3: return "cbrt";
        case 4: return "qrt";
        default: return "root" + std::to_string(scale.root);
    }
}

/// True iff g(F⁻¹(a))/g(F⁻¹(b)) = g(ρ(a,b)) to 1e-12 relative for every
/// pair. For power roots this is the identity the design guarantees; it is
/// exposed so tests can also show what a non-admissible mapping violates.
inline bool check_distributive(const DrawingScale& scale, const DistributionSpec& spec,
                               std::span<const std::pair<double, double>> pairs) {
    for (const auto& [a, b] : pairs) {
        const double lhs = scale.apply(quantile(spec, a)) / scale.apply(quantile(spec, b));
        const double rhs = scale.apply(ratio_of_quantiles(spec, a, b));
        if (std::abs(lhs - rhs) > 1e-12 * std::abs(rhs)) return false;
    }
    return true;
}

}  // namespace acc
