#pragma once

// Chart model: a multi-state system, its per-state probability limit times
// and limit angles, and the classified observations. Standard design needs
// every state on one family/shape so a single set of limit angles serves all
// state lines; generalized design carries per-state angles.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "acc/acl.hpp"
#include "acc/distributions.hpp"
#include "acc/error.hpp"
#include "acc/scales.hpp"

namespace acc {

struct StateTransition {
    std::string label;  // "S1", "S2", ...
    DistributionSpec spec;
};

struct SystemModel {
    std::vector<StateTransition> states;  // S1..Sn, in declaration order
    FalseAlarmProb c{};
    DrawingScale scale{DrawingScale::power_root(3)};
};

inline void validate(const SystemModel& system) {
    if (system.states.empty()) throw ValidationError("system needs at least one state");
    validate(system.c);
    for (std::size_t i = 0; i < system.states.size(); ++i) {
        const auto& st = system.states[i];
        if (st.label.empty()) throw ValidationError("state labels must be non-empty");
        validate(st.spec);
        for (std::size_t j = i + 1; j < system.states.size(); ++j) {
            if (system.states[j].label == st.label) {
                throw ValidationError("duplicate state label \"" + st.label + "\"");
            }
        }
    }
}

struct Observation {
    long seq{};       // event order, strictly increasing within a dataset
    int state_index{};  // 1-based
    double ttf{};
};

enum class Status { Improvement, InControl, Degradation };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Improvement: return "improvement";
        case Status::InControl: return "in_control";
        case Status::Degradation: return "degradation";
    }
    return "?";
}

/// Side of the 45° center line a point falls on.
enum class Band { Above, Below, On };

inline const char* band_name(Band b) {
    switch (b) {
        case Band::Above: return "above";
        case Band::Below: return "below";
        case Band::On: return "on";
    }
    return "?";
}

struct ClassifiedPoint {
    Observation observation;
    double t_c{};       // the state's median TTF
    double theta{};     // degrees
    Status status{Status::InControl};
    Band above_center{Band::On};
};

enum class Design { Standard, Generalized };

inline const char* design_name(Design d) {
    return d == Design::Standard ? "standard" : "generalized";
}

/// One state line: the probability limit times and the limit angles.
struct StateLine {
    std::string label;
    double t_l{};
    double t_c{};
    double t_u{};
    AngularLimits angles;
};

struct Chart {
    SystemModel system;
    Design design{Design::Standard};
    std::vector<StateLine> states;       // aligned with system.states
    std::vector<ClassifiedPoint> points;  // input order

    /// State indices sorted by ascending median, the vertical order of the
    /// state lines on the chart.
    std::vector<std::size_t> order_by_center() const {
        std::vector<std::size_t> idx(states.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return states[a].t_c < states[b].t_c; });
        return idx;
    }

    std::size_t out_of_control_count() const {
        return static_cast<std::size_t>(
            std::count_if(points.begin(), points.end(), [](const ClassifiedPoint& p) {
                return p.status != Status::InControl;
            }));
    }
};

/// Standard design requires one family and (where present) one shape across
/// all states; scale parameters may differ.
inline void validate_standard(const SystemModel& system) {
    validate(system);
    const auto& first = system.states.front();
    for (const auto& st : system.states) {
        if (st.spec.family != first.spec.family) {
            throw MixedFamilyError("standard design needs a single family: state \"" +
                                   first.label + "\" is " + family_name(first.spec.family) +
                                   " but \"" + st.label + "\" is " +
                                   family_name(st.spec.family));
        }
        if (has_shape_parameter(st.spec.family) && st.spec.shape != first.spec.shape) {
            throw MixedShapeError("standard design needs a single shape: states \"" +
                                  first.label + "\" and \"" + st.label +
                                  "\" differ in shape parameter");
        }
    }
}

/// Angle of the ray from the origin to a point on the state line at median
/// t_c with abscissa t, in the g-transformed coordinates. t = 0 is the
/// limiting instant failure at 90°.
inline double point_angle(double t_c, double t, const DrawingScale& scale) {
    if (!(t_c > 0.0)) throw DomainError("point_angle: t_c must be positive");
    if (t < 0.0) throw DomainError("point_angle: t must be non-negative");
    if (t == 0.0) return 90.0;
    return atan_degrees(scale.apply(t_c) / scale.apply(t));
}

/// Boundary angles are in-control: θ_U ≤ θ ≤ θ_L.
inline Status classify(double theta, const AngularLimits& limits) {
    if (theta < limits.theta_U) return Status::Improvement;
    if (theta > limits.theta_L) return Status::Degradation;
    return Status::InControl;
}

inline Band band_of(double theta) {
    if (std::abs(theta - 45.0) <= 1e-12) return Band::On;
    return theta > 45.0 ? Band::Above : Band::Below;
}

inline Chart build_chart(const SystemModel& system, Design design,
                         const std::vector<Observation>& observations) {
    if (design == Design::Standard) {
        validate_standard(system);
    } else {
        validate(system);
    }

    Chart chart;
    chart.system = system;
    chart.design = design;
    chart.states.reserve(system.states.size());
    for (const auto& st : system.states) {
        chart.states.push_back(StateLine{
            .label = st.label,
            .t_l = quantile(st.spec, system.c.value / 2.0),
            .t_c = quantile(st.spec, 0.5),
            .t_u = quantile(st.spec, 1.0 - system.c.value / 2.0),
            .angles = limit_angles(st.spec, system.c, system.scale),
        });
    }

    chart.points.reserve(observations.size());
    for (const auto& obs : observations) {
        if (obs.state_index < 1 ||
            static_cast<std::size_t>(obs.state_index) > chart.states.size()) {
            throw ValidationError("observation " + std::to_string(obs.seq) +
                                  " references unknown state index " +
                                  std::to_string(obs.state_index));
        }
        const auto& line = chart.states[static_cast<std::size_t>(obs.state_index - 1)];
        const double theta = point_angle(line.t_c, obs.ttf, system.scale);
        chart.points.push_back(ClassifiedPoint{
            .observation = obs,
            .t_c = line.t_c,
            .theta = theta,
            .status = classify(theta, line.angles),
            .above_center = band_of(theta),
        });
    }
    return chart;
}

struct SplitCounts {
    std::size_t above{};
    std::size_t below{};
    std::size_t on{};
};

struct MedianSplit {
    SplitCounts overall;
    std::vector<SplitCounts> per_state;  // aligned with chart.states
};

/// Roughly half the in-control points should sit on each side of the 45°
/// center line, per state and overall.
inline MedianSplit median_split(const Chart& chart) {
    MedianSplit split;
    split.per_state.resize(chart.states.size());
    for (const auto& p : chart.points) {
        auto& state = split.per_state[static_cast<std::size_t>(p.observation.state_index - 1)];
        switch (p.above_center) {
            case Band::Above:
                ++split.overall.above;
                ++state.above;
                break;
            case Band::Below:
                ++split.overall.below;
                ++state.below;
                break;
            case Band::On:
                ++split.overall.on;
                ++state.on;
                break;
        }
    }
    return split;
}

}  // namespace acc
