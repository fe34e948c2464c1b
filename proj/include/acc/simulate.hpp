#pragma once

// Deterministic TTF dataset generation (phased scenarios with per-state
// override specs), r-failure aggregation, the Erlang lift for aggregated
// exponential systems, and Monte Carlo false-alarm estimation.

#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "acc/chart.hpp"
#include "acc/distributions.hpp"
#include "acc/error.hpp"
#include "acc/rng.hpp"

namespace acc {

/// One simulation regime: how many events to draw, with what state-selection
/// weights, and which states run under shifted distributions.
struct Phase {
    std::size_t n_events{};
    std::vector<double> weights;  // per state; empty means uniform
    std::vector<std::pair<int, DistributionSpec>> overrides;  // 1-based state index
};

struct Scenario {
    SystemModel system;
    std::vector<Phase> phases;
    std::uint64_t seed{};
};

inline void validate(const Scenario& scenario) {
    validate(scenario.system);
    const std::size_t n_states = scenario.system.states.size();
    for (const auto& phase : scenario.phases) {
        if (!phase.weights.empty()) {
            if (phase.weights.size() != n_states) {
                throw ValidationError("phase weights must list one weight per state");
            }
            double total = 0.0;
            for (double w : phase.weights) {
                if (!(w >= 0.0)) throw ValidationError("phase weights must be non-negative");
                total += w;
            }
            if (!(total > 0.0)) throw ValidationError("phase weights must not all be zero");
        }
        for (const auto& [index, spec] : phase.overrides) {
            if (index < 1 || static_cast<std::size_t>(index) > n_states) {
                throw ValidationError("phase override references unknown state index " +
                                      std::to_string(index));
            }
            validate(spec);
        }
    }
}

namespace detail {

inline int draw_state(const std::vector<double>& weights, std::size_t n_states, double u) {
    if (weights.empty()) {
        auto idx = static_cast<std::size_t>(u * static_cast<double>(n_states));
        if (idx >= n_states) idx = n_states - 1;
        return static_cast<int>(idx) + 1;
    }
    double total = 0.0;
    for (double w : weights) total += w;
    double acc = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        acc += weights[i];
        if (u * total <= acc) return static_cast<int>(i) + 1;
    }
    return static_cast<int>(weights.size());
}

}  // namespace detail

/// Draw every event from substream (phase, event): a state by the phase
/// weights, then a TTF by inverse transform from the phase's spec for that
/// state. Identical output for identical (scenario, seed).
inline std::vector<Observation> run_scenario(const Scenario& scenario) {
    validate(scenario);
    const std::size_t n_states = scenario.system.states.size();

    std::vector<Observation> out;
    long seq = 0;
    for (std::size_t p = 0; p < scenario.phases.size(); ++p) {
        const Phase& phase = scenario.phases[p];

        // Effective generation spec per state in this phase.
        std::vector<DistributionSpec> specs;
        specs.reserve(n_states);
        for (const auto& st : scenario.system.states) specs.push_back(st.spec);
        for (const auto& [index, spec] : phase.overrides) {
            specs[static_cast<std::size_t>(index - 1)] = spec;
        }

        for (std::size_t e = 0; e < phase.n_events; ++e) {
            SplitMix64 rng = substream(scenario.seed, p, e);
            const int state = detail::draw_state(phase.weights, n_states, rng.next_unit());
            const double ttf = sample(specs[static_cast<std::size_t>(state - 1)], rng.next_unit());
            out.push_back(Observation{++seq, state, ttf});
        }
    }
    return out;
}

/// Sum every r consecutive TTFs of a state into one observation, ordered by
/// the completing event; a trailing incomplete group is dropped.
inline std::vector<Observation> aggregate_r(const std::vector<Observation>& observations,
                                            std::size_t r) {
    if (r < 1) throw ValidationError("aggregation count r must be at least 1");
    if (r == 1) return observations;

    struct Bucket {
        double sum{};
        std::size_t count{};
    };
    std::vector<Bucket> buckets;
    std::vector<Observation> out;
    for (const auto& obs : observations) {
        if (obs.state_index < 1) {
            throw ValidationError("observation " + std::to_string(obs.seq) +
                                  " has invalid state index");
        }
        const auto idx = static_cast<std::size_t>(obs.state_index - 1);
        if (idx >= buckets.size()) buckets.resize(idx + 1);
        Bucket& bucket = buckets[idx];
        bucket.sum += obs.ttf;
        if (++bucket.count == r) {
            out.push_back(Observation{static_cast<long>(out.size()) + 1, obs.state_index,
                                      bucket.sum});
            bucket = Bucket{};
        }
    }
    return out;
}

/// Model the r-aggregated system: each Exponential(α) state becomes
/// Erlang(shape r, scale α). Only exponential states have the required
/// limiting sum distribution.
inline SystemModel erlang_lift(const SystemModel& system, std::size_t r) {
    validate(system);
    if (r < 1) throw ValidationError("aggregation count r must be at least 1");
    SystemModel lifted = system;
    for (auto& st : lifted.states) {
        if (st.spec.family != DistributionFamily::Exponential) {
            throw ValidationError("erlang lift requires exponential states; state \"" +
                                  st.label + "\" is " + family_name(st.spec.family));
        }
        st.spec = DistributionSpec::erlang(st.spec.scale, static_cast<int>(r));
    }
    return lifted;
}

/// Fraction of n in-control inverse-transform samples that classify
/// out-of-control. Sample i draws from substream (i, 0), so the count is
/// independent of the thread split.
inline double estimate_false_alarm_rate(const DistributionSpec& spec, FalseAlarmProb c,
                                        const DrawingScale& scale, std::size_t n,
                                        std::uint64_t seed, unsigned threads = 0) {
    validate(spec);
    validate(c);
    if (n < 10000) throw DomainError("estimate_false_alarm_rate: n must be at least 10^4");

    const double t_c = quantile(spec, 0.5);
    const AngularLimits limits = limit_angles(spec, c, scale);

    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
        if (threads > 8) threads = 8;
    }

    auto count_range = [&](std::size_t begin, std::size_t end) {
        std::size_t hits = 0;
        for (std::size_t i = begin; i < end; ++i) {
            const double u = substream(seed, i, 0).next_unit();
            const double t = sample(spec, u);
            const double theta = point_angle(t_c, t, scale);
            if (classify(theta, limits) != Status::InControl) ++hits;
        }
        return hits;
    };

    std::vector<std::size_t> partial(threads, 0);
    {
        std::vector<std::jthread> pool;
        const std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t begin = std::min<std::size_t>(t * chunk, n);
            const std::size_t end = std::min<std::size_t>(begin + chunk, n);
            pool.emplace_back([&, begin, end, t] { partial[t] = count_range(begin, end); });
        }
    }
    std::size_t total = 0;
    for (std::size_t hits : partial) total += hits;
    return static_cast<double>(total) / static_cast<double>(n);
}

}  // namespace acc
