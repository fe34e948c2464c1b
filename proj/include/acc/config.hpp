#pragma once

// File formats: the JSON system/scenario configs and the seq,state,ttf
// observation CSV. Parse errors carry 1-based line numbers; semantic errors
// name the offending state.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "acc/chart.hpp"
#include "acc/error.hpp"
#include "acc/simulate.hpp"

namespace acc {

enum class DesignChoice { Standard, Generalized, Auto };

/// Parsed system config: the model plus the requested chart design.
struct SystemConfig {
    SystemModel system;
    DesignChoice design{DesignChoice::Auto};
};

/// Auto selects standard when the states allow it, generalized otherwise.
inline Design resolve_design(const SystemConfig& config) {
    switch (config.design) {
        case DesignChoice::Standard: return Design::Standard;
        case DesignChoice::Generalized: return Design::Generalized;
        case DesignChoice::Auto: break;
    }
    try {
        validate_standard(config.system);
        return Design::Standard;
    } catch (const MixedFamilyError&) {
        return Design::Generalized;
    } catch (const MixedShapeError&) {
        return Design::Generalized;
    }
}

namespace detail {

inline std::size_t line_of_offset(const std::string& text, std::size_t byte) {
    return 1 + static_cast<std::size_t>(
                   std::count(text.begin(), text.begin() + static_cast<long>(std::min(byte, text.size())), '\n'));
}

inline nlohmann::json parse_json(const std::string& text, const char* what) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string(what) + ": line " +
                         std::to_string(line_of_offset(text, e.byte)) + ": " + e.what());
    }
}

inline DistributionFamily family_from_name(const std::string& name) {
    for (DistributionFamily f :
         {DistributionFamily::Exponential, DistributionFamily::Weibull,
          DistributionFamily::Rayleigh, DistributionFamily::Lognormal,
          DistributionFamily::Frechet, DistributionFamily::Gamma, DistributionFamily::Erlang}) {
        if (name == family_name(f)) return f;
    }
    throw ParseError("unknown distribution family \"" + name + "\"");
}

inline DistributionSpec spec_from_json(const nlohmann::json& j, const std::string& where) {
    if (!j.contains("family") || !j.contains("scale")) {
        throw ParseError(where + ": a state needs \"family\" and \"scale\"");
    }
    DistributionSpec spec;
    try {
        spec.family = family_from_name(j.at("family").get<std::string>());
        spec.scale = j.at("scale").get<double>();
        if (has_shape_parameter(spec.family)) {
            if (!j.contains("shape")) {
                throw ParseError(where + ": family \"" +
                                 std::string(family_name(spec.family)) +
                                 "\" needs a \"shape\" parameter");
            }
            spec.shape = j.at("shape").get<double>();
        } else {
            if (j.contains("shape")) {
                throw ParseError(where + ": family \"" +
                                 std::string(family_name(spec.family)) +
                                 "\" takes no shape parameter");
            }
            spec.shape = spec.family == DistributionFamily::Rayleigh ? 2.0 : 1.0;
        }
        validate(spec);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
    return spec;
}

inline SystemModel system_from_json(const nlohmann::json& j) {
    SystemModel system;
    if (j.contains("c")) system.c.value = j.at("c").get<double>();
    if (j.contains("drawing_scale")) {
        system.scale = scale_from_name(j.at("drawing_scale").get<std::string>());
    }
    if (!j.contains("states") || !j.at("states").is_array() || j.at("states").empty()) {
        throw ParseError("config: \"states\" must be a non-empty array");
    }
    std::size_t index = 1;
    for (const auto& js : j.at("states")) {
        StateTransition st;
        st.label = js.value("label", "S" + std::to_string(index));
        st.spec = spec_from_json(js, "state \"" + st.label + "\"");
        system.states.push_back(std::move(st));
        ++index;
    }
    validate(system.c);
    // Limits this close to the median carry no monitoring meaning.
    if (system.c.value >= 0.5) {
        throw ValidationError("degenerate limits: false-alarm probability " +
                              std::to_string(system.c.value) +
                              " puts the control limits at or inside the central quartiles");
    }
    validate(system);
    return system;
}

}  // namespace detail

inline SystemConfig parse_system_config(const std::string& text) {
    const nlohmann::json j = detail::parse_json(text, "config");
    SystemConfig config;
    config.system = detail::system_from_json(j);
    const std::string design = j.value("design", "auto");
    if (design == "standard") {
        config.design = DesignChoice::Standard;
    } else if (design == "generalized") {
        config.design = DesignChoice::Generalized;
    } else if (design == "auto") {
        config.design = DesignChoice::Auto;
    } else {
        throw ParseError("config: design must be standard, generalized or auto");
    }
    return config;
}

/// Resolve a CSV/JSON state reference: labels win over 1-based indices.
inline int resolve_state(const SystemModel& system, const std::string& token) {
    for (std::size_t i = 0; i < system.states.size(); ++i) {
        if (system.states[i].label == token) return static_cast<int>(i) + 1;
    }
    try {
        std::size_t pos = 0;
        const int index = std::stoi(token, &pos);
        if (pos == token.size() && index >= 1 &&
            static_cast<std::size_t>(index) <= system.states.size()) {
            return index;
        }
    } catch (const std::exception&) {
    }
    throw ParseError("unknown state \"" + token + "\"");
}

inline Scenario parse_scenario(const std::string& text) {
    const nlohmann::json j = detail::parse_json(text, "scenario");
    if (!j.contains("system")) throw ParseError("scenario: missing \"system\"");
    Scenario scenario;
    scenario.system = detail::system_from_json(j.at("system"));
    scenario.seed = j.value("seed", 0ULL);
    if (!j.contains("phases") || !j.at("phases").is_array()) {
        throw ParseError("scenario: \"phases\" must be an array");
    }
    for (const auto& jp : j.at("phases")) {
        Phase phase;
        phase.n_events = jp.value("events", 0ULL);
        if (jp.contains("weights")) {
            phase.weights = jp.at("weights").get<std::vector<double>>();
        }
        if (jp.contains("overrides")) {
            for (const auto& jo : jp.at("overrides")) {
                if (!jo.contains("state")) {
                    throw ParseError("scenario: an override needs a \"state\"");
                }
                const std::string token = jo.at("state").is_string()
                                              ? jo.at("state").get<std::string>()
                                              : std::to_string(jo.at("state").get<int>());
                const int index = resolve_state(scenario.system, token);
                phase.overrides.emplace_back(
                    index, detail::spec_from_json(jo, "override for state \"" + token + "\""));
            }
        }
        scenario.phases.push_back(std::move(phase));
    }
    validate(scenario);
    return scenario;
}

namespace detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream stream(line);
    while (std::getline(stream, field, ',')) fields.push_back(trim(field));
    return fields;
}

}  // namespace detail

/// Observation CSV: header `seq,state,ttf`; state is a label or a 1-based
/// index when `system` is given, otherwise a 1-based index.
inline std::vector<Observation> read_observations_csv(const std::string& text,
                                                      const SystemModel* system = nullptr) {
    std::istringstream stream(text);
    std::string line;
    std::size_t line_no = 0;
    std::vector<Observation> out;
    long last_seq = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::string stripped = detail::trim(line);
        if (stripped.empty()) continue;
        if (line_no == 1) {
            if (detail::split_fields(stripped) != std::vector<std::string>{"seq", "state", "ttf"}) {
                throw ParseError("line 1: expected header \"seq,state,ttf\"");
            }
            continue;
        }
        const auto fields = detail::split_fields(stripped);
        if (fields.size() != 3) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 3 fields");
        }
        Observation obs;
        try {
            std::size_t pos = 0;
            obs.seq = std::stol(fields[0], &pos);
            if (pos != fields[0].size()) throw ParseError("bad seq");
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad seq \"" + fields[0] +
                             "\"");
        }
        if (obs.seq <= last_seq) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": seq must be strictly increasing");
        }
        last_seq = obs.seq;
        if (fields[1].empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": missing state");
        }
        try {
            if (system != nullptr) {
                obs.state_index = resolve_state(*system, fields[1]);
            } else {
                std::size_t pos = 0;
                obs.state_index = std::stoi(fields[1], &pos);
                if (pos != fields[1].size() || obs.state_index < 1) throw ParseError("bad state");
            }
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": unknown state \"" +
                             fields[1] + "\"");
        }
        try {
            std::size_t pos = 0;
            obs.ttf = std::stod(fields[2], &pos);
            if (pos != fields[2].size() || !(obs.ttf >= 0.0)) throw ParseError("bad ttf");
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(line_no) + ": bad ttf \"" + fields[2] +
                             "\" (non-negative decimal expected)");
        }
        out.push_back(obs);
    }
    return out;
}

/// TTFs are written with two decimals, the precision of the source tables.
inline std::string write_observations_csv(const std::vector<Observation>& observations) {
    std::string out = "seq,state,ttf\n";
    char buf[64];
    for (const auto& obs : observations) {
        std::snprintf(buf, sizeof(buf), "%ld,%d,%.2f\n", obs.seq, obs.state_index, obs.ttf);
        out += buf;
    }
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

/// Full-precision machine-readable view of a classified chart.
inline nlohmann::json classification_json(const Chart& chart) {
    const MedianSplit split = median_split(chart);
    nlohmann::json j;
    j["design"] = design_name(chart.design);
    j["c"] = chart.system.c.value;
    j["drawing_scale"] = scale_name(chart.system.scale);
    j["states"] = nlohmann::json::array();
    for (std::size_t i = 0; i < chart.states.size(); ++i) {
        const auto& line = chart.states[i];
        const auto& spec = chart.system.states[i].spec;
        nlohmann::json js{
            {"label", line.label},
            {"family", family_name(spec.family)},
            {"scale", spec.scale},
            {"t_l", line.t_l},
            {"t_c", line.t_c},
            {"t_u", line.t_u},
            {"theta_u", line.angles.theta_U},
            {"theta_c", line.angles.theta_C},
            {"theta_l", line.angles.theta_L},
        };
        if (has_shape_parameter(spec.family)) js["shape"] = spec.shape;
        j["states"].push_back(std::move(js));
    }
    j["points"] = nlohmann::json::array();
    for (const auto& p : chart.points) {
        j["points"].push_back(nlohmann::json{
            {"seq", p.observation.seq},
            {"state", chart.states[static_cast<std::size_t>(p.observation.state_index - 1)].label},
            {"ttf", p.observation.ttf},
            {"theta", p.theta},
            {"status", status_name(p.status)},
            {"above_center", band_name(p.above_center)},
        });
    }
    auto counts_json = [](const SplitCounts& counts) {
        return nlohmann::json{{"above", counts.above}, {"below", counts.below}, {"on", counts.on}};
    };
    j["median_split"]["overall"] = counts_json(split.overall);
    j["median_split"]["per_state"] = nlohmann::json::object();
    for (std::size_t i = 0; i < chart.states.size(); ++i) {
        j["median_split"]["per_state"][chart.states[i].label] = counts_json(split.per_state[i]);
    }
    j["out_of_control"] = chart.out_of_control_count();
    return j;
}

}  // namespace acc
