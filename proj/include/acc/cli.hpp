#pragma once

// Command-line front end. Exit codes: 0 everything in control (or the
// command has no control verdict), 2 at least one out-of-control point,
// 1 usage, parse or validation failure.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "acc/chart.hpp"
#include "acc/config.hpp"
#include "acc/oracle.hpp"
#include "acc/render.hpp"
#include "acc/simulate.hpp"

namespace acc {

namespace cli_detail {

inline void print_limits_table(std::ostream& out, const Chart& chart) {
    out << "design: " << design_name(chart.design) << "   c: " << chart.system.c.value
        << "   scale: " << scale_name(chart.system.scale) << "\n";
    char header[160];
    std::snprintf(header, sizeof(header), "%-6s %-12s %12s %12s %12s %9s %9s %9s\n", "state",
                  "family", "T_L", "T_C", "T_U", "theta_U", "theta_C", "theta_L");
    out << header;
    for (std::size_t i = 0; i < chart.states.size(); ++i) {
        const auto& line = chart.states[i];
        const auto& spec = chart.system.states[i].spec;
        char row[200];
        std::snprintf(row, sizeof(row), "%-6s %-12s %12.6g %12.6g %12.6g %9.2f %9.2f %9.2f\n",
                      line.label.c_str(), family_name(spec.family), line.t_l, line.t_c,
                      line.t_u, line.angles.theta_U, line.angles.theta_C, line.angles.theta_L);
        out << row;
    }
}

inline void print_classification_table(std::ostream& out, const Chart& chart) {
    char header[120];
    std::snprintf(header, sizeof(header), "%5s %-6s %12s %8s %-12s %-6s\n", "seq", "state",
                  "ttf", "theta", "status", "side");
    out << header;
    for (const auto& p : chart.points) {
        const auto& label =
            chart.states[static_cast<std::size_t>(p.observation.state_index - 1)].label;
        char row[160];
        std::snprintf(row, sizeof(row), "%5ld %-6s %12.2f %8.2f %-12s %-6s\n", p.observation.seq,
                      label.c_str(), p.observation.ttf, p.theta, status_name(p.status),
                      band_name(p.above_center));
        out << row;
    }
    const MedianSplit split = median_split(chart);
    out << "median split: overall above=" << split.overall.above
        << " below=" << split.overall.below << " on=" << split.overall.on << "\n";
    for (std::size_t i = 0; i < chart.states.size(); ++i) {
        const auto& counts = split.per_state[i];
        out << "  " << chart.states[i].label << ": above=" << counts.above
            << " below=" << counts.below << " on=" << counts.on << "\n";
    }
    out << "out of control: " << chart.out_of_control_count() << "\n";
}

inline Chart chart_from_files(const std::string& config_path, const std::string& data_path) {
    const SystemConfig config = parse_system_config(read_file(config_path));
    const auto observations = read_observations_csv(read_file(data_path), &config.system);
    return build_chart(config.system, resolve_design(config), observations);
}

}  // namespace cli_detail

/// Run the CLI on `args` (no program name). Streams default to stdout/stderr.
inline int run_cli(std::vector<std::string> args, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
    CLI::App app{"Angular control charts for multi-state system reliability monitoring"};
    app.require_subcommand(1);

    std::string config_path;
    std::string data_path;
    std::string out_path;
    std::string json_out_path;
    std::string scenario_path;
    std::uint64_t seed = 0;
    std::size_t r_count = 2;
    bool as_json = false;
    double width = RenderOptions{}.width;
    double height = RenderOptions{}.height;

    auto* limits = app.add_subcommand("limits", "Per-state limit times and limit angles");
    limits->add_option("--config", config_path, "system config (JSON)")->required();
    limits->add_flag("--json", as_json, "machine-readable output");

    auto* classify = app.add_subcommand("classify", "Classify an observation CSV");
    classify->add_option("--config", config_path, "system config (JSON)")->required();
    classify->add_option("--data", data_path, "observation CSV")->required();
    classify->add_flag("--json", as_json, "machine-readable output");

    auto* chart_cmd = app.add_subcommand("chart", "Render the chart SVG plus classification JSON");
    chart_cmd->add_option("--config", config_path, "system config (JSON)")->required();
    chart_cmd->add_option("--data", data_path, "observation CSV")->required();
    chart_cmd->add_option("--out", out_path, "output SVG path")->required();
    chart_cmd->add_option("--json-out", json_out_path,
                          "classification JSON path (default: the SVG path with .json)");
    chart_cmd->add_option("--width", width, "canvas width in pixels");
    chart_cmd->add_option("--height", height, "canvas height in pixels");

    auto* simulate_cmd = app.add_subcommand("simulate", "Generate a TTF dataset from a scenario");
    simulate_cmd->add_option("--scenario", scenario_path, "scenario config (JSON)")->required();
    simulate_cmd->add_option("--seed", seed, "64-bit RNG seed (overrides the scenario's)");
    simulate_cmd->add_option("--out", out_path, "output CSV path")->required();

    auto* aggregate_cmd =
        app.add_subcommand("aggregate", "Sum every r consecutive TTFs per state");
    aggregate_cmd->add_option("--r", r_count, "failures per group")->required();
    aggregate_cmd->add_option("--data", data_path, "observation CSV")->required();
    aggregate_cmd->add_option("--out", out_path, "output CSV path (default: stdout)");
    aggregate_cmd->add_option("--config", config_path, "system config, for label resolution");

    auto* verify_cmd =
        app.add_subcommand("verify", "Closed-form vs bisected angles over the default grid");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (limits->parsed()) {
            const SystemConfig config = parse_system_config(read_file(config_path));
            const Chart chart = build_chart(config.system, resolve_design(config), {});
            if (as_json) {
                out << classification_json(chart).dump(2) << "\n";
            } else {
                cli_detail::print_limits_table(out, chart);
            }
            return 0;
        }

        if (classify->parsed()) {
            const Chart chart = cli_detail::chart_from_files(config_path, data_path);
            if (as_json) {
                out << classification_json(chart).dump(2) << "\n";
            } else {
                cli_detail::print_classification_table(out, chart);
            }
            return chart.out_of_control_count() == 0 ? 0 : 2;
        }

        if (chart_cmd->parsed()) {
            const Chart chart = cli_detail::chart_from_files(config_path, data_path);
            RenderOptions options;
            options.width = width;
            options.height = height;
            write_file(out_path, render_svg(chart, options));
            if (json_out_path.empty()) {
                const auto dot = out_path.find_last_of('.');
                const auto sep = out_path.find_last_of("/\\");
                const bool has_ext =
                    dot != std::string::npos && (sep == std::string::npos || dot > sep);
                json_out_path = (has_ext ? out_path.substr(0, dot) : out_path) + ".json";
            }
            write_file(json_out_path, classification_json(chart).dump(2) + "\n");
            out << "wrote " << out_path << " and " << json_out_path << "\n";
            return chart.out_of_control_count() == 0 ? 0 : 2;
        }

        if (simulate_cmd->parsed()) {
            Scenario scenario = parse_scenario(read_file(scenario_path));
            if (simulate_cmd->count("--seed") > 0) scenario.seed = seed;
            write_file(out_path, write_observations_csv(run_scenario(scenario)));
            out << "wrote " << out_path << "\n";
            return 0;
        }

        if (aggregate_cmd->parsed()) {
            const SystemModel* system = nullptr;
            SystemConfig config;
            if (!config_path.empty()) {
                config = parse_system_config(read_file(config_path));
                system = &config.system;
            }
            const auto observations = read_observations_csv(read_file(data_path), system);
            const std::string csv = write_observations_csv(aggregate_r(observations, r_count));
            if (out_path.empty()) {
                out << csv;
            } else {
                write_file(out_path, csv);
                out << "wrote " << out_path << "\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            bool all_pass = true;
            for (const auto& entry : run_default_sweep()) {
                all_pass = all_pass && entry.report.pass;
                char line[200];
                std::snprintf(line, sizeof(line),
                              "%-4s %-12s shape=%-4g scale=%-6s max_dev=%.3e deg\n",
                              entry.report.pass ? "ok" : "FAIL",
                              family_name(entry.spec.family), entry.spec.shape,
                              scale_name(entry.scale).c_str(), entry.report.max_deviation);
                out << line;
            }
            out << (all_pass ? "verification sweep passed\n" : "verification sweep FAILED\n");
            return all_pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace acc
