#pragma once

// Deterministic SVG 1.1 rendering. Both axes carry the g-transformed
// coordinates, each state is a horizontal line at height g(T_C), and ACLs
// are straight rays from the origin (standard design) or polylines crossing
// every state line at its own g(T_L)/g(T_C)/g(T_U) (generalized design).
// Identical chart + options always produce identical bytes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "acc/chart.hpp"
#include "acc/error.hpp"

namespace acc {

struct RenderOptions {
    double width{920.0};
    double height{560.0};
    double margin{56.0};
    double marker_radius{3.5};
    double coincidence_offset{5.0};  // vertical pixels between stacked markers
    std::string color_in_control{"#2b2b2b"};
    std::string color_degradation{"#d62728"};
    std::string color_improvement{"#1f77b4"};
};

/// Chart-space placement (after the drawing scale, before pixel mapping).
struct PointPlacement {
    std::size_t point_index{};
    double x{};
    double y{};
};

struct ChartLayout {
    double x_max{};
    double y_max{};
    std::vector<double> state_y;  // g(T_C), aligned with chart.states
    std::vector<PointPlacement> points;
};

/// Chart-space geometry shared by the renderer and its tests: y/x of a
/// placement equals tan(theta) of its point.
inline ChartLayout layout_chart(const Chart& chart) {
    const DrawingScale& g = chart.system.scale;
    ChartLayout layout;
    layout.state_y.reserve(chart.states.size());
    double max_x = 0.0;
    double max_y = 0.0;
    for (const auto& line : chart.states) {
        const double y = g.apply(line.t_c);
        layout.state_y.push_back(y);
        max_y = std::max(max_y, y);
        max_x = std::max(max_x, g.apply(line.t_u));
    }
    layout.points.reserve(chart.points.size());
    for (std::size_t i = 0; i < chart.points.size(); ++i) {
        const auto& p = chart.points[i];
        const double x = g.apply(p.observation.ttf);
        const double y = layout.state_y[static_cast<std::size_t>(p.observation.state_index - 1)];
        layout.points.push_back(PointPlacement{i, x, y});
        max_x = std::max(max_x, x);
    }
    layout.x_max = 1.05 * max_x;
    layout.y_max = 1.12 * max_y;
    return layout;
}

namespace detail {

inline std::string fmt2(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string fmt_tick(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

struct PixelMap {
    double margin, width, height, x_max, y_max;
    double px(double x) const { return margin + x / x_max * (width - 2.0 * margin); }
    double py(double y) const { return height - margin - y / y_max * (height - 2.0 * margin); }
};

/// Where the ray y = slope*x from the origin leaves the chart extent.
inline std::pair<double, double> clip_ray(double slope, double x_max, double y_max) {
    if (slope * x_max <= y_max) return {x_max, slope * x_max};
    return {y_max / slope, y_max};
}

inline void emit_line(std::string& svg, const PixelMap& m, const char* cls, double x1,
                      double y1, double x2, double y2, const char* style) {
    svg += "  <line class=\"" + std::string(cls) + "\" x1=\"" + fmt2(m.px(x1)) + "\" y1=\"" +
           fmt2(m.py(y1)) + "\" x2=\"" + fmt2(m.px(x2)) + "\" y2=\"" + fmt2(m.py(y2)) +
           "\" " + style + "/>\n";
}

}  // namespace detail

inline std::string render_svg(const Chart& chart, const RenderOptions& options = {}) {
    using detail::fmt2;
    if (options.width - 2.0 * options.margin <= 0.0 ||
        options.height - 2.0 * options.margin <= 0.0) {
        throw ValidationError("render: drawable area is degenerate");
    }

    const ChartLayout layout = layout_chart(chart);
    const detail::PixelMap m{options.margin, options.width, options.height, layout.x_max,
                             layout.y_max};
    const int k = chart.system.scale.root;

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           fmt2(options.width) + "\" height=\"" + fmt2(options.height) + "\" viewBox=\"0 0 " +
           fmt2(options.width) + " " + fmt2(options.height) + "\">\n";
    svg += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    // Axes with four tick intervals; tick labels are back in time units.
    detail::emit_line(svg, m, "axis", 0.0, 0.0, layout.x_max, 0.0,
                      "stroke=\"#000000\" stroke-width=\"1\" ");
    detail::emit_line(svg, m, "axis", 0.0, 0.0, 0.0, layout.y_max,
                      "stroke=\"#000000\" stroke-width=\"1\" ");
    for (int i = 1; i <= 4; ++i) {
        const double gx = layout.x_max * i / 4.0;
        const double gy = layout.y_max * i / 4.0;
        svg += "  <text class=\"tick\" x=\"" + fmt2(m.px(gx)) + "\" y=\"" +
               fmt2(m.py(0.0) + 16.0) + "\" font-size=\"10\" text-anchor=\"middle\">" +
               detail::fmt_tick(std::pow(gx, k)) + "</text>\n";
        svg += "  <text class=\"tick\" x=\"" + fmt2(m.px(0.0) - 6.0) + "\" y=\"" +
               fmt2(m.py(gy) + 3.0) + "\" font-size=\"10\" text-anchor=\"end\">" +
               detail::fmt_tick(std::pow(gy, k)) + "</text>\n";
    }

    // State lines, bottom to top.
    const auto order = chart.order_by_center();
    for (std::size_t idx : order) {
        const double y = layout.state_y[idx];
        detail::emit_line(svg, m, "state-line", 0.0, y, layout.x_max, y,
                          "stroke=\"#9a9a9a\" stroke-width=\"1\" ");
        svg += "  <text class=\"state-label\" x=\"" + fmt2(m.px(layout.x_max)) + "\" y=\"" +
               fmt2(m.py(y) - 4.0) + "\" font-size=\"11\" text-anchor=\"end\">" +
               detail::xml_escape(chart.states[idx].label) + "</text>\n";
    }

    // Center line: the 45° ray, common to both designs.
    {
        const double c = std::min(layout.x_max, layout.y_max);
        detail::emit_line(svg, m, "acl-center", 0.0, 0.0, c, c,
                          "stroke=\"#666666\" stroke-width=\"1\" stroke-dasharray=\"6 4\" ");
    }

    const auto ray_style = "stroke=\"#444444\" stroke-width=\"1.2\" ";
    if (chart.design == Design::Standard) {
        // One angle pair serves every state: straight rays from the origin.
        const AngularLimits& angles = chart.states.front().angles;
        for (const auto& [cls, theta] : {std::pair{"acl-lower", angles.theta_L},
                                         std::pair{"acl-upper", angles.theta_U}}) {
            const double slope = std::tan(theta / degrees_per_radian);
            const auto [ex, ey] = detail::clip_ray(slope, layout.x_max, layout.y_max);
            detail::emit_line(svg, m, cls, 0.0, 0.0, ex, ey, ray_style);
        }
    } else {
        // Zigzag limits crossing each state line at g(T_L) / g(T_U), joined
        // in ascending T_C order, extended beyond the last crossing along its
        // origin ray.
        for (const auto& [cls, lower] : {std::pair{"acl-lower", true},
                                         std::pair{"acl-upper", false}}) {
            std::vector<std::pair<double, double>> pts{{0.0, 0.0}};
            for (std::size_t idx : order) {
                const auto& line = chart.states[idx];
                const double tx = chart.system.scale.apply(lower ? line.t_l : line.t_u);
                pts.emplace_back(tx, layout.state_y[idx]);
            }
            const auto [lx, ly] = pts.back();
            pts.push_back(detail::clip_ray(ly / lx, layout.x_max, layout.y_max));
            svg += "  <polyline class=\"" + std::string(cls) + "\" points=\"";
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (i) svg += " ";
                svg += fmt2(m.px(pts[i].first)) + "," + fmt2(m.py(pts[i].second));
            }
            svg += "\" fill=\"none\" " + std::string(ray_style) + "/>\n";
        }
    }

    // Observation markers. Points of one state whose pixel abscissae fall
    // within a marker radius of a cluster anchor are stacked upward with a
    // fixed offset and annotated with their multiplicity.
    struct Cluster {
        int state_index;
        double anchor_px;
        double base_py;
        std::vector<std::size_t> members;  // indices into layout.points
    };
    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < layout.points.size(); ++i) {
        const auto& pl = layout.points[i];
        const int state = chart.points[pl.point_index].observation.state_index;
        const double x_px = m.px(pl.x);
        Cluster* home = nullptr;
        for (auto& cl : clusters) {
            if (cl.state_index == state && std::abs(x_px - cl.anchor_px) <= options.marker_radius) {
                home = &cl;
                break;
            }
        }
        if (home == nullptr) {
            clusters.push_back(Cluster{state, x_px, m.py(pl.y), {}});
            home = &clusters.back();
        }
        home->members.push_back(i);
    }
    for (const auto& cl : clusters) {
        for (std::size_t rank = 0; rank < cl.members.size(); ++rank) {
            const auto& pl = layout.points[cl.members[rank]];
            const auto& point = chart.points[pl.point_index];
            const std::string* color = &options.color_in_control;
            if (point.status == Status::Degradation) color = &options.color_degradation;
            if (point.status == Status::Improvement) color = &options.color_improvement;
            const double cy = cl.base_py - static_cast<double>(rank) * options.coincidence_offset;
            svg += "  <circle class=\"point\" cx=\"" + fmt2(m.px(pl.x)) + "\" cy=\"" + fmt2(cy) +
                   "\" r=\"" + fmt2(options.marker_radius) + "\" fill=\"" + *color + "\"/>\n";
        }
        if (cl.members.size() > 1) {
            const double top = cl.base_py -
                               static_cast<double>(cl.members.size() - 1) * options.coincidence_offset;
            svg += "  <text class=\"coincidence\" x=\"" + fmt2(cl.anchor_px + 6.0) + "\" y=\"" +
                   fmt2(top - 4.0) + "\" font-size=\"10\">x" +
                   std::to_string(cl.members.size()) + "</text>\n";
        }
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace acc
