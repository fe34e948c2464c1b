#include <cmath>
#include <future>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "acc/config.hpp"
#include "acc/render.hpp"

using Catch::Approx;
using namespace acc;

namespace {

SystemModel example1_system() {
    return SystemModel{
        .states = {{"S1", DistributionSpec::exponential(100.0)},
                   {"S2", DistributionSpec::exponential(400.0)},
                   {"S3", DistributionSpec::exponential(800.0)}},
        .c = FalseAlarmProb{},
        .scale = DrawingScale::power_root(3),
    };
}

Chart example1_chart() {
    return build_chart(example1_system(), Design::Standard,
                       read_observations_csv(read_file("data/example1.csv")));
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("layout places every point at tan(theta)", "[render]") {
    const Chart chart = example1_chart();
    const ChartLayout layout = layout_chart(chart);
    REQUIRE(layout.points.size() == chart.points.size());
    for (const auto& placement : layout.points) {
        const auto& point = chart.points[placement.point_index];
        if (point.observation.ttf == 0.0) continue;
        CAPTURE(point.observation.seq);
        CHECK(placement.y / placement.x ==
              Approx(std::tan(point.theta / degrees_per_radian)).epsilon(1e-9));
    }
    CHECK(layout.x_max > 0.0);
    CHECK(layout.y_max > 0.0);
}

TEST_CASE("generalized center crossings sit exactly on the 45-degree line", "[render]") {
    SystemModel system{.states = {{"S1", DistributionSpec::gamma(100.0, 1.0)},
                                  {"S2", DistributionSpec::rayleigh(200.0)},
                                  {"S3", DistributionSpec::weibull(600.0, 1.5)}},
                       .c = FalseAlarmProb{},
                       .scale = DrawingScale::power_root(3)};
    const Chart chart = build_chart(system, Design::Generalized, {});
    const ChartLayout layout = layout_chart(chart);
    for (std::size_t i = 0; i < chart.states.size(); ++i) {
        const double crossing_x = system.scale.apply(chart.states[i].t_c);
        CHECK(crossing_x == layout.state_y[i]);  // y = x, slope one
    }
}

TEST_CASE("standard design renders three straight limit rays", "[render]") {
    const std::string svg = render_svg(example1_chart());
    CHECK(svg.starts_with("<?xml"));
    CHECK(count_occurrences(svg, "acl-center") == 1);
    CHECK(count_occurrences(svg, "<line class=\"acl-lower\"") == 1);
    CHECK(count_occurrences(svg, "<line class=\"acl-upper\"") == 1);
    CHECK(count_occurrences(svg, "<polyline") == 0);
    CHECK(count_occurrences(svg, "class=\"state-line\"") == 3);
    CHECK(count_occurrences(svg, "<circle") == 50);
    // Status colors: two improvements, one degradation.
    CHECK(count_occurrences(svg, RenderOptions{}.color_improvement) == 2);
    CHECK(count_occurrences(svg, RenderOptions{}.color_degradation) == 1);
}

TEST_CASE("generalized design renders zigzag polylines", "[render]") {
    SystemModel system{.states = {{"S1", DistributionSpec::gamma(100.0, 1.0)},
                                  {"S2", DistributionSpec::rayleigh(200.0)},
                                  {"S3", DistributionSpec::weibull(600.0, 1.5)},
                                  {"S4", DistributionSpec::weibull(1000.0, 2.0)}},
                       .c = FalseAlarmProb{},
                       .scale = DrawingScale::power_root(3)};
    const Chart chart = build_chart(system, Design::Generalized, {Observation{1, 1, 50.0}});
    const std::string svg = render_svg(chart);
    CHECK(count_occurrences(svg, "<polyline class=\"acl-lower\"") == 1);
    CHECK(count_occurrences(svg, "<polyline class=\"acl-upper\"") == 1);
    CHECK(count_occurrences(svg, "acl-center") == 1);
    CHECK(count_occurrences(svg, "class=\"state-line\"") == 4);
}

TEST_CASE("empty charts render axes and limits only", "[render]") {
    const Chart chart = build_chart(example1_system(), Design::Standard, {});
    const std::string svg = render_svg(chart);
    CHECK(count_occurrences(svg, "<circle") == 0);
    CHECK(count_occurrences(svg, "class=\"state-line\"") == 3);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("degenerate canvases are rejected", "[render]") {
    RenderOptions options;
    options.width = 100.0;
    options.margin = 50.0;
    CHECK_THROWS_AS(render_svg(example1_chart(), options), ValidationError);
}

TEST_CASE("coincident observations stack with a multiplicity annotation", "[render]") {
    const Chart chart = build_chart(
        example1_system(), Design::Standard,
        {Observation{1, 1, 100.0}, Observation{2, 1, 100.001}, Observation{3, 1, 100.002},
         Observation{4, 2, 100.0}});
    const std::string svg = render_svg(chart);
    CHECK(count_occurrences(svg, "<circle") == 4);
    CHECK(count_occurrences(svg, "class=\"coincidence\"") == 1);
    CHECK(svg.find(">x3<") != std::string::npos);
}

TEST_CASE("rendering is byte-deterministic, also across threads", "[render]") {
    const Chart chart = example1_chart();
    const std::string first = render_svg(chart);
    const std::string second = render_svg(chart);
    CHECK(first == second);

    auto future = std::async(std::launch::async, [&chart] { return render_svg(chart); });
    CHECK(future.get() == first);
}
