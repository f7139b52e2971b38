#include "baton/error.hpp"
#include "baton/pattern_io.hpp"
#include "baton/render.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <regex>
#include <sstream>

using namespace baton;

namespace {

std::size_t count_of(const std::string& haystack, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = haystack.find(needle); pos != std::string::npos;
         pos = haystack.find(needle, pos + 1)) {
        ++n;
    }
    return n;
}

std::vector<Point2> polyline_points(const std::string& svg, const std::string& cls) {
    const std::regex re("class=\"" + cls + "\"[^>]*points=\"([^\"]*)\"");
    std::smatch m;
    std::vector<Point2> out;
    if (!std::regex_search(svg, m, re)) {
        return out;
    }
    std::istringstream in(m[1].str());
    std::string pair;
    while (in >> pair) {
        const auto comma = pair.find(',');
        out.push_back({std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))});
    }
    return out;
}

} // namespace

TEST(RenderCurve, MarkersLabelsAndDeterminism) {
    const Pattern p = default_pattern(4);
    const std::string svg = render_curve(p);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_EQ(count_of(svg, "class=\"anchor prep\""), 4u);
    EXPECT_EQ(count_of(svg, "class=\"anchor ictus\""), 4u);
    EXPECT_NE(svg.find(">P1</text>"), std::string::npos);
    EXPECT_NE(svg.find(">I4</text>"), std::string::npos);
    EXPECT_EQ(svg, render_curve(p));

    RenderOptions bare;
    bare.show_anchors = false;
    bare.show_labels = false;
    const std::string plain = render_curve(p, bare);
    EXPECT_EQ(count_of(plain, "<circle"), 0u);
    EXPECT_EQ(count_of(plain, "<text"), 0u);
}

TEST(RenderCurve, ClosedPolylineThroughViewport) {
    const Pattern p = default_pattern(3);
    RenderOptions opts;
    opts.samples_per_segment = 12;
    const auto raw = curve_polyline(p, opts.samples_per_segment);
    ASSERT_EQ(raw.size(), 6u * 12u + 1u);
    EXPECT_LE(distance(raw.front(), raw.back()), 1e-9);

    const Viewport vp = fit_viewport(raw, opts);
    const auto drawn = polyline_points(render_curve(p, opts), "curve");
    ASSERT_EQ(drawn.size(), raw.size());
    for (std::size_t k = 0; k < raw.size(); k += 7) {
        const auto want = vp.map(curve_point(p, static_cast<double>(k) / opts.samples_per_segment));
        EXPECT_NEAR(drawn[k].x, want.x, 5e-4);
        EXPECT_NEAR(drawn[k].y, want.y, 5e-4);
    }
    // Everything lands inside the canvas margins.
    for (const auto& d : drawn) {
        EXPECT_GE(d.x, opts.margin - 1e-3);
        EXPECT_LE(d.x, opts.width - opts.margin + 1e-3);
        EXPECT_GE(d.y, opts.margin - 1e-3);
        EXPECT_LE(d.y, opts.height - opts.margin + 1e-3);
    }
}

TEST(RenderCurve, RejectsBadOptions) {
    const Pattern p = default_pattern(2);
    RenderOptions o;
    o.samples_per_segment = 7;
    EXPECT_THROW(render_curve(p, o), DomainError);
    o = {};
    o.width = 0;
    EXPECT_THROW(render_curve(p, o), DomainError);
    o = {};
    o.margin = 400;
    EXPECT_THROW(render_curve(p, o), DomainError);
    o = {};
    o.stroke_width = -1;
    EXPECT_THROW(render_curve(p, o), DomainError);
}

TEST(RenderSpeedPlot, UniformIsFlat) {
    const Pattern p = default_pattern(4);
    const TimingLaw law(4, 120.0, 0.0);
    const auto pts = polyline_points(render_speed_plot(p, law), "phase-rate");
    ASSERT_FALSE(pts.empty());
    for (const auto& q : pts) {
        EXPECT_NEAR(q.y, pts.front().y, 1e-9);
    }
}

TEST(RenderSpeedPlot, PeaksOnIctusGridlines) {
    const Pattern p = default_pattern(4);
    const TimingLaw law(4, 120.0, 0.7);
    RenderOptions opts;
    opts.show_spatial_speed = true;
    const std::string svg = render_speed_plot(p, law, opts);
    EXPECT_EQ(svg, render_speed_plot(p, law, opts));
    EXPECT_EQ(count_of(svg, "class=\"grid ictus\""), 4u);
    EXPECT_EQ(count_of(svg, "class=\"grid prep\""), 5u);
    EXPECT_NE(svg.find("class=\"spatial-speed\""), std::string::npos);

    const std::regex grid("class=\"grid ictus\" x1=\"([0-9.]+)\"");
    std::vector<double> ictus_x;
    for (auto it = std::sregex_iterator(svg.begin(), svg.end(), grid); it != std::sregex_iterator();
         ++it) {
        ictus_x.push_back(std::stod((*it)[1].str()));
    }
    const auto pts = polyline_points(svg, "phase-rate");
    std::vector<double> peaks;
    for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
        // Screen y grows downward, so a maximum is a local minimum of y.
        if (pts[k].y < pts[k - 1].y && pts[k].y <= pts[k + 1].y) {
            peaks.push_back(pts[k].x);
        }
    }
    ASSERT_EQ(peaks.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_NEAR(peaks[i], ictus_x[i], 1e-3);
    }
}

TEST(ExportSamples, TableAndStructured) {
    const Pattern p = default_pattern(4);
    const TimingLaw law(4, 90.0, 0.6);
    const auto samples = sample_trajectory(p, law, 0.1, 1.7, 3);
    const std::string table = export_samples(samples, SampleFormat::table);
    std::istringstream in(table);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
    }
    ASSERT_EQ(lines.size(), 4u);
    EXPECT_EQ(lines[0], kSampleTableHeader);
    EXPECT_EQ(table, export_samples(samples, SampleFormat::table));

    // Values parse back bit-for-bit.
    for (std::size_t k = 0; k < samples.size(); ++k) {
        std::istringstream row(lines[k + 1]);
        std::vector<double> v;
        for (std::string cell; std::getline(row, cell, ',');) {
            v.push_back(std::stod(cell));
        }
        const auto& m = samples[k];
        ASSERT_EQ(v.size(), 8u);
        EXPECT_EQ(v[0], m.t);
        EXPECT_EQ(v[1], m.s);
        EXPECT_EQ(v[2], m.position.x);
        EXPECT_EQ(v[3], m.position.y);
        EXPECT_EQ(v[4], m.velocity.x);
        EXPECT_EQ(v[5], m.velocity.y);
        EXPECT_EQ(v[6], m.phase_rate);
        EXPECT_EQ(v[7], m.spatial_speed);
    }

    const auto j = nlohmann::json::parse(export_samples(samples, SampleFormat::structured));
    ASSERT_EQ(j.size(), 3u);
    EXPECT_EQ(j[2]["t"].get<double>(), samples[2].t);
    EXPECT_EQ(j[1]["vy"].get<double>(), samples[1].velocity.y);
    EXPECT_THROW(export_samples({}, SampleFormat::table), DomainError);
}
