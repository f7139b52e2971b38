#include "baton/render.hpp"

#include "baton/error.hpp"
#include "number_format.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>

namespace baton {

using detail::fixed;
using detail::shortest;

void check_options(const RenderOptions& opts) {
    if (opts.width <= 0 || opts.height <= 0) {
        throw DomainError("render width and height must be positive");
    }
    if (!std::isfinite(opts.margin) || opts.margin < 0.0 ||
        2.0 * opts.margin >= std::min(opts.width, opts.height)) {
        throw DomainError("render margin must be >= 0 and leave a drawing area");
    }
    if (!std::isfinite(opts.stroke_width) || opts.stroke_width <= 0.0) {
        throw DomainError("stroke width must be positive");
    }
    if (opts.samples_per_segment < 8) {
        throw DomainError("samples per segment must be >= 8, got " +
                          std::to_string(opts.samples_per_segment));
    }
}

std::vector<Point2> curve_polyline(const Pattern& pattern, int samples_per_segment) {
    if (samples_per_segment < 1) {
        throw DomainError("samples per segment must be positive");
    }
    const int segments = static_cast<int>(pattern.anchor_count());
    std::vector<Point2> pts;
    pts.reserve(static_cast<std::size_t>(segments * samples_per_segment) + 1);
    for (int i = 0; i < segments; ++i) {
        const HermiteSegment seg = segment(pattern, i);
        for (int k = 0; k < samples_per_segment; ++k) {
            pts.push_back(hermite_eval(seg, static_cast<double>(k) / samples_per_segment));
        }
    }
    pts.push_back(hermite_eval(segment(pattern, segments - 1), 1.0));
    return pts;
}

Viewport fit_viewport(std::span<const Point2> points, const RenderOptions& opts) {
    double lo_x = points.front().x, hi_x = lo_x;
    double lo_y = points.front().y, hi_y = lo_y;
    for (const auto& p : points) {
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    }
    const double avail_w = opts.width - 2.0 * opts.margin;
    const double avail_h = opts.height - 2.0 * opts.margin;
    const double span_x = hi_x - lo_x;
    const double span_y = hi_y - lo_y;
    double scale = 1.0;
    if (span_x > 0.0 || span_y > 0.0) {
        scale = std::min(span_x > 0.0 ? avail_w / span_x : INFINITY,
                         span_y > 0.0 ? avail_h / span_y : INFINITY);
    }
    Viewport vp;
    vp.scale = scale;
    vp.offset_x = opts.width / 2.0 - scale * (lo_x + hi_x) / 2.0;
    vp.offset_y = opts.height / 2.0 + scale * (lo_y + hi_y) / 2.0;
    return vp;
}

namespace {

std::string svg_open(const RenderOptions& opts) {
    const auto w = std::to_string(opts.width);
    const auto h = std::to_string(opts.height);
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h +
           "\" viewBox=\"0 0 " + w + " " + h + "\">\n"
           "  <rect width=\"" + w + "\" height=\"" + h + "\" fill=\"white\"/>\n";
}

std::string points_attr(std::span<const Point2> pts) {
    std::string out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) {
            out += ' ';
        }
        out += fixed(pts[i].x) + "," + fixed(pts[i].y);
    }
    return out;
}

} // namespace

std::string render_curve(const Pattern& pattern, const RenderOptions& opts) {
    check_options(opts);
    const auto curve = curve_polyline(pattern, opts.samples_per_segment);
    const Viewport vp = fit_viewport(curve, opts);
    std::vector<Point2> mapped;
    mapped.reserve(curve.size());
    for (const auto& p : curve) {
        mapped.push_back(vp.map(p));
    }

    std::string svg = svg_open(opts);
    svg += "  <polyline class=\"curve\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
           fixed(opts.stroke_width) + "\" stroke-linejoin=\"round\" points=\"" +
           points_attr(mapped) + "\"/>\n";

    const double radius = 2.5 * opts.stroke_width;
    for (std::size_t i = 0; i < pattern.anchor_count() && opts.show_anchors; ++i) {
        const auto& a = pattern.anchor(i);
        const Point2 c = vp.map(a.position);
        const bool prep = a.role == AnchorRole::preparation;
        svg += "  <circle class=\"anchor " + std::string(prep ? "prep" : "ictus") + "\" cx=\"" +
               fixed(c.x) + "\" cy=\"" + fixed(c.y) + "\" r=\"" + fixed(radius) + "\" fill=\"" +
               (prep ? "white" : "black") + "\" stroke=\"black\" stroke-width=\"" +
               fixed(opts.stroke_width / 2.0) + "\"/>\n";
    }
    for (std::size_t i = 0; i < pattern.anchor_count() && opts.show_labels; ++i) {
        const auto& a = pattern.anchor(i);
        const Point2 c = vp.map(a.position);
        const bool prep = a.role == AnchorRole::preparation;
        // Preparations are tops, icti bottoms: label outside the curve.
        const double dy = prep ? -2.0 * radius : 4.0 * radius;
        svg += "  <text class=\"label\" x=\"" + fixed(c.x + radius) + "\" y=\"" +
               fixed(c.y + dy) + "\" font-family=\"sans-serif\" font-size=\"12\">" +
               (prep ? "P" : "I") + std::to_string(i / 2 + 1) + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string render_speed_plot(const Pattern& pattern, const TimingLaw& law,
                              const RenderOptions& opts) {
    check_options(opts);
    const auto profile = speed_profile(pattern, law, opts.samples_per_segment);
    const double period = law.cycle_duration();
    const double delta = law.segment_duration();
    const double left = opts.margin;
    const double right = opts.width - opts.margin;
    const double top = opts.margin;
    const double bottom = opts.height - opts.margin;

    double rate_max = 0.0;
    double speed_max = 0.0;
    for (const auto& p : profile) {
        rate_max = std::max(rate_max, p.phase_rate);
        speed_max = std::max(speed_max, p.spatial_speed);
    }
    const auto x_of = [&](double t) { return left + (right - left) * t / period; };
    const auto y_of = [&](double v, double vmax) {
        return vmax > 0.0 ? bottom - (bottom - top) * v / (1.1 * vmax) : bottom;
    };

    std::string svg = svg_open(opts);
    for (int j = 0; j <= law.tempo().segment_count(); ++j) {
        const double x = x_of(j * delta);
        const bool ictus = j % 2 == 1;
        svg += "  <line class=\"grid " + std::string(ictus ? "ictus" : "prep") + "\" x1=\"" +
               fixed(x) + "\" y1=\"" + fixed(top) + "\" x2=\"" + fixed(x) + "\" y2=\"" +
               fixed(bottom) + "\" stroke=\"" + (ictus ? "#888888" : "#cccccc") +
               "\" stroke-width=\"1\"" + (ictus ? "" : " stroke-dasharray=\"4 4\"") + "/>\n";
    }
    svg += "  <line class=\"axis\" x1=\"" + fixed(left) + "\" y1=\"" + fixed(bottom) +
           "\" x2=\"" + fixed(right) + "\" y2=\"" + fixed(bottom) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";

    std::vector<Point2> rate_pts;
    std::vector<Point2> speed_pts;
    for (const auto& p : profile) {
        rate_pts.push_back({x_of(p.t), y_of(p.phase_rate, rate_max)});
        speed_pts.push_back({x_of(p.t), y_of(p.spatial_speed, speed_max)});
    }
    svg += "  <polyline class=\"phase-rate\" fill=\"none\" stroke=\"black\" stroke-width=\"" +
           fixed(opts.stroke_width) + "\" points=\"" + points_attr(rate_pts) + "\"/>\n";
    if (opts.show_spatial_speed) {
        svg += "  <polyline class=\"spatial-speed\" fill=\"none\" stroke=\"#1f77b4\" "
               "stroke-width=\"" + fixed(opts.stroke_width) + "\" points=\"" +
               points_attr(speed_pts) + "\"/>\n";
    }
    if (opts.show_labels) {
        svg += "  <text class=\"label\" x=\"" + fixed(left) + "\" y=\"" + fixed(top - 8.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\">phase rate, max " +
               fixed(rate_max) + " /s</text>\n";
        svg += "  <text class=\"label\" x=\"" + fixed(right) + "\" y=\"" +
               fixed(bottom + 16.0) +
               "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\">t = " +
               fixed(period) + " s</text>\n";
        if (opts.show_spatial_speed) {
            svg += "  <text class=\"label\" x=\"" + fixed(right) + "\" y=\"" +
                   fixed(top - 8.0) +
                   "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"end\" "
                   "fill=\"#1f77b4\">spatial speed, max " + fixed(speed_max) + "</text>\n";
        }
    }
    svg += "</svg>\n";
    return svg;
}

std::string export_samples(std::span<const MotionSample> samples, SampleFormat format) {
    if (samples.empty()) {
        throw DomainError("no samples to export");
    }
    if (format == SampleFormat::structured) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& m : samples) {
            nlohmann::ordered_json o;
            o["t"] = m.t;
            o["s"] = m.s;
            o["x"] = m.position.x;
            o["y"] = m.position.y;
            o["vx"] = m.velocity.x;
            o["vy"] = m.velocity.y;
            o["phase_rate"] = m.phase_rate;
            o["spatial_speed"] = m.spatial_speed;
            arr.push_back(std::move(o));
        }
        return arr.dump(2) + "\n";
    }
    std::string out = kSampleTableHeader;
    out += '\n';
    for (const auto& m : samples) {
        for (const double v : {m.t, m.s, m.position.x, m.position.y, m.velocity.x, m.velocity.y,
                               m.phase_rate}) {
            out += shortest(v);
            out += ',';
        }
        out += shortest(m.spatial_speed);
        out += '\n';
    }
    return out;
}

} // namespace baton
