#pragma once

#include "baton/kinematics.hpp"
#include "baton/pattern.hpp"
#include "baton/timing.hpp"

#include <span>
#include <string>
#include <vector>

namespace baton {

struct RenderOptions {
    int width = 640;
    int height = 640;
    double margin = 32.0; // pixels
    double stroke_width = 2.0;
    bool show_anchors = true;
    bool show_labels = true;
    bool show_spatial_speed = false; // speed plot only
    int samples_per_segment = 32;
};

// DomainError for non-positive sizes, margins that leave no drawing area or
// fewer than 8 samples per segment.
void check_options(const RenderOptions& opts);

// Uniform-scale map from plane coordinates to SVG pixels, y flipped.
struct Viewport {
    double scale = 1.0;
    double offset_x = 0.0;
    double offset_y = 0.0;

    Point2 map(Point2 p) const { return {offset_x + scale * p.x, offset_y - scale * p.y}; }
};

// g sampled at s = k / samples_per_segment for k = 0..2N*samples_per_segment;
// the last point closes the loop.
std::vector<Point2> curve_polyline(const Pattern& pattern, int samples_per_segment);

// Fits the bounding box of `points` into the canvas minus the margin, centered.
Viewport fit_viewport(std::span<const Point2> points, const RenderOptions& opts);

// SVG diagram of the closed curve with anchor markers: open circles for
// preparations, filled discs for icti, optional P1/I1... labels.
std::string render_curve(const Pattern& pattern, const RenderOptions& opts = {});

// SVG plot of phase rate over one cycle with gridlines at every segment
// boundary; optionally overlays spatial speed on its own scale.
std::string render_speed_plot(const Pattern& pattern, const TimingLaw& law,
                              const RenderOptions& opts = {});

enum class SampleFormat { table, structured };

inline constexpr const char* kSampleTableHeader = "t,s,x,y,vx,vy,phase_rate,spatial_speed";

// CSV with a fixed header row, or a JSON array of objects. Numbers use the
// shortest decimal that round-trips. DomainError on empty input.
std::string export_samples(std::span<const MotionSample> samples, SampleFormat format);

} // namespace baton
