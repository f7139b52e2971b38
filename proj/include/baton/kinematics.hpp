#pragma once

#include "baton/geometry.hpp"
#include "baton/pattern.hpp"
#include "baton/timing.hpp"

#include <vector>

namespace baton {

// Baton state at one instant. velocity = curve_tangent(s) * phase_rate.
struct MotionSample {
    double t = 0.0;
    double s = 0.0;
    Point2 position;
    Vec2 velocity;
    double phase_rate = 0.0;
    double spatial_speed = 0.0;
};

struct SpeedSample {
    double t = 0.0;
    double phase_rate = 0.0;
    double spatial_speed = 0.0;
};

struct BeatEvent {
    int cycle = 0;
    int beat = 1; // 1..N; beat 1's ictus is the downbeat
    AnchorRole kind = AnchorRole::preparation;
    double time = 0.0;            // absolute seconds
    double cycle_time = 0.0;      // seconds since the start of the cycle
    double curve_parameter = 0.0; // within-cycle, 2k-2 (preparation) or 2k-1 (ictus)

    bool downbeat() const noexcept { return beat == 1 && kind == AnchorRole::ictus; }
};

struct Trail {
    std::vector<Point2> points; // oldest first
    double duration = 0.0;      // covered span after clipping at t=0
    double end_time = 0.0;
};

// gamma(t) = g(f(t)). ConfigurationError when the beat counts differ.
Point2 baton_position(const Pattern& pattern, const TimingLaw& law, double t);
Vec2 baton_velocity(const Pattern& pattern, const TimingLaw& law, double t);
MotionSample motion_sample(const Pattern& pattern, const TimingLaw& law, double t);

// `count` samples evenly spaced over [t0, t1], both ends included.
std::vector<MotionSample> sample_trajectory(const Pattern& pattern, const TimingLaw& law,
                                            double t0, double t1, int count);

// One cycle at 2N * samples_per_segment + 1 evenly spaced instants, so every
// segment boundary (each preparation and ictus) is hit exactly.
std::vector<SpeedSample> speed_profile(const Pattern& pattern, const TimingLaw& law,
                                       int samples_per_segment);

// Every preparation and ictus instant in [t0, t1), in time order.
std::vector<BeatEvent> beat_events(const TimingLaw& law, double t0, double t1);

Trail trail(const Pattern& pattern, const TimingLaw& law, double end_time, double duration,
            int count);

} // namespace baton
