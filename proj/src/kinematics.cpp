#include "baton/kinematics.hpp"

#include "baton/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace baton {

namespace {

void require_matching(const Pattern& pattern, const TimingLaw& law) {
    if (pattern.beats() != law.beats()) {
        throw ConfigurationError("pattern has " + std::to_string(pattern.beats()) +
                                 " beats but the timing law has " +
                                 std::to_string(law.beats()));
    }
}

void require_window(double t0, double t1) {
    if (!std::isfinite(t0) || !std::isfinite(t1) || t0 < 0.0 || !(t0 < t1)) {
        throw DomainError("time window must satisfy 0 <= from < to");
    }
}

} // namespace

Point2 baton_position(const Pattern& pattern, const TimingLaw& law, double t) {
    require_matching(pattern, law);
    return curve_point(pattern, phase(law, t));
}

Vec2 baton_velocity(const Pattern& pattern, const TimingLaw& law, double t) {
    require_matching(pattern, law);
    return phase_rate(law, t) * curve_tangent(pattern, phase(law, t));
}

MotionSample motion_sample(const Pattern& pattern, const TimingLaw& law, double t) {
    require_matching(pattern, law);
    MotionSample m;
    m.t = t;
    m.s = phase(law, t);
    m.position = curve_point(pattern, m.s);
    m.phase_rate = phase_rate(law, t);
    m.velocity = m.phase_rate * curve_tangent(pattern, m.s);
    m.spatial_speed = m.velocity.norm();
    return m;
}

std::vector<MotionSample> sample_trajectory(const Pattern& pattern, const TimingLaw& law,
                                            double t0, double t1, int count) {
    require_window(t0, t1);
    if (count < 2) {
        throw DomainError("sample count must be >= 2, got " + std::to_string(count));
    }
    require_matching(pattern, law);
    std::vector<MotionSample> out;
    out.reserve(static_cast<std::size_t>(count));
    const double span = t1 - t0;
    for (int k = 0; k < count; ++k) {
        const double t = (k == count - 1) ? t1 : t0 + span * k / (count - 1);
        out.push_back(motion_sample(pattern, law, t));
    }
    return out;
}

std::vector<SpeedSample> speed_profile(const Pattern& pattern, const TimingLaw& law,
                                       int samples_per_segment) {
    if (samples_per_segment < 2) {
        throw DomainError("samples per segment must be >= 2, got " +
                          std::to_string(samples_per_segment));
    }
    require_matching(pattern, law);
    const int segments = law.tempo().segment_count();
    const int steps = segments * samples_per_segment;
    const double delta = law.segment_duration();
    std::vector<SpeedSample> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    for (int k = 0; k <= steps; ++k) {
        const int j = k / samples_per_segment;
        const int q = k % samples_per_segment;
        const double t = j * delta + (delta * q) / samples_per_segment;
        const auto m = motion_sample(pattern, law, t);
        out.push_back({t, m.phase_rate, m.spatial_speed});
    }
    return out;
}

std::vector<BeatEvent> beat_events(const TimingLaw& law, double t0, double t1) {
    require_window(t0, t1);
    const double period = law.cycle_duration();
    const double delta = law.segment_duration();
    const int segments = law.tempo().segment_count();
    const auto first = static_cast<long long>(std::floor(t0 / period));
    const auto last = static_cast<long long>(std::floor(t1 / period));
    std::vector<BeatEvent> out;
    for (long long c = std::max(0LL, first - 1); c <= last; ++c) {
        for (int j = 0; j < segments; ++j) {
            const double cycle_time = j * delta;
            const double time = static_cast<double>(c) * period + cycle_time;
            if (time < t0 || time >= t1) {
                continue;
            }
            BeatEvent e;
            e.cycle = static_cast<int>(c);
            e.beat = j / 2 + 1;
            e.kind = (j % 2 == 0) ? AnchorRole::preparation : AnchorRole::ictus;
            e.time = time;
            e.cycle_time = cycle_time;
            e.curve_parameter = j;
            out.push_back(e);
        }
    }
    return out;
}

Trail trail(const Pattern& pattern, const TimingLaw& law, double end_time, double duration,
            int count) {
    if (!std::isfinite(end_time) || end_time < 0.0) {
        throw DomainError("trail end time must be finite and >= 0");
    }
    if (!std::isfinite(duration) || duration <= 0.0) {
        throw DomainError("trail duration must be finite and > 0");
    }
    if (count < 2) {
        throw DomainError("trail point count must be >= 2, got " + std::to_string(count));
    }
    require_matching(pattern, law);
    const double start = std::max(0.0, end_time - duration);
    Trail tr;
    tr.end_time = end_time;
    tr.duration = end_time - start;
    if (tr.duration == 0.0) {
        tr.points.push_back(baton_position(pattern, law, end_time));
        return tr;
    }
    tr.points.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        const double t = (k == count - 1) ? end_time : start + tr.duration * k / (count - 1);
        tr.points.push_back(baton_position(pattern, law, t));
    }
    return tr;
}

} // namespace baton
