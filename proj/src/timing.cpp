#include "baton/timing.hpp"

#include "baton/error.hpp"

#include <cmath>
#include <string>

namespace baton {

Tempo::Tempo(int beats, double bpm) : beats_(beats), bpm_(bpm) {
    if (beats < 1) {
        throw DomainError("beats must be >= 1, got " + std::to_string(beats));
    }
    if (!std::isfinite(bpm) || bpm <= 0.0) {
        throw DomainError("bpm must be a finite positive number, got " + std::to_string(bpm));
    }
    cycle_ = 60.0 * beats / bpm;
    segment_ = cycle_ / (2.0 * beats);
}

EaseCoefficients ease_coefficients(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw DomainError("ease endpoint rates must be finite");
    }
    EaseCoefficients c;
    c.a = a;
    c.b = b;
    c.c3 = -6.0 * a - 4.0 * b + 10.0;
    c.c4 = 8.0 * a + 7.0 * b - 15.0;
    // Grouped so that a+b == 2 gives exactly zero.
    c.c5 = 6.0 - 3.0 * (a + b);
    return c;
}

namespace {

void require_unit_time(double tau) {
    if (!(tau >= 0.0 && tau <= 1.0)) {
        throw DomainError("ease parameter tau=" + std::to_string(tau) + " outside [0,1]");
    }
}

} // namespace

double ease(const EaseCoefficients& c, double tau) {
    require_unit_time(tau);
    if (tau == 1.0) {
        return 1.0;
    }
    const double t2 = tau * tau;
    return tau * (c.a + t2 * (c.c3 + tau * (c.c4 + tau * c.c5)));
}

double ease_rate(const EaseCoefficients& c, double tau) {
    require_unit_time(tau);
    if (tau == 1.0) {
        return c.b;
    }
    const double t2 = tau * tau;
    return c.a + t2 * (3.0 * c.c3 + tau * (4.0 * c.c4 + tau * 5.0 * c.c5));
}

double ease(double a, double b, double tau) { return ease(ease_coefficients(a, b), tau); }

double ease_rate(double a, double b, double tau) {
    return ease_rate(ease_coefficients(a, b), tau);
}

TimingLaw::TimingLaw(Tempo tempo, double beta) : tempo_(tempo), beta_(beta) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw DomainError("speed balance beta=" + std::to_string(beta) +
                          " outside the valid range [0,1]");
    }
    accelerate_ = ease_coefficients(min_rate(), max_rate());
    decelerate_ = ease_coefficients(max_rate(), min_rate());
}

SegmentRates TimingLaw::segment_rates(int segment_index) const {
    const auto& c = coefficients(segment_index);
    return {c.a, c.b};
}

const EaseCoefficients& TimingLaw::coefficients(int segment_index) const {
    if (segment_index < 0 || segment_index >= tempo_.segment_count()) {
        throw DomainError("segment index " + std::to_string(segment_index) + " outside [0, " +
                          std::to_string(tempo_.segment_count() - 1) + "]");
    }
    return segment_index % 2 == 0 ? accelerate_ : decelerate_;
}

namespace {

struct TimeLocation {
    double cycle;
    int segment;
    double tau;
};

TimeLocation locate(const TimingLaw& law, double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw DomainError("time must be finite and >= 0, got " + std::to_string(t));
    }
    const double period = law.cycle_duration();
    const double cycle = std::floor(t / period);
    double local = (t - cycle * period) / law.segment_duration();
    const int last = law.tempo().segment_count() - 1;
    if (local < 0.0) {
        local = 0.0;
    }
    int j = static_cast<int>(std::floor(local));
    double tau = local - j;
    // Rounding can push t just below a cycle boundary onto segment 2N.
    if (j > last) {
        j = last;
        tau = 1.0;
    }
    return {cycle, j, tau};
}

} // namespace

double phase(const TimingLaw& law, double t) {
    const auto [cycle, j, tau] = locate(law, t);
    const double per_cycle = 2.0 * law.beats();
    return per_cycle * cycle + j + ease(law.coefficients(j), tau);
}

double phase_rate(const TimingLaw& law, double t) {
    const auto [cycle, j, tau] = locate(law, t);
    return ease_rate(law.coefficients(j), tau) / law.segment_duration();
}

} // namespace baton
