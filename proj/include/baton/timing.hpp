#pragma once

namespace baton {

// Cycle timing for N beats at a given tempo. One cycle lasts T = 60N/bpm
// seconds and splits into 2N equal half-beat segments of length T/(2N).
class Tempo {
public:
    // Throws DomainError unless beats >= 1 and bpm is finite and > 0.
    Tempo(int beats, double bpm);

    int beats() const noexcept { return beats_; }
    double bpm() const noexcept { return bpm_; }
    double cycle_duration() const noexcept { return cycle_; }
    double segment_duration() const noexcept { return segment_; }
    int segment_count() const noexcept { return 2 * beats_; }

private:
    int beats_;
    double bpm_;
    double cycle_;
    double segment_;
};

// Quintic ease a*t + c3*t^3 + c4*t^4 + c5*t^5 with ease(0)=0, ease(1)=1,
// ease'(0)=a, ease'(1)=b and vanishing second derivative at both ends.
struct EaseCoefficients {
    double a = 1.0;
    double b = 1.0;
    double c3 = 0.0;
    double c4 = 0.0;
    double c5 = 0.0;
};

EaseCoefficients ease_coefficients(double a, double b);

// Value and derivative of the ease on tau in [0,1]; DomainError outside.
double ease(double a, double b, double tau);
double ease_rate(double a, double b, double tau);

double ease(const EaseCoefficients& c, double tau);
double ease_rate(const EaseCoefficients& c, double tau);

struct SegmentRates {
    double a;
    double b;
};

// Maps time to curve parameter. The single speed-balance parameter beta in
// [0,1] sets the endpoint phase rates: preparation->ictus segments run from
// 1-beta up to 1+beta, ictus->preparation segments back down.
class TimingLaw {
public:
    // Throws DomainError when beta is outside [0,1]; beta is never clamped.
    TimingLaw(Tempo tempo, double beta);
    TimingLaw(int beats, double bpm, double beta) : TimingLaw(Tempo(beats, bpm), beta) {}

    const Tempo& tempo() const noexcept { return tempo_; }
    int beats() const noexcept { return tempo_.beats(); }
    double beta() const noexcept { return beta_; }
    double min_rate() const noexcept { return 1.0 - beta_; }
    double max_rate() const noexcept { return 1.0 + beta_; }
    double cycle_duration() const noexcept { return tempo_.cycle_duration(); }
    double segment_duration() const noexcept { return tempo_.segment_duration(); }

    // Even (0-based) segments accelerate into an ictus, odd ones decelerate.
    SegmentRates segment_rates(int segment_index) const;

    const EaseCoefficients& coefficients(int segment_index) const;

private:
    Tempo tempo_;
    double beta_;
    EaseCoefficients accelerate_;
    EaseCoefficients decelerate_;
};

// f(t): curve parameter reached at time t >= 0. Adds 2N per elapsed cycle.
double phase(const TimingLaw& law, double t);

// f'(t) in curve-parameter units per second.
double phase_rate(const TimingLaw& law, double t);

} // namespace baton
