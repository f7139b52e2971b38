#include "baton/pattern.hpp"

#include "baton/error.hpp"

#include <cmath>
#include <string>

namespace baton {

Pattern::Pattern(int beats, std::vector<AnchorPoint> anchors, View view)
    : beats_(beats), anchors_(std::move(anchors)), view_(view) {
    if (beats_ < 1) {
        throw DomainError("pattern needs at least one beat, got " + std::to_string(beats_));
    }
    if (anchors_.size() != 2 * static_cast<std::size_t>(beats_)) {
        throw DomainError("anchor count " + std::to_string(anchors_.size()) +
                          " != 2N = " + std::to_string(2 * beats_));
    }
    for (std::size_t i = 0; i < anchors_.size(); ++i) {
        const auto expected = (i % 2 == 0) ? AnchorRole::preparation : AnchorRole::ictus;
        if (anchors_[i].role != expected) {
            throw DomainError("anchor " + std::to_string(i) +
                              " breaks preparation/ictus alternation");
        }
        if (!anchors_[i].position.finite() || !std::isfinite(anchors_[i].roundness)) {
            throw DomainError("anchor " + std::to_string(i) + " has a non-finite value");
        }
    }
}

HermiteSegment segment(const Pattern& pattern, int i) {
    const int count = static_cast<int>(pattern.anchor_count());
    if (i < 0 || i >= count) {
        throw DomainError("segment index " + std::to_string(i) + " outside [0, " +
                          std::to_string(count - 1) + "]");
    }
    const AnchorPoint& a = pattern.anchor(static_cast<std::size_t>(i));
    const AnchorPoint& b = pattern.anchor(static_cast<std::size_t>((i + 1) % count));
    return {a.position, {a.roundness, 0.0}, b.position, {b.roundness, 0.0}};
}

namespace {

struct Location {
    int index;
    double u;
};

Location locate(const Pattern& pattern, double s) {
    if (!std::isfinite(s)) {
        throw DomainError("curve parameter must be finite");
    }
    const double period = pattern.period();
    double r = std::fmod(s, period);
    if (r < 0.0) {
        r += period;
    }
    // A tiny negative s can round up to exactly 2N.
    if (r >= period) {
        r = 0.0;
    }
    const double whole = std::floor(r);
    return {static_cast<int>(whole), r - whole};
}

} // namespace

Point2 curve_point(const Pattern& pattern, double s) {
    const auto [i, u] = locate(pattern, s);
    return hermite_eval(segment(pattern, i), u);
}

Vec2 curve_tangent(const Pattern& pattern, double s) {
    const auto [i, u] = locate(pattern, s);
    return hermite_tangent(segment(pattern, i), u);
}

} // namespace baton
