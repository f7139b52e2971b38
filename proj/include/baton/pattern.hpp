#pragma once

#include "baton/geometry.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace baton {

enum class AnchorRole { preparation, ictus };
enum class View { conductor, performer };

struct AnchorPoint {
    AnchorRole role = AnchorRole::preparation;
    Point2 position;
    // Signed horizontal tangent magnitude. Zero gives a cusp; the sign picks
    // the direction in which the curve passes the anchor.
    double roundness = 0.0;

    friend bool operator==(const AnchorPoint&, const AnchorPoint&) = default;
};

// A closed conducting pattern: 2N anchors in cyclic order P1, I1, ..., PN, IN.
// The curve parameter s runs over [0, 2N); anchor i sits at s = i.
class Pattern {
public:
    // Throws DomainError unless beats >= 1, anchors.size() == 2*beats, roles
    // alternate starting with a preparation and every number is finite.
    Pattern(int beats, std::vector<AnchorPoint> anchors, View view = View::conductor);

    int beats() const noexcept { return beats_; }
    std::size_t anchor_count() const noexcept { return anchors_.size(); }
    std::span<const AnchorPoint> anchors() const noexcept { return anchors_; }
    const AnchorPoint& anchor(std::size_t i) const { return anchors_.at(i); }
    View view() const noexcept { return view_; }

    // Curve-parameter period, 2N.
    double period() const noexcept { return 2.0 * beats_; }

    // Free real parameters of the geometry (x, y, roundness per anchor).
    std::size_t parameter_count() const noexcept { return 3 * anchors_.size(); }

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    int beats_;
    std::vector<AnchorPoint> anchors_;
    View view_;
};

// Segment i joins anchor i to anchor (i+1) mod 2N with horizontal tangents.
HermiteSegment segment(const Pattern& pattern, int i);

// g(s). s is reduced modulo 2N, so any finite s is accepted.
Point2 curve_point(const Pattern& pattern, double s);

// dg/ds. At integer s this is (roundness, 0) of that anchor.
Vec2 curve_tangent(const Pattern& pattern, double s);

} // namespace baton
