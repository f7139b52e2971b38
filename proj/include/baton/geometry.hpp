#pragma once

#include <cmath>

namespace baton {

// Plane coordinates; y grows upward.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator*(double k, Vec2 v) { return {k * v.x, k * v.y}; }
    friend constexpr Vec2 operator*(Vec2 v, double k) { return {k * v.x, k * v.y}; }
    friend constexpr bool operator==(Vec2 a, Vec2 b) = default;

    double norm() const { return std::hypot(x, y); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

using Point2 = Vec2;

inline double distance(Point2 a, Point2 b) { return (a - b).norm(); }

// Cubic Hermite segment from p0 to p1 with end tangents m0, m1, on u in [0,1].
struct HermiteSegment {
    Point2 p0;
    Vec2 m0;
    Point2 p1;
    Vec2 m1;
};

// Throws DomainError when u is outside [0,1] or not finite.
Point2 hermite_eval(const HermiteSegment& seg, double u);

// dH/du. Returns m0 at u=0 and m1 at u=1 exactly.
Vec2 hermite_tangent(const HermiteSegment& seg, double u);

} // namespace baton
