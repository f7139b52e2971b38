#include "baton/geometry.hpp"

#include "baton/error.hpp"

#include <string>

namespace baton {

namespace {

void require_unit_parameter(double u) {
    if (!(u >= 0.0 && u <= 1.0)) {
        throw DomainError("hermite parameter u=" + std::to_string(u) + " outside [0,1]");
    }
}

} // namespace

Point2 hermite_eval(const HermiteSegment& seg, double u) {
    require_unit_parameter(u);
    const double u2 = u * u;
    const double u3 = u2 * u;
    const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
    const double h10 = u3 - 2.0 * u2 + u;
    const double h01 = -2.0 * u3 + 3.0 * u2;
    const double h11 = u3 - u2;
    return h00 * seg.p0 + h10 * seg.m0 + h01 * seg.p1 + h11 * seg.m1;
}

Vec2 hermite_tangent(const HermiteSegment& seg, double u) {
    require_unit_parameter(u);
    const double u2 = u * u;
    const double d00 = 6.0 * u2 - 6.0 * u;
    const double d10 = 3.0 * u2 - 4.0 * u + 1.0;
    const double d01 = -6.0 * u2 + 6.0 * u;
    const double d11 = 3.0 * u2 - 2.0 * u;
    return d00 * seg.p0 + d10 * seg.m0 + d01 * seg.p1 + d11 * seg.m1;
}

} // namespace baton
