#pragma once

#include <cmath>
#include <utility>

#include "hypwave/point.hpp"

namespace hypwave {

/// Local n,tau frame attached to a point of a curve.  tau is tangent to the
/// curve, n is its hyperbolic normal (the reflection of tau across the axes
/// bisectors); sigma is the hyperbolic angle between tau and the local y
/// axis.  When tau points upward the transformation carries the + sign,
/// downward the - sign:
///
///   x - x_c = +-(n cosh(sigma) + tau sinh(sigma))
///   y - y_c = +-(n sinh(sigma) + tau cosh(sigma))
struct LocalFrame {
    HPoint origin;
    double sigma = 0.0;
    bool upward = true;
};

/// Local coordinates (n, tau) of a point.
struct LocalCoords {
    double n = 0.0;
    double tau = 0.0;
};

inline LocalCoords to_local(HPoint p, const LocalFrame& f) {
    const double dx = p.x - f.origin.x;
    const double dy = p.y - f.origin.y;
    const double ch = std::cosh(f.sigma);
    const double sh = std::sinh(f.sigma);
    const double sign = f.upward ? 1.0 : -1.0;
    return {sign * (dx * ch - dy * sh), sign * (-dx * sh + dy * ch)};
}

inline HPoint from_local(LocalCoords c, const LocalFrame& f) {
    const double ch = std::cosh(f.sigma);
    const double sh = std::sinh(f.sigma);
    const double sign = f.upward ? 1.0 : -1.0;
    return {f.origin.x + sign * (c.n * ch + c.tau * sh),
            f.origin.y + sign * (c.n * sh + c.tau * ch)};
}

/// Columns of the from_local map: the direction derivatives dx/dn = dy/dtau
/// and dx/dtau = dy/dn, used when assembling normal derivatives.
inline std::pair<double, double> frame_normal_direction(const LocalFrame& f) {
    const double sign = f.upward ? 1.0 : -1.0;
    return {sign * std::cosh(f.sigma), sign * std::sinh(f.sigma)};
}

}  // namespace hypwave
