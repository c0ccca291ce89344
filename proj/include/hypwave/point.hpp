#pragma once

#include <cmath>

#include "hypwave/errors.hpp"

namespace hypwave {

/// Point of the plane carrying the quadratic form d^2 = x^2 - y^2.
struct HPoint {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(HPoint a, HPoint b) {
        return a.x == b.x && a.y == b.y;
    }
};

/// Characteristic-coordinate view: s = x + y, t = x - y.  The coordinate
/// lines s = const, t = const are the characteristics of the wave operator,
/// and x^2 - y^2 = s * t.
struct CharCoords {
    double s = 0.0;
    double t = 0.0;

    static constexpr CharCoords of(HPoint p) { return {p.x + p.y, p.x - p.y}; }
    constexpr HPoint point() const { return {(s + t) / 2.0, (s - t) / 2.0}; }
};

/// Signed squared interval (a.x-b.x)^2 - (a.y-b.y)^2.  Negative for
/// spacelike separation.
inline double squared_interval(HPoint a, HPoint b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx - dy * dy;
}

/// Hyperbolic distance r = sqrt((a.x-b.x)^2 - (a.y-b.y)^2).
/// Throws SpacelikeSeparation when the squared interval is negative.
inline double hdistance(HPoint a, HPoint b) {
    const double d2 = squared_interval(a, b);
    if (d2 < 0.0) {
        throw SpacelikeSeparation("hdistance: points are spacelike-separated");
    }
    return std::sqrt(d2);
}

/// Hyperbolic rotation by angle mu about the origin.
inline HPoint hrotate(HPoint p, double mu) {
    const double ch = std::cosh(mu);
    const double sh = std::sinh(mu);
    return {p.x * ch + p.y * sh, p.x * sh + p.y * ch};
}

/// Hyperbolic angle of the ray from the origin through p, restricted to the
/// right sector x > |y|.  hrotate((d,0), hangle_of(p)) == p with
/// d = hdistance(p, origin).
inline double hangle_of(HPoint p) {
    if (!(p.x > std::abs(p.y))) {
        throw OutOfSector("hangle_of: point not in the right sector (x > |y|)");
    }
    return std::atanh(p.y / p.x);
}

/// Hyperbolic Carnot theorem: r^2 = p^2 + q^2 - 2 p q cosh(phi) for the
/// triangle with sides p, q enclosing the hyperbolic angle phi.  May be
/// negative; the caller interprets the sign.
inline double carnot_r2(double p, double q, double phi) {
    return p * p + q * q - 2.0 * p * q * std::cosh(phi);
}

}  // namespace hypwave
