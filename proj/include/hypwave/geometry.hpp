#pragma once

#include <utility>

#include "hypwave/point.hpp"

namespace hypwave {

/// Equilateral hyperbola: locus of points at hyperbolic distance
/// `semidiameter` from `center`.  OpeningRight arms are parametrized as
/// center + d*(cosh a, sinh a), OpeningLeft as center - d*(cosh a, sinh a).
struct Hyperbola {
    enum class Orientation { OpeningRight, OpeningLeft };

    HPoint center;
    double semidiameter = 1.0;
    Orientation orientation = Orientation::OpeningRight;
};

/// Point of the arm at parameter `angle`, with all angles measured relative
/// to a reference ray at hyperbolic angle `alpha` from the x axis.
HPoint point_at(const Hyperbola& h, double angle, double alpha);

/// Inversion of Q in the hyperbola of semi-diameter p centered at the
/// origin: Q* = (p^2/q^2) Q, so that q * q* = p^2.  Involution; fixes the
/// hyperbola itself.  Throws DegenerateConfig when Q lies on the light cone
/// of the origin.
HPoint symmetric_point(HPoint Q, double p);

/// Intersections of the characteristics through Q with the data hyperbola
/// (semi-diameter p, right arm): P1 on the lower characteristic, P2 on the
/// upper.  Requires 0 < q < p (Q strictly inside), else ConfigError.
std::pair<HPoint, HPoint> dependence_points(HPoint Q, double p);

/// Full geometric configuration of the dependence domain: the data
/// hyperbola gamma (semi-diameter p, center O), the evaluation point Q, its
/// symmetric point Q*, and the tips P1, P2.
struct DependenceConfig {
    double p = 0.0;      // gamma semi-diameter
    double q = 0.0;      // hdistance(Q, O)
    double alpha = 0.0;  // hyperbolic angle of the ray OQ
    double A_p = 0.0;    // q / p
    double qstar = 0.0;  // p^2 / q
    HPoint Q, Qstar, P1, P2;
    CharCoords Qc;  // characteristic coordinates of Q

    /// Validates 0 < q < p with Q in the right sector and derives the rest.
    static DependenceConfig make(HPoint Q, double p);

    /// Angular half-range of the dependence domain on gamma:
    /// cosh(phi2) = (p^2 + q^2) / (2 p q) = cosh(ln(p/q)), the angle at
    /// which r vanishes.
    double phi2() const;

    /// Optional finite-arc restriction: the construction uses the whole
    /// right arm, but data given only on the arc between the absolute
    /// parameter angles [angle_lo, angle_hi] determines the identity only
    /// when both tips (at alpha -+ phi2) fall inside.
    bool tips_within_arc(double angle_lo, double angle_hi) const;

    Hyperbola gamma() const {
        return {HPoint{0.0, 0.0}, p, Hyperbola::Orientation::OpeningRight};
    }
    Hyperbola inner(double rho) const {
        return {Q, rho, Hyperbola::Orientation::OpeningRight};
    }
    /// Hyperbola around Q*, opening toward gamma; its semi-diameter is tied
    /// to the inner one by rho* = rho p / q.
    Hyperbola outer(double rho) const {
        return {Qstar, rho * p / q, Hyperbola::Orientation::OpeningLeft};
    }
};

/// r / r* for a point timelike-separated from Q and Q*; equals A_p = q/p
/// whenever P lies on gamma.
double apollonius_ratio(HPoint P, const DependenceConfig& cfg);

/// Angles of the rho-indexed construction, all measured from the OQ ray:
///   cosh(theta_i)      = (p^2 - q^2 - rho^2) / (2 q rho)
///   cosh(theta_i_star) = (-p^2 + q*^2 + rho*^2) / (2 q* rho*)
///   cosh(phi_i)        = (p^2 + q^2 - rho^2) / (2 p q)
struct RhoAngles {
    double rho = 0.0;
    double rhostar = 0.0;
    double phi_i = 0.0;
    double theta_i = 0.0;
    double theta_i_star = 0.0;
};

/// Throws RhoTooLarge when rho >= p - q (inner hyperbola tangent to or
/// missing the data hyperbola).
RhoAngles rho_angles(const DependenceConfig& cfg, double rho);

/// Green-function analogue C = ln[(p/q)(r/r*)]: zero on gamma, satisfies the
/// wave equation away from the characteristics of Q and Q*.
double c_function(HPoint P, const DependenceConfig& cfg);

}  // namespace hypwave
