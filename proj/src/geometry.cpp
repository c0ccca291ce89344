#include "hypwave/geometry.hpp"

#include <cmath>

namespace hypwave {

HPoint point_at(const Hyperbola& h, double angle, double alpha) {
    const double a = angle + alpha;
    const double d = h.semidiameter;
    const double ch = std::cosh(a);
    const double sh = std::sinh(a);
    if (h.orientation == Hyperbola::Orientation::OpeningRight) {
        return {h.center.x + d * ch, h.center.y + d * sh};
    }
    return {h.center.x - d * ch, h.center.y - d * sh};
}

HPoint symmetric_point(HPoint Q, double p) {
    const double q2 = squared_interval(Q, {0.0, 0.0});
    if (q2 <= 0.0) {
        throw DegenerateConfig("symmetric_point: Q on or outside the light cone of O");
    }
    const double scale = p * p / q2;
    return {scale * Q.x, scale * Q.y};
}

std::pair<HPoint, HPoint> dependence_points(HPoint Q, double p) {
    const auto qc = CharCoords::of(Q);
    if (!(qc.s > 0.0 && qc.t > 0.0)) {
        throw ConfigError("dependence_points: Q not in the right sector");
    }
    if (!(qc.s * qc.t < p * p)) {
        throw ConfigError("dependence_points: q >= p, Q outside the data hyperbola");
    }
    // Characteristics of Q are s = s_Q and t = t_Q; gamma is s t = p^2.
    const HPoint P1 = CharCoords{qc.s, p * p / qc.s}.point();  // lower
    const HPoint P2 = CharCoords{p * p / qc.t, qc.t}.point();  // upper
    return {P1, P2};
}

DependenceConfig DependenceConfig::make(HPoint Q, double p) {
    if (!(p > 0.0)) {
        throw ConfigError("DependenceConfig: p must be positive");
    }
    if (!(Q.x > std::abs(Q.y))) {
        throw ConfigError("DependenceConfig: Q not in the right sector");
    }
    DependenceConfig cfg;
    cfg.p = p;
    cfg.Q = Q;
    cfg.Qc = CharCoords::of(Q);
    cfg.q = hdistance(Q, {0.0, 0.0});
    if (!(cfg.q > 0.0)) {
        throw DegenerateConfig("DependenceConfig: Q on the light cone of O");
    }
    if (!(cfg.q < p)) {
        throw ConfigError("DependenceConfig: q >= p, Q outside the data hyperbola");
    }
    cfg.alpha = hangle_of(Q);
    cfg.A_p = cfg.q / p;
    cfg.qstar = p * p / cfg.q;
    cfg.Qstar = symmetric_point(Q, p);
    auto [P1, P2] = dependence_points(Q, p);
    cfg.P1 = P1;
    cfg.P2 = P2;
    return cfg;
}

double DependenceConfig::phi2() const {
    return std::acosh((p * p + q * q) / (2.0 * p * q));
}

bool DependenceConfig::tips_within_arc(double angle_lo, double angle_hi) const {
    const double half = phi2();
    return angle_lo <= alpha - half && alpha + half <= angle_hi;
}

double apollonius_ratio(HPoint P, const DependenceConfig& cfg) {
    const double r = hdistance(P, cfg.Q);
    const double rstar = hdistance(P, cfg.Qstar);
    return r / rstar;
}

RhoAngles rho_angles(const DependenceConfig& cfg, double rho) {
    const double p = cfg.p;
    const double q = cfg.q;
    if (!(rho > 0.0) || !(rho < p - q)) {
        throw RhoTooLarge("rho_angles: need 0 < rho < p - q");
    }
    RhoAngles a;
    a.rho = rho;
    a.rhostar = rho * p / q;
    a.theta_i = std::acosh((p * p - q * q - rho * rho) / (2.0 * q * rho));
    const double qs = cfg.qstar;
    const double rs = a.rhostar;
    a.theta_i_star = std::acosh((-p * p + qs * qs + rs * rs) / (2.0 * qs * rs));
    a.phi_i = std::acosh((p * p + q * q - rho * rho) / (2.0 * p * q));
    return a;
}

double c_function(HPoint P, const DependenceConfig& cfg) {
    const double r = hdistance(P, cfg.Q);
    const double rstar = hdistance(P, cfg.Qstar);
    return std::log((cfg.p / cfg.q) * (r / rstar));
}

}  // namespace hypwave
