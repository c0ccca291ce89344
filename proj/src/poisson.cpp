#include "hypwave/poisson.hpp"

#include <algorithm>
#include <cmath>

namespace hypwave {

LimitSchedule LimitSchedule::log10_steps(int k_lo, int k_hi, int order) {
    LimitSchedule s;
    s.extrapolation_order = order;
    for (int k = k_lo; k <= k_hi; ++k) {
        s.rho_values.push_back(std::pow(10.0, -k));
    }
    return s;
}

void LimitSchedule::validate(double p_minus_q) const {
    if (static_cast<int>(rho_values.size()) < extrapolation_order + 1) {
        throw ConfigError("LimitSchedule: need at least order + 1 rho values");
    }
    double prev = p_minus_q;
    for (double r : rho_values) {
        if (!(r > 0.0) || !(r < prev)) {
            throw ConfigError("LimitSchedule: rho values must be strictly decreasing in (0, p - q)");
        }
        prev = r;
    }
}

double extrapolate_to_zero(std::vector<FitPoint> points, int order, double fit_rtol) {
    const int n = static_cast<int>(points.size());
    const int m = order + 1;
    if (n < m) throw ConfigError("extrapolate_to_zero: need at least order + 1 points");
    std::sort(points.begin(), points.end(),
              [](const FitPoint& a, const FitPoint& b) { return a.w < b.w; });

    // Newton divided differences through the m points nearest w = 0.
    std::vector<double> coef(m);
    for (int i = 0; i < m; ++i) coef[i] = points[i].value;
    for (int j = 1; j < m; ++j) {
        for (int i = m - 1; i >= j; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (points[i].w - points[i - j].w);
        }
    }
    auto eval = [&](double w) {
        double acc = coef[m - 1];
        for (int i = m - 2; i >= 0; --i) acc = coef[i] + acc * (w - points[i].w);
        return acc;
    };
    const double limit = eval(0.0);

    for (int i = m; i < n; ++i) {
        const double miss = std::abs(eval(points[i].w) - points[i].value);
        if (miss > fit_rtol * (1.0 + std::abs(limit))) {
            throw ExtrapolationUnstable("extrapolate_to_zero: fit misses schedule point");
        }
    }
    return limit;
}

double kernel(double p, double q, double phi) {
    return (p * p - q * q) / carnot_r2(p, q, phi);
}

double kernel_integral_closed_form(double p, double q, double phi_hi) {
    return 2.0 * std::atanh(((p + q) / (p - q)) * std::tanh(0.5 * phi_hi));
}

double kernel_weighted_boundary(const ScalarField& u, const DependenceConfig& cfg,
                                const RhoAngles& ang, const QuadSpec& spec) {
    const double p = cfg.p;
    const double q = cfg.q;
    const double phi_i = ang.phi_i;
    const double rho2 = ang.rho * ang.rho;
    const double num = p * p - q * q;
    const Hyperbola gamma = cfg.gamma();

    // Integrand in the tip variable Delta = phi_i - |phi|, folding the two
    // halves of the symmetric range together.  r^2(Delta) stays exact down
    // to the tips where the kernel peaks at (p^2-q^2)/rho^2.
    auto integrand = [&](double delta) {
        const double phi = phi_i - delta;
        const double r2 =
            rho2 + 4.0 * p * q * std::sinh(0.5 * delta) * std::sinh(phi_i - 0.5 * delta);
        const double usum = u.eval(point_at(gamma, phi, cfg.alpha)) +
                            u.eval(point_at(gamma, -phi, cfg.alpha));
        return usum * num / r2;
    };

    // Geometric breakpoints resolving the kernel peak, whose width scale in
    // Delta is rho^2 / (2 p q sinh(phi_i)).
    std::vector<double> breaks;
    const double width = rho2 / (2.0 * p * q * std::sinh(phi_i));
    if (width > 0.0) {
        for (double d = width; d < phi_i; d *= 8.0) breaks.push_back(d);
    }
    return integrate(integrand, 0.0, phi_i, spec, breaks);
}

namespace {

double inner_arc_integral(const ScalarField& u, const DependenceConfig& cfg,
                          const Hyperbola& h, double half_range, const QuadSpec& spec) {
    auto integrand = [&](double a) { return u.eval(point_at(h, a, cfg.alpha)); };
    return integrate(integrand, -half_range, half_range, spec);
}

}  // namespace

IdentityResult finite_rho_identity(const ScalarField& u, const DependenceConfig& cfg,
                                   double rho, const QuadSpec& spec) {
    const RhoAngles ang = rho_angles(cfg, rho);
    const double on_inner = inner_arc_integral(u, cfg, cfg.inner(rho), ang.theta_i, spec);
    const double on_outer =
        inner_arc_integral(u, cfg, cfg.outer(rho), ang.theta_i_star, spec);
    IdentityResult out;
    out.lhs = on_inner + on_outer;
    out.rhs = kernel_weighted_boundary(u, cfg, ang, spec);
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

double mean_on_I(const ScalarField& u, const DependenceConfig& cfg, double rho,
                 bool starred, const QuadSpec& spec) {
    const RhoAngles ang = rho_angles(cfg, rho);
    const double val = starred
        ? inner_arc_integral(u, cfg, cfg.outer(rho), ang.theta_i_star, spec)
        : inner_arc_integral(u, cfg, cfg.inner(rho), ang.theta_i, spec);
    return val / (2.0 * ang.theta_i);
}

double boundary_sum_limit(const ScalarField& u, const DependenceConfig& cfg,
                          const LimitSchedule& schedule, const QuadSpec& spec) {
    schedule.validate(cfg.p - cfg.q);
    std::vector<FitPoint> pts;
    pts.reserve(schedule.rho_values.size());
    for (double rho : schedule.rho_values) {
        const RhoAngles ang = rho_angles(cfg, rho);
        const double v = kernel_weighted_boundary(u, cfg, ang, spec) / (2.0 * ang.theta_i);
        pts.push_back({1.0 / ang.theta_i, v});
    }
    return extrapolate_to_zero(std::move(pts), schedule.extrapolation_order,
                               schedule.fit_rtol);
}

double mean_limit(const ScalarField& u, const DependenceConfig& cfg,
                  const LimitSchedule& schedule, bool starred, const QuadSpec& spec) {
    schedule.validate(cfg.p - cfg.q);
    std::vector<FitPoint> pts;
    pts.reserve(schedule.rho_values.size());
    for (double rho : schedule.rho_values) {
        const RhoAngles ang = rho_angles(cfg, rho);
        pts.push_back({1.0 / ang.theta_i, mean_on_I(u, cfg, rho, starred, spec)});
    }
    return extrapolate_to_zero(std::move(pts), schedule.extrapolation_order,
                               schedule.fit_rtol);
}

IdentityResult final_identity(const ScalarField& u, const DependenceConfig& cfg) {
    IdentityResult out;
    out.lhs = u.eval(cfg.Q) + u.eval(cfg.Qstar);
    out.rhs = u.eval(cfg.P1) + u.eval(cfg.P2);
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

double theta_range_ratio(const DependenceConfig& cfg, double rho) {
    const RhoAngles ang = rho_angles(cfg, rho);
    return ang.theta_i_star / ang.theta_i;
}

}  // namespace hypwave
