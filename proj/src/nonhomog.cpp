#include "hypwave/nonhomog.hpp"

#include <cmath>

namespace hypwave {

SourceProblem SourceProblem::from_poly(const PolyST& u, const DependenceConfig& cfg) {
    auto [uf, ff] = manufactured(u);
    return {std::move(uf), std::move(ff), cfg};
}

namespace {

// ln r over D and ln r* over D* as functions of the characteristic
// coordinates, where r^2 = (s - s_Q)(t - t_Q) and
// r*^2 = (s_Q* - s)(t_Q* - t) are products of exact differences (the
// Cartesian form cancels catastrophically near the corners).  Zero-measure
// corner slivers that round onto the boundary contribute nothing.
std::function<double(CharCoords)> ln_r_weighted(const ScalarField& f, CharCoords center,
                                                bool starred) {
    const double sc = center.s;
    const double tc = center.t;
    return [eval = f.eval, sc, tc, starred](CharCoords c) {
        const double fs = starred ? sc - c.s : c.s - sc;
        const double ft = starred ? tc - c.t : c.t - tc;
        if (fs <= 0.0 || ft <= 0.0) return 0.0;
        return 0.5 * std::log(fs * ft) * eval(c.point());
    };
}

}  // namespace

IdentityResult combined_identity_finite(const SourceProblem& prob, double rho,
                                        const QuadSpec& spec) {
    const DependenceConfig& cfg = prob.cfg;
    const ScalarField& u = prob.u;
    const ScalarField& f = prob.f;
    const RhoAngles ang = rho_angles(cfg, rho);

    auto on_arc = [&](const Hyperbola& h, double half_range) {
        auto integrand = [&](double a) { return u.eval(point_at(h, a, cfg.alpha)); };
        return integrate(integrand, -half_range, half_range, spec);
    };
    IdentityResult out;
    out.lhs = on_arc(cfg.inner(rho), ang.theta_i) +
              on_arc(cfg.outer(rho), ang.theta_i_star) -
              kernel_weighted_boundary(u, cfg, ang, spec);

    const Region D{Region::Kind::D, cfg, rho};
    const Region Dstar{Region::Kind::Dstar, cfg, rho};
    const double f_D = region_integral(f.eval, D, spec);
    const double f_Dstar = region_integral(f.eval, Dstar, spec);
    const double lnr_f =
        region_integral(ln_r_weighted(f, cfg.Qc, false), D, spec);
    const double lnrs_f =
        region_integral(ln_r_weighted(f, CharCoords::of(cfg.Qstar), true), Dstar, spec);

    out.rhs = -std::log(rho) * (f_D + f_Dstar) + std::log(cfg.A_p) * f_Dstar +
              lnr_f + lnrs_f;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

std::array<double, 4> area_limit_terms(const SourceProblem& prob, double rho,
                                       const QuadSpec& spec) {
    const DependenceConfig& cfg = prob.cfg;
    const ScalarField& f = prob.f;
    const RhoAngles ang = rho_angles(cfg, rho);
    const double den = 2.0 * ang.theta_i;

    const Region D{Region::Kind::D, cfg, rho};
    const Region Dstar{Region::Kind::Dstar, cfg, rho};
    const double f_D = region_integral(f.eval, D, spec);
    const double f_Dstar = region_integral(f.eval, Dstar, spec);
    const double lnr_f =
        region_integral(ln_r_weighted(f, cfg.Qc, false), D, spec);
    const double lnrs_f =
        region_integral(ln_r_weighted(f, CharCoords::of(cfg.Qstar), true), Dstar, spec);

    return {-std::log(rho) * (f_D + f_Dstar) / den,
            std::log(cfg.A_p) * f_Dstar / den,
            lnr_f / den,
            lnrs_f / den};
}

IdentityResult nonhomog_final_identity(const SourceProblem& prob, const QuadSpec& spec) {
    const DependenceConfig& cfg = prob.cfg;
    IdentityResult out;
    out.lhs = prob.u.eval(cfg.Q) + prob.u.eval(cfg.Qstar);
    const double area =
        region_integral(prob.f.eval, {Region::Kind::Dunion, cfg, 0.0}, spec);
    out.rhs = prob.u.eval(cfg.P1) + prob.u.eval(cfg.P2) + 0.5 * area;
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

}  // namespace hypwave
