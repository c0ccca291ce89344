#include "hypwave/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>

namespace hypwave {

namespace {

// Gauss-Kronrod 7/15 nodes and weights (QUADPACK dqk15).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double integral = 0.0;
    double error = 0.0;
    double floor = 0.0;  // round-off noise scale: no refinement can beat it
};

PanelEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);

    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    double fv[7][2];
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        fv[j][0] = f(c - dx);
        fv[j][1] = f(c + dx);
        const double fsum = fv[j][0] + fv[j][1];
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
        resk += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::abs(fv[j][0]) + std::abs(fv[j][1]));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::abs(fv[j][0] - reskh) + std::abs(fv[j][1] - reskh));
    }
    resabs *= std::abs(h);
    resasc *= std::abs(h);

    PanelEstimate out;
    out.integral = resk * h;
    double err = std::abs((resk - resg) * h);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    out.floor = 50.0 * eps * resabs;
    out.error = std::max(err, out.floor);
    return out;
}

struct Panel {
    double a, b;
    double integral, error, floor;
    int depth;
    std::uint64_t seq;  // creation order, breaks error ties deterministically
};

struct WorsePanel {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.seq > rhs.seq;
    }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadSpec& spec, const std::vector<double>& breakpoints) {
    if (!(a <= b)) throw Error("integrate: requires a <= b");
    if (a == b) return 0.0;

    std::vector<double> edges;
    edges.push_back(a);
    for (double x : breakpoints) {
        if (x > a && x < b) edges.push_back(x);
    }
    if (edges.size() == 1 && spec.initial_panels > 1) {
        for (int i = 1; i < spec.initial_panels; ++i) {
            edges.push_back(a + (b - a) * i / spec.initial_panels);
        }
    }
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Panel, std::vector<Panel>, WorsePanel> active;
    std::uint64_t seq = 0;
    double total = 0.0;
    double err_active = 0.0;
    double err_frozen = 0.0;
    double floor_total = 0.0;

    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const auto est = gk15(f, edges[i], edges[i + 1]);
        active.push({edges[i], edges[i + 1], est.integral, est.error, est.floor, 0, seq++});
        total += est.integral;
        err_active += est.error;
        floor_total += est.floor;
    }

    const std::size_t panel_budget = 400000;
    std::size_t panels_created = edges.size() - 1;

    // Attainable target: the requested tolerance, but never below the summed
    // round-off floor of the panels (refinement cannot reduce that).
    auto tolerance = [&](double magnitude) {
        return std::max({spec.abs_tol, spec.rel_tol * std::abs(magnitude),
                         2.0 * floor_total});
    };

    while (err_active + err_frozen > tolerance(total)) {
        if (active.empty() || panels_created > panel_budget) {
            throw NoConvergence("integrate: refinement budget exhausted");
        }
        const Panel worst = active.top();
        const double mid = worst.a + 0.5 * (worst.b - worst.a);
        const bool at_noise = worst.error <= 2.0 * worst.floor;
        if (worst.depth >= spec.max_depth || mid <= worst.a || mid >= worst.b || at_noise) {
            // Cannot (usefully) refine further; its error is now permanent.
            active.pop();
            err_active -= worst.error;
            err_frozen += worst.error;
            if (err_frozen > tolerance(total)) {
                throw NoConvergence("integrate: max_depth reached with error above tolerance");
            }
            continue;
        }
        active.pop();
        const auto left = gk15(f, worst.a, mid);
        const auto right = gk15(f, mid, worst.b);
        total += left.integral + right.integral - worst.integral;
        err_active += left.error + right.error - worst.error;
        floor_total += left.floor + right.floor - worst.floor;
        active.push({worst.a, mid, left.integral, left.error, left.floor, worst.depth + 1, seq++});
        active.push({mid, worst.b, right.integral, right.error, right.floor, worst.depth + 1, seq++});
        panels_created += 2;
    }
    return total;
}

double arc_integral(const std::function<double(double)>& g, const Hyperbola& h,
                    double lo, double hi, const QuadSpec& spec) {
    if (lo == hi) return 0.0;
    if (!(lo < hi)) throw Error("arc_integral: requires lo < hi");
    return h.semidiameter * integrate(g, lo, hi, spec);
}

namespace {

// d/da of point_at(h, a, alpha).
void arc_velocity(const Hyperbola& h, double a, double alpha, double& dx, double& dy) {
    const double s = (h.orientation == Hyperbola::Orientation::OpeningRight) ? 1.0 : -1.0;
    dx = s * h.semidiameter * std::sinh(a + alpha);
    dy = s * h.semidiameter * std::cosh(a + alpha);
}

// Sign converting an increasing-angle parametric integral into the
// requested geometric traversal: increasing angle moves upward on
// opening-right arms and downward on opening-left arms.
double traversal_sign(const Hyperbola& h, bool upward) {
    const bool increasing_is_upward =
        (h.orientation == Hyperbola::Orientation::OpeningRight);
    return (upward == increasing_is_upward) ? 1.0 : -1.0;
}

}  // namespace

double normal_flux(const ScalarField& u, const Hyperbola& h, double lo, double hi,
                   double alpha, bool upward, const QuadSpec& spec) {
    if (lo == hi) return 0.0;
    if (!(lo < hi)) throw Error("normal_flux: requires lo < hi");
    auto integrand = [&](double a) {
        const HPoint P = point_at(h, a, alpha);
        const Gradient g = u.gradient(P);
        double dx, dy;
        arc_velocity(h, a, alpha, dx, dy);
        return g.ux * dy + g.uy * dx;  // u_x dy + u_y dx = (du/dn) dtau
    };
    return traversal_sign(h, upward) * integrate(integrand, lo, hi, spec);
}

double closed_flux_check(const ScalarField& u, const DependenceConfig& cfg,
                         double rho, const QuadSpec& spec) {
    const RhoAngles ang = rho_angles(cfg, rho);
    const double on_gamma =
        normal_flux(u, cfg.gamma(), -ang.phi_i, ang.phi_i, cfg.alpha, true, spec);
    const double on_inner =
        normal_flux(u, cfg.inner(rho), -ang.theta_i, ang.theta_i, cfg.alpha, true, spec);
    return on_gamma - on_inner;
}

namespace {

// v du/dn - u dv/dn as a parametric differential form along the arc.
double pair_flux(const ScalarField& u, const ScalarField& v, const Hyperbola& h,
                 double lo, double hi, double alpha, bool upward, const QuadSpec& spec) {
    auto integrand = [&](double a) {
        const HPoint P = point_at(h, a, alpha);
        const Gradient gu = u.gradient(P);
        const Gradient gv = v.gradient(P);
        double dx, dy;
        arc_velocity(h, a, alpha, dx, dy);
        return v.eval(P) * (gu.ux * dy + gu.uy * dx) - u.eval(P) * (gv.ux * dy + gv.uy * dx);
    };
    return traversal_sign(h, upward) * integrate(integrand, lo, hi, spec);
}

}  // namespace

double green_identity_residual(const ScalarField& u, const ScalarField& v,
                               const DependenceConfig& cfg, double rho,
                               const QuadSpec& spec) {
    const RhoAngles ang = rho_angles(cfg, rho);
    const double boundary =
        pair_flux(u, v, cfg.gamma(), -ang.phi_i, ang.phi_i, cfg.alpha, true, spec) -
        pair_flux(u, v, cfg.inner(rho), -ang.theta_i, ang.theta_i, cfg.alpha, true, spec);
    auto integrand = [&](HPoint P) {
        return v.eval(P) * wave_operator(u, P) - u.eval(P) * wave_operator(v, P);
    };
    const double area = region_integral(integrand, {Region::Kind::D, cfg, rho}, spec);
    return std::abs(area - boundary);
}

namespace {

struct StRegion {
    double s_lo, s_hi;
    // t-range at fixed s; empty slices are allowed near the corners.
    std::function<double(double)> t_lo, t_hi;
};

StRegion d_region(const DependenceConfig& cfg, double rho) {
    StRegion r;
    const double p = cfg.p;
    const double sQ = cfg.Qc.s;
    const double tQ = cfg.Qc.t;
    if (rho == 0.0) {
        r.s_lo = sQ;
        r.s_hi = p * p / tQ;
        r.t_lo = [tQ](double) { return tQ; };
    } else {
        const RhoAngles ang = rho_angles(cfg, rho);
        r.s_lo = p * std::exp(cfg.alpha - ang.phi_i);
        r.s_hi = p * std::exp(cfg.alpha + ang.phi_i);
        const double rho2 = rho * rho;
        r.t_lo = [tQ, sQ, rho2](double s) { return tQ + rho2 / (s - sQ); };
    }
    r.t_hi = [p](double s) { return p * p / s; };
    return r;
}

StRegion dstar_region(const DependenceConfig& cfg, double rho) {
    StRegion r;
    const double p = cfg.p;
    const double sQs = p * p / cfg.Qc.t;
    const double tQs = p * p / cfg.Qc.s;
    if (rho == 0.0) {
        r.s_lo = cfg.Qc.s;
        r.s_hi = sQs;
        r.t_hi = [tQs](double) { return tQs; };
    } else {
        const RhoAngles ang = rho_angles(cfg, rho);
        r.s_lo = p * std::exp(cfg.alpha - ang.phi_i);
        r.s_hi = p * std::exp(cfg.alpha + ang.phi_i);
        const double rs2 = ang.rhostar * ang.rhostar;
        r.t_hi = [tQs, sQs, rs2](double s) { return tQs - rs2 / (sQs - s); };
    }
    r.t_lo = [p](double s) { return p * p / s; };
    return r;
}

double iterated_integral(const std::function<double(CharCoords)>& g, const StRegion& r,
                         const QuadSpec& spec) {
    QuadSpec inner = spec;
    inner.rel_tol = spec.rel_tol * 0.1;
    inner.abs_tol = spec.abs_tol * 0.1;
    auto slice = [&](double s) {
        const double lo = r.t_lo(s);
        const double hi = r.t_hi(s);
        if (!(lo < hi)) return 0.0;
        auto f = [&](double t) { return 0.5 * g(CharCoords{s, t}); };
        return integrate(f, lo, hi, inner);
    };
    return integrate(slice, r.s_lo, r.s_hi, spec);
}

}  // namespace

double region_integral(const std::function<double(CharCoords)>& g, const Region& region,
                       const QuadSpec& spec) {
    if (region.rho < 0.0 || (region.rho > 0.0 && region.rho >= region.cfg.p - region.cfg.q)) {
        throw RhoTooLarge("region_integral: need 0 <= rho < p - q");
    }
    switch (region.kind) {
        case Region::Kind::D:
            return iterated_integral(g, d_region(region.cfg, region.rho), spec);
        case Region::Kind::Dstar:
            return iterated_integral(g, dstar_region(region.cfg, region.rho), spec);
        case Region::Kind::Dunion:
            if (region.rho == 0.0) {
                // Exact characteristic rectangle.
                StRegion r;
                const double p = region.cfg.p;
                r.s_lo = region.cfg.Qc.s;
                r.s_hi = p * p / region.cfg.Qc.t;
                const double tQ = region.cfg.Qc.t;
                const double tQs = p * p / region.cfg.Qc.s;
                r.t_lo = [tQ](double) { return tQ; };
                r.t_hi = [tQs](double) { return tQs; };
                return iterated_integral(g, r, spec);
            }
            return iterated_integral(g, d_region(region.cfg, region.rho), spec) +
                   iterated_integral(g, dstar_region(region.cfg, region.rho), spec);
    }
    throw Error("region_integral: unknown region kind");
}

double region_integral(const std::function<double(HPoint)>& g, const Region& region,
                       const QuadSpec& spec) {
    return region_integral(
        [&g](CharCoords c) { return g(c.point()); }, region, spec);
}

}  // namespace hypwave
