#pragma once

#include <functional>
#include <vector>

#include "hypwave/field.hpp"
#include "hypwave/geometry.hpp"

namespace hypwave {

/// Quadrature and extrapolation policy.  Tolerances apply to the whole
/// integral: accepted when the summed error estimate drops below
/// max(abs_tol, rel_tol * |I|).
struct QuadSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_depth = 48;       // bisection limit per initial panel
    int initial_panels = 8;
};

/// Globally adaptive Gauss-Kronrod 7/15 on [a, b] (requires a <= b).
/// `breakpoints` seeds extra panel boundaries (values outside (a, b) are
/// ignored); panels are refined worst-first in a deterministic order.
/// Throws NoConvergence when the refinement budget is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadSpec& spec, const std::vector<double>& breakpoints = {});

/// Line integral of g against the arc-length element d(tau) =
/// semidiameter * d(angle) along a hyperbola arm.  g receives the
/// parametrization angle (the one point_at takes).
double arc_integral(const std::function<double(double)>& g, const Hyperbola& h,
                    double lo, double hi, const QuadSpec& spec);

/// Integral of the normal derivative, int (du/dn) d(tau), over the arc of h
/// between parameter angles lo and hi (angles measured from the alpha ray).
/// `upward` selects the traversal direction in the geometric sense of
/// increasing y, which fixes the sign of n: the differential-form identity
/// u_x dy + u_y dx = (du/dn) d(tau) is evaluated parametrically.
double normal_flux(const ScalarField& u, const Hyperbola& h, double lo, double hi,
                   double alpha, bool upward, const QuadSpec& spec);

/// Closed-cycle flux around the lens between the inner hyperbola and gamma:
/// gamma-arc traversed upward minus inner-arc traversed upward.  Vanishes
/// for wave-equation solutions.
double closed_flux_check(const ScalarField& u, const DependenceConfig& cfg,
                         double rho, const QuadSpec& spec);

/// |area side - boundary side| of the Green identity
///   iint (v Delta_2 u - u Delta_2 v) dx dy = oint (v du/dn - u dv/dn) dtau
/// on the lens between the inner hyperbola and gamma.
double green_identity_residual(const ScalarField& u, const ScalarField& v,
                               const DependenceConfig& cfg, double rho,
                               const QuadSpec& spec);

/// Integration region in the dependence-domain picture.  D lies between the
/// inner hyperbola and gamma, Dstar between gamma and the outer hyperbola;
/// at rho = 0 their union is exactly the characteristic rectangle
/// s in [s_Q, p^2/t_Q], t in [t_Q, p^2/s_Q].
struct Region {
    enum class Kind { D, Dstar, Dunion };
    Kind kind = Kind::Dunion;
    DependenceConfig cfg;
    double rho = 0.0;
};

/// Adaptive 2-D quadrature of g over the region, iterated in characteristic
/// coordinates where every boundary is a coordinate line or the curve
/// s t = p^2 (dx dy = ds dt / 2).
double region_integral(const std::function<double(HPoint)>& g, const Region& region,
                       const QuadSpec& spec);

/// Same quadrature with the integrand evaluated directly in characteristic
/// coordinates.  Kernel-type weights like ln r = ln((s-s_Q)(t-t_Q))/2 keep
/// full precision near the region corners this way, where the Cartesian
/// round trip cancels catastrophically.
double region_integral(const std::function<double(CharCoords)>& g, const Region& region,
                       const QuadSpec& spec);

}  // namespace hypwave
