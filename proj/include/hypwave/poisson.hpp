#pragma once

#include "hypwave/extrapolation.hpp"
#include "hypwave/field.hpp"
#include "hypwave/geometry.hpp"
#include "hypwave/quadrature.hpp"

namespace hypwave {

/// Two sides of an identity with their absolute difference.
struct IdentityResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
};

/// Poisson-like kernel (p^2 - q^2) / (p^2 + q^2 - 2 p q cosh(phi)):
/// positive for |phi| < phi2, singular where the denominator (= r^2 by
/// Carnot) vanishes.
double kernel(double p, double q, double phi);

/// Analytic oracle for the kernel integral:
///   int_0^phi kernel d(phi') = 2 artanh(((p+q)/(p-q)) tanh(phi/2)),
/// valid for 0 <= phi < phi2.
double kernel_integral_closed_form(double p, double q, double phi_hi);

/// Kernel-weighted boundary integral
///   int_{-phi_i}^{+phi_i} u(gamma(phi)) kernel(p, q, phi) d(phi)
/// evaluated in the tip variable Delta = phi_i - |phi| with the
/// cancellation-free denominator r^2 = rho^2 + 4 p q sinh(Delta/2)
/// sinh(phi_i - Delta/2), so the sharp peaks at the tips cost no precision.
double kernel_weighted_boundary(const ScalarField& u, const DependenceConfig& cfg,
                                const RhoAngles& ang, const QuadSpec& spec);

/// Finite-rho three-integral identity: for Delta_2 u = 0 between the inner
/// and outer hyperbolas,
///   lhs = int_{-th_i}^{th_i} u(I) dtheta + int_{-th_i*}^{th_i*} u(I*) dtheta*
///   rhs = int_{-phi_i}^{phi_i} u(gamma) kernel dphi.
IdentityResult finite_rho_identity(const ScalarField& u, const DependenceConfig& cfg,
                                   double rho, const QuadSpec& spec);

/// Mean of u over the inner arc (starred = false) or the outer arc
/// (starred = true); both are normalized by the same divergent range
/// 2 theta_i.  Tends to u(Q) and u(Q*) respectively as rho -> 0.
double mean_on_I(const ScalarField& u, const DependenceConfig& cfg, double rho,
                 bool starred, const QuadSpec& spec);

/// Limit of the kernel side over 2 theta_i: evaluates rhs/(2 theta_i) for
/// each scheduled rho and extrapolates in w = 1/theta_i.  Converges to
/// u(P1) + u(P2) -- the boundary data alone determine the sum.
double boundary_sum_limit(const ScalarField& u, const DependenceConfig& cfg,
                          const LimitSchedule& schedule, const QuadSpec& spec);

/// Extrapolated mean-value limit over the same schedule; tends to u(Q) or
/// u(Q*).
double mean_limit(const ScalarField& u, const DependenceConfig& cfg,
                  const LimitSchedule& schedule, bool starred, const QuadSpec& spec);

/// The homogeneous final identity u(Q) + u(Q*) = u(P1) + u(P2), evaluated
/// directly (no quadrature).  Exact for every d'Alembert solution: Q* swaps
/// the characteristic coordinates carried by P1 and P2.
IdentityResult final_identity(const ScalarField& u, const DependenceConfig& cfg);

/// theta_i_star / theta_i at the given rho; increases to 1 as rho -> 0.
double theta_range_ratio(const DependenceConfig& cfg, double rho);

}  // namespace hypwave
