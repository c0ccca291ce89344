#pragma once

#include <array>

#include "hypwave/poisson.hpp"

namespace hypwave {

/// Manufactured non-homogeneous problem: Delta_2 u = f on the dependence
/// domain of cfg.
struct SourceProblem {
    ScalarField u;
    ScalarField f;
    DependenceConfig cfg;

    /// Builds u and f = Delta_2 u from a polynomial in (s, t); both exact.
    static SourceProblem from_poly(const PolyST& u, const DependenceConfig& cfg);
};

/// Finite-rho identity extended with the source terms:
///   lhs = int_I u dtheta + int_I* u dtheta* - int_gamma u kernel dphi
///   rhs = -ln(rho) iint_{D+D*} f + ln(A_p) iint_{D*} f
///         + iint_D ln(r) f + iint_{D*} ln(r*) f.
IdentityResult combined_identity_finite(const SourceProblem& prob, double rho,
                                        const QuadSpec& spec);

/// The four area-integral terms of the rhs above, each divided by the
/// divergent range 2 theta_i(rho).  As rho -> 0 they tend to
/// (1/2) iint_{D+D*} f, 0, 0, 0 at logarithmic rates.
std::array<double, 4> area_limit_terms(const SourceProblem& prob, double rho,
                                       const QuadSpec& spec = QuadSpec{1e-8, 1e-10, 48, 8});

/// Extended final identity
///   u(Q) + u(Q*) = u(P1) + u(P2) + (1/2) iint_{D+D*} f dx dy
/// with the area term taken over the characteristic rectangle (rho = 0).
IdentityResult nonhomog_final_identity(const SourceProblem& prob, const QuadSpec& spec);

}  // namespace hypwave
