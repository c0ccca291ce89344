#pragma once

#include <functional>
#include <string>
#include <utility>

#include "hypwave/point.hpp"
#include "hypwave/polynomial.hpp"

namespace hypwave {

/// Gradient of a scalar field at a point.
struct Gradient {
    double ux = 0.0;
    double uy = 0.0;
};

/// Evaluatable scalar field u(x, y).  `eval` must be pure; fields are
/// immutable after construction, so concurrent evaluation needs no
/// coordination.  `grad` and `wave_op` are optional closed forms; when
/// absent the accessors fall back to central differences with the given
/// step.
struct ScalarField {
    std::function<double(HPoint)> eval;
    std::function<Gradient(HPoint)> grad;    // may be empty
    std::function<double(HPoint)> wave_op;   // may be empty
    std::string label;

    double operator()(HPoint p) const { return eval(p); }

    /// Analytic gradient when available, else second-order central
    /// differences with step h.
    Gradient gradient(HPoint p, double h = 1e-4) const;
};

/// Default finite-difference step.  Near-characteristic evaluations of
/// singular fields fail loudly instead of returning garbage: the stencil
/// crosses the cone and eval throws.
inline constexpr double kDefaultFdStep = 1e-4;

/// Delta_2 u = u_xx - u_yy at P: the analytic value when the field carries
/// one, otherwise a second-order central-difference stencil with step h.
double wave_operator(const ScalarField& u, HPoint P, double h = kDefaultFdStep);

/// Mixed differential parameter Delta(v, u) = v_x u_x - v_y u_y.
double mixed_parameter(const ScalarField& v, const ScalarField& u, HPoint P,
                       double h = kDefaultFdStep);

/// v = ln r with r the hyperbolic distance from Q; satisfies the wave
/// equation on the timelike region of Q.  eval throws SpacelikeSeparation
/// on or outside the cone of Q.
ScalarField log_r_field(HPoint Q);

/// u = F(x+y) + G(x-y) for polynomial profiles; exact gradient and
/// wave_op = 0.
ScalarField dalembert(const PolyST& F_of_s, const PolyST& G_of_t);

/// General d'Alembert solution from arbitrary profiles; wave_op = 0 by
/// construction, gradient falls back to finite differences.
ScalarField dalembert(std::function<double(double)> F, std::function<double(double)> G);

/// Field defined by a polynomial in characteristic coordinates; value,
/// gradient and wave operator are all exact.
ScalarField poly_field(const PolyST& u, std::string label = {});

/// Manufactured pair (u, f = Delta_2 u) for the non-homogeneous equation.
std::pair<ScalarField, ScalarField> manufactured(const PolyST& u);

/// Manufactured pair for a general field: f falls back to the
/// finite-difference wave operator when u has no analytic one.
std::pair<ScalarField, ScalarField> manufactured(const ScalarField& u,
                                                 double h = kDefaultFdStep);

}  // namespace hypwave
