#pragma once

#include <vector>

namespace hypwave {

/// One sample of a limit sequence: the value at extrapolation variable w.
struct FitPoint {
    double w = 0.0;
    double value = 0.0;
};

/// Schedule realizing the symbolic limits rho -> 0 (theta^i -> inf)
/// numerically.  Convergence is logarithmic in rho but the error is a power
/// series in w = 1/theta^i, so the limit is read off by polynomial
/// extrapolation in w.
struct LimitSchedule {
    std::vector<double> rho_values;  // strictly decreasing, all < p - q
    int extrapolation_order = 2;
    /// Consistency threshold: the fitted polynomial must reproduce the
    /// unused (coarsest) schedule points to this relative accuracy.
    double fit_rtol = 1e-3;

    /// rho = 10^{-k} for k in [k_lo, k_hi].
    static LimitSchedule log10_steps(int k_lo, int k_hi, int order = 2);

    void validate(double p_minus_q) const;
};

/// Richardson-style limit: interpolates a degree-`order` polynomial in w
/// through the order+1 points closest to w = 0 and evaluates it at 0.
/// Remaining points act as a consistency diagnostic; if the polynomial
/// misses any of them by more than fit_rtol * (1 + |limit|), the sequence is
/// not described by the fit and ExtrapolationUnstable is thrown.
double extrapolate_to_zero(std::vector<FitPoint> points, int order, double fit_rtol);

}  // namespace hypwave
