#pragma once

// Test-side oracles, independent of the library's evaluation paths:
// a Richardson-refined trapezoid integrator, a finite-difference wave
// operator, and a bisection solver for characteristic/hyperbola
// intersections.

#include <cmath>
#include <functional>
#include <random>
#include <stdexcept>

#include "hypwave/point.hpp"

namespace oracle {

// Romberg integration on [a, b]; enough for smooth reference values.
inline double romberg(const std::function<double(double)>& f, double a, double b,
                      int levels = 20, double tol = 1e-13) {
    const int kMax = 24;
    if (levels > kMax) levels = kMax;
    double R[kMax][kMax];
    double h = b - a;
    R[0][0] = 0.5 * h * (f(a) + f(b));
    for (int i = 1; i < levels; ++i) {
        h *= 0.5;
        double sum = 0.0;
        const long n = 1L << (i - 1);
        for (long k = 1; k <= n; ++k) sum += f(a + (2 * k - 1) * h);
        R[i][0] = 0.5 * R[i - 1][0] + h * sum;
        double pow4 = 1.0;
        for (int j = 1; j <= i; ++j) {
            pow4 *= 4.0;
            R[i][j] = R[i][j - 1] + (R[i][j - 1] - R[i - 1][j - 1]) / (pow4 - 1.0);
        }
        if (i > 3 && std::abs(R[i][i] - R[i - 1][i - 1]) < tol * (1.0 + std::abs(R[i][i]))) {
            return R[i][i];
        }
    }
    return R[levels - 1][levels - 1];
}

// Central-difference Delta_2 u = u_xx - u_yy, independent of the library FD.
inline double fd_wave_op(const std::function<double(hypwave::HPoint)>& u,
                         hypwave::HPoint P, double h = 1e-4) {
    const double c = u(P);
    const double uxx = (u({P.x + h, P.y}) - 2.0 * c + u({P.x - h, P.y})) / (h * h);
    const double uyy = (u({P.x, P.y + h}) - 2.0 * c + u({P.x, P.y - h})) / (h * h);
    return uxx - uyy;
}

// Intersection of the line y - eta = dir*(x - xi) with the right arm of
// x^2 - y^2 = p^2, found by bisection on x (independent of the library's
// characteristic-coordinate construction).  `forward` selects the branch
// with x > xi.
inline hypwave::HPoint line_hyperbola_intersection(double xi, double eta, double dir,
                                                   double p, bool forward) {
    auto g = [&](double x) {
        const double y = eta + dir * (x - xi);
        return x * x - y * y - p * p;
    };
    double lo, hi;
    if (forward) {
        lo = xi;
        hi = xi + 1.0;
        while (g(hi) < 0.0) hi = xi + 2.0 * (hi - xi);
        if (g(lo) > 0.0) throw std::runtime_error("oracle: no forward intersection");
    } else {
        throw std::runtime_error("oracle: only forward branch needed");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    const double x = 0.5 * (lo + hi);
    return {x, eta + dir * (x - xi)};
}

// Deterministic RNG helpers for property tests.
inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed1234u);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

}  // namespace oracle
