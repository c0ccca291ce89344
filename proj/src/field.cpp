#include "hypwave/field.hpp"

#include <cmath>

namespace hypwave {

Gradient ScalarField::gradient(HPoint p, double h) const {
    if (grad) return grad(p);
    const double fxp = eval({p.x + h, p.y});
    const double fxm = eval({p.x - h, p.y});
    const double fyp = eval({p.x, p.y + h});
    const double fym = eval({p.x, p.y - h});
    return {(fxp - fxm) / (2.0 * h), (fyp - fym) / (2.0 * h)};
}

double wave_operator(const ScalarField& u, HPoint P, double h) {
    if (u.wave_op) return u.wave_op(P);
    const double c = u.eval(P);
    const double uxx = (u.eval({P.x + h, P.y}) - 2.0 * c + u.eval({P.x - h, P.y})) / (h * h);
    const double uyy = (u.eval({P.x, P.y + h}) - 2.0 * c + u.eval({P.x, P.y - h})) / (h * h);
    return uxx - uyy;
}

double mixed_parameter(const ScalarField& v, const ScalarField& u, HPoint P, double h) {
    const Gradient gv = v.gradient(P, h);
    const Gradient gu = u.gradient(P, h);
    return gv.ux * gu.ux - gv.uy * gu.uy;
}

ScalarField log_r_field(HPoint Q) {
    ScalarField f;
    f.label = "ln r";
    f.eval = [Q](HPoint p) {
        const double r2 = squared_interval(p, Q);
        if (r2 <= 0.0) {
            throw SpacelikeSeparation("log_r_field: point on or outside the cone of Q");
        }
        return 0.5 * std::log(r2);
    };
    f.grad = [Q](HPoint p) -> Gradient {
        const double r2 = squared_interval(p, Q);
        if (r2 <= 0.0) {
            throw SpacelikeSeparation("log_r_field: point on or outside the cone of Q");
        }
        return {(p.x - Q.x) / r2, -(p.y - Q.y) / r2};
    };
    f.wave_op = [](HPoint) { return 0.0; };
    return f;
}

ScalarField poly_field(const PolyST& u, std::string label) {
    ScalarField f;
    f.label = label.empty() ? u.to_string() : std::move(label);
    const PolyST us = u.ds();
    const PolyST ut = u.dt();
    PolyST wave = us.dt();
    wave *= 4.0;  // Delta_2 = 4 d^2/(ds dt)
    f.eval = [u](HPoint p) {
        const auto c = CharCoords::of(p);
        return u.eval(c.s, c.t);
    };
    f.grad = [us, ut](HPoint p) -> Gradient {
        const auto c = CharCoords::of(p);
        const double dus = us.eval(c.s, c.t);
        const double dut = ut.eval(c.s, c.t);
        // u_x = u_s + u_t, u_y = u_s - u_t
        return {dus + dut, dus - dut};
    };
    f.wave_op = [wave](HPoint p) {
        const auto c = CharCoords::of(p);
        return wave.eval(c.s, c.t);
    };
    return f;
}

ScalarField dalembert(const PolyST& F_of_s, const PolyST& G_of_t) {
    ScalarField f = poly_field(F_of_s + G_of_t);
    f.wave_op = [](HPoint) { return 0.0; };
    return f;
}

ScalarField dalembert(std::function<double(double)> F, std::function<double(double)> G) {
    ScalarField f;
    f.label = "F(x+y) + G(x-y)";
    f.eval = [F = std::move(F), G = std::move(G)](HPoint p) {
        return F(p.x + p.y) + G(p.x - p.y);
    };
    f.wave_op = [](HPoint) { return 0.0; };
    return f;
}

std::pair<ScalarField, ScalarField> manufactured(const PolyST& u) {
    PolyST rhs = u.ds().dt();
    rhs *= 4.0;
    ScalarField uf = poly_field(u);
    ScalarField ff = poly_field(rhs, "Delta_2(" + uf.label + ")");
    return {std::move(uf), std::move(ff)};
}

std::pair<ScalarField, ScalarField> manufactured(const ScalarField& u, double h) {
    ScalarField f;
    f.label = "Delta_2(" + u.label + ")";
    if (u.wave_op) {
        f.eval = u.wave_op;
    } else {
        ScalarField copy = u;
        f.eval = [copy, h](HPoint p) { return wave_operator(copy, p, h); };
    }
    return {u, std::move(f)};
}

}  // namespace hypwave
