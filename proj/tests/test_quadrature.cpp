#include <cmath>

#include "doctest.h"
#include "hypwave/poisson.hpp"
#include "hypwave/quadrature.hpp"
#include "oracles.hpp"

using namespace hypwave;

namespace {

const QuadSpec kTight{1e-12, 1e-14, 48, 8};

DependenceConfig axial() { return DependenceConfig::make({1.0, 0.0}, 2.0); }

}  // namespace

TEST_CASE("integrate matches Romberg and closed forms") {
    auto f1 = [](double x) { return std::exp(-x) * std::sin(3.0 * x); };
    CHECK(integrate(f1, 0.0, 2.0, kTight) ==
          doctest::Approx(oracle::romberg(f1, 0.0, 2.0)).epsilon(1e-11));

    auto f2 = [](double x) { return x * x * x - 2.0 * x + 1.0; };
    CHECK(integrate(f2, -1.0, 3.0, kTight) == doctest::Approx(20.0 - 8.0 + 4.0).epsilon(1e-13));

    CHECK(integrate(f2, 1.3, 1.3, kTight) == 0.0);

    // Integrable log endpoint handled by deep bisection.
    auto f3 = [](double x) { return std::log(x); };
    CHECK(integrate(f3, 0.0, 1.0, QuadSpec{1e-10, 1e-12, 52, 8}) ==
          doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("integrate throws NoConvergence when the budget is too small") {
    auto spiky = [](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3141) + 1e-300); };
    CHECK_THROWS_AS(integrate(spiky, 0.0, 1.0, QuadSpec{1e-12, 1e-14, 3, 2}), NoConvergence);
}

TEST_CASE("integrate is deterministic") {
    auto f = [](double x) { return std::cos(17.0 * x) / (1.0 + x * x); };
    const double a = integrate(f, 0.0, 5.0, kTight);
    const double b = integrate(f, 0.0, 5.0, kTight);
    CHECK(a == b);
}

TEST_CASE("arc_integral") {
    const auto cfg = axial();
    const RhoAngles ang = rho_angles(cfg, 0.1);

    // Unit integrand gives the arc length 2 theta_i rho.
    const double len = arc_integral([](double) { return 1.0; }, cfg.inner(0.1),
                                    -ang.theta_i, ang.theta_i, kTight);
    CHECK(len == doctest::Approx(2.0 * ang.theta_i * 0.1).epsilon(1e-13));
    CHECK(len == doctest::Approx(0.67934760864933904).epsilon(1e-12));

    const double m = arc_integral([](double phi) { return std::cosh(phi); }, cfg.gamma(),
                                  -1.0, 1.0, kTight);
    CHECK(m == doctest::Approx(4.0 * std::sinh(1.0)).epsilon(1e-13));

    CHECK(arc_integral([](double) { return 1.0; }, cfg.gamma(), 0.4, 0.4, kTight) == 0.0);
}

TEST_CASE("normal_flux") {
    const auto cfg = axial();
    const RhoAngles ang = rho_angles(cfg, 0.1);

    // Constant field: zero gradient.
    const ScalarField c = poly_field(PolyST::constant(3.5), "const");
    CHECK(std::abs(normal_flux(c, cfg.gamma(), -1.0, 1.0, 0.0, true, kTight)) < 1e-14);

    // ln r over the inner arc, upward: integrand is 1/rho against dtau = rho dtheta.
    const ScalarField lr = log_r_field(cfg.Q);
    const double flux = normal_flux(lr, cfg.inner(0.1), -ang.theta_i, ang.theta_i, 0.0, true, kTight);
    CHECK(flux == doctest::Approx(2.0 * ang.theta_i).epsilon(1e-11));

    // u = x on gamma: du/dn = x/p, so the flux is int p cosh dphi = 2 p sinh(1).
    const ScalarField fx = poly_field(PolyST::parse("0.5*s + 0.5*t"), "x");
    const double fgam = normal_flux(fx, cfg.gamma(), -1.0, 1.0, 0.0, true, kTight);
    CHECK(fgam == doctest::Approx(2.0 * 2.0 * std::sinh(1.0)).epsilon(1e-12));

    // Downward traversal flips the sign.
    CHECK(normal_flux(fx, cfg.gamma(), -1.0, 1.0, 0.0, false, kTight) ==
          doctest::Approx(-fgam).epsilon(1e-13));
}

TEST_CASE("dual formulation: parametric form vs n,tau frame") {
    // The same line integral assembled from the Appendix frame machinery:
    // sigma equals the parametrization angle, du/dn = u_x dx/dn + u_y dy/dn
    // with (dx/dn, dy/dn) = +-(cosh sigma, sinh sigma), dtau = d * dangle.
    const auto cfg = axial();
    const RhoAngles ang = rho_angles(cfg, 0.1);
    const ScalarField fields[] = {
        poly_field(PolyST::parse("0.5*s + 0.5*t"), "x"),
        poly_field(PolyST::parse("s^2 - 0.25*t^3")),
        log_r_field({0.4, 0.1}),
    };
    struct Arc {
        Hyperbola h;
        double lo, hi;
        bool upward;
    };
    const Arc arcs[] = {
        {cfg.gamma(), -ang.phi_i, ang.phi_i, true},
        {cfg.gamma(), -0.8, 0.3, false},
        {cfg.inner(0.1), -ang.theta_i, ang.theta_i, true},
        {cfg.outer(0.1), -ang.theta_i_star, ang.theta_i_star, false},
    };
    for (const auto& u : fields) {
        for (const auto& arc : arcs) {
            const double parametric =
                normal_flux(u, arc.h, arc.lo, arc.hi, cfg.alpha, arc.upward, kTight);
            auto frame_integrand = [&](double a) {
                const HPoint P = point_at(arc.h, a, cfg.alpha);
                const Gradient g = u.gradient(P);
                // The n direction is +-(cosh sigma, sinh sigma) with the sign
                // set by the tau orientation alone; the arc-length measure is
                // direction-free.
                const double sign = arc.upward ? 1.0 : -1.0;
                const double sigma = a + cfg.alpha;
                return sign * (g.ux * std::cosh(sigma) + g.uy * std::sinh(sigma));
            };
            const double via_frame =
                arc.h.semidiameter * integrate(frame_integrand, arc.lo, arc.hi, kTight);
            CHECK(std::abs(parametric - via_frame) <= 1e-10 * (1.0 + std::abs(parametric)));
        }
    }
}

TEST_CASE("closed_flux_check") {
    const auto cfg = axial();
    const ScalarField lr = log_r_field(cfg.Q);
    CHECK(std::abs(closed_flux_check(lr, cfg, 0.1, kTight)) < 1e-8);

    // gamma side in closed form: phi_i + 2 artanh(((p+q)/(p-q)) tanh(phi_i/2))
    // equals 2 theta_i exactly.
    const RhoAngles ang = rho_angles(cfg, 0.1);
    const double gamma_side = ang.phi_i + kernel_integral_closed_form(2.0, 1.0, ang.phi_i);
    CHECK(gamma_side == doctest::Approx(2.0 * ang.theta_i).epsilon(1e-13));

    const ScalarField c = poly_field(PolyST::constant(2.0), "const");
    CHECK(closed_flux_check(c, cfg, 0.1, kTight) == 0.0);

    const ScalarField dal = dalembert(PolyST::profile_s({0, 0, 1}), PolyST::profile_t({0, 0, 0, 1}));
    CHECK(std::abs(closed_flux_check(dal, cfg, 0.1, kTight)) < 1e-8);
}

TEST_CASE("green_identity_residual") {
    const auto cfg = axial();
    // Two wave solutions: both sides vanish independently.
    const ScalarField u = dalembert(PolyST::profile_s({0, 1, 1}), PolyST::profile_t({0, -2, 0, 1}));
    const ScalarField v = log_r_field({0.2, 0.05});
    CHECK(green_identity_residual(u, v, cfg, 0.1, QuadSpec{1e-10, 1e-12, 48, 8}) < 1e-7);

    // u = v: antisymmetry makes the residual exactly zero.
    CHECK(green_identity_residual(u, u, cfg, 0.1, kTight) == 0.0);

    // v = 1 against a manufactured source: boundary flux equals iint f.
    auto [us, fs] = manufactured(PolyST::parse("s*t"));
    const ScalarField one = poly_field(PolyST::constant(1.0), "1");
    const double lens_area =
        region_integral([](HPoint) { return 1.0; }, {Region::Kind::D, cfg, 0.1}, kTight);
    const double resid = green_identity_residual(us, one, cfg, 0.1, kTight);
    CHECK(resid < 1e-8 * (1.0 + 4.0 * lens_area));
}

TEST_CASE("Gauss base identity on the lens") {
    // iint (X_x + Y_y) dx dy = oint (X dy - Y dx) for random polynomial X, Y.
    const auto cfg = axial();
    const double rho = 0.1;
    const RhoAngles ang = rho_angles(cfg, rho);
    for (int trial = 0; trial < 5; ++trial) {
        PolyST Xp, Yp;
        for (int j = 0; j <= 2; ++j) {
            for (int k = 0; k <= 2; ++k) {
                Xp += PolyST::monomial(j, k, oracle::uniform(-1, 1));
                Yp += PolyST::monomial(j, k, oracle::uniform(-1, 1));
            }
        }
        const ScalarField X = poly_field(Xp), Y = poly_field(Yp);
        auto divergence = [&](HPoint P) {
            return X.gradient(P).ux + Y.gradient(P).uy;
        };
        const double area = region_integral(divergence, {Region::Kind::D, cfg, rho}, kTight);

        auto edge = [&](const Hyperbola& h, double lo, double hi) {
            auto f = [&](double a) {
                const HPoint P = point_at(h, a, cfg.alpha);
                const double s = (h.orientation == Hyperbola::Orientation::OpeningRight) ? 1.0 : -1.0;
                const double dx = s * h.semidiameter * std::sinh(a + cfg.alpha);
                const double dy = s * h.semidiameter * std::cosh(a + cfg.alpha);
                return X.eval(P) * dy - Y.eval(P) * dx;
            };
            return integrate(f, lo, hi, kTight);
        };
        const double boundary = edge(cfg.gamma(), -ang.phi_i, ang.phi_i) -
                                edge(cfg.inner(rho), -ang.theta_i, ang.theta_i);
        CHECK(std::abs(area - boundary) <= 1e-7 * (1.0 + std::abs(area)));
    }
}

TEST_CASE("region_integral") {
    const auto cfg = DependenceConfig::make({1.25, 0.75}, 2.0);

    // Characteristic rectangle: area (p^2/t_Q - s_Q)(p^2/s_Q - t_Q)/2 = 4.5.
    const double area =
        region_integral([](HPoint) { return 1.0; }, {Region::Kind::Dunion, cfg, 0.0}, kTight);
    CHECK(area == doctest::Approx(4.5).epsilon(1e-12));

    const double f4 =
        region_integral([](HPoint) { return 4.0; }, {Region::Kind::Dunion, cfg, 0.0}, kTight);
    CHECK(f4 == doctest::Approx(18.0).epsilon(1e-12));

    // D + D* at rho = 0 recovers the rectangle split along gamma.
    const double dpart =
        region_integral([](HPoint) { return 1.0; }, {Region::Kind::D, cfg, 0.0}, kTight);
    const double dspart =
        region_integral([](HPoint) { return 1.0; }, {Region::Kind::Dstar, cfg, 0.0}, kTight);
    CHECK(dpart + dspart == doctest::Approx(4.5).epsilon(1e-10));
    CHECK(dpart == doctest::Approx(0.5 * (4.0 * std::log(4.0) - 3.0)).epsilon(1e-10));

    // ln r on D stays integrable down to small rho.
    const ScalarField lr = log_r_field(cfg.Q);
    const double weighted = region_integral(lr.eval, {Region::Kind::D, cfg, 1e-3},
                                            QuadSpec{1e-8, 1e-10, 48, 8});
    CHECK(std::isfinite(weighted));
    CHECK(weighted == doctest::Approx(-0.980590).epsilon(1e-4));

    // Lens measure is positive and shrinks as rho grows.
    double prev = region_integral([](HPoint) { return 1.0; }, {Region::Kind::D, cfg, 1e-3}, kTight);
    for (const double rho : {0.05, 0.2, 0.5, 0.9}) {
        const double cur =
            region_integral([](HPoint) { return 1.0; }, {Region::Kind::D, cfg, rho}, kTight);
        CHECK(cur > 0.0);
        CHECK(cur < prev);
        prev = cur;
    }

    CHECK_THROWS_AS(region_integral([](HPoint) { return 1.0; }, {Region::Kind::D, cfg, 1.5},
                                    kTight),
                    RhoTooLarge);
}
