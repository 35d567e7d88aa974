#pragma once

#include <string>

namespace nsplab::thermo {

// Isothermal pressure and the modified pressure of the quasi-neutral limit,
// with K = nu = lambda = 1. p(v) = 1/v, ptilde(v) = p(v) + 1/v = 2/v.
double pressure(double v);
double modified_pressure(double v);
double modified_pressure_d(double v);   // d/dv ptilde = -2/v^2
double modified_pressure_dd(double v);  // d^2/dv^2 ptilde = 4/v^3

struct Eigenvalues {
    double lambda1; // -sqrt(2)/v
    double lambda2; // +sqrt(2)/v
};
Eigenvalues eigenvalues(double v);
double lambda1(double v);
double lambda2(double v);

// Velocity along the 1-rarefaction curve through (v_minus, u_minus),
// u = u_minus + sqrt(2) ln(v / v_minus), defined for v >= v_minus.
double r1_velocity(double v_minus, double u_minus, double v);

// Velocity along the 2-shock curve through (v_left, u_left),
// u = u_left - sqrt((v - v_left)(ptilde(v_left) - ptilde(v))), v >= v_left.
double s2_velocity(double v_left, double u_left, double v);

// Shock speed from the Rankine-Hugoniot relations. Validates the second
// RH relation and the Lax condition; throws if (v_plus, u_plus) is not on
// S2(v_mid, u_mid) to `tol`.
double shock_speed(double v_mid, double u_mid, double v_plus, double u_plus,
                   double tol = 1e-9);

struct RiemannFan {
    double v_minus, u_minus;
    double v_mid, u_mid;
    double v_plus, u_plus;
    double sigma;              // 2-shock speed (Lax limit lambda2(v_mid) if delta_S = 0)
    double delta_R, delta_S;   // wave amplitudes |v_mid - v_minus|, |v_plus - v_mid|
    double phi_minus, phi_mid, phi_plus; // -ln v at each state
    bool degenerate_rarefaction = false; // delta_R == 0 (pure shock data)
    bool degenerate_shock = false;       // delta_S == 0 (pure rarefaction data)
};

struct GammaMembership {
    bool member = false;
    std::string reason; // empty when member, otherwise the failed inequality
};

// Membership test for Gamma_{delta0}(v_minus, u_minus):
//   v_plus - v_minus in (0, delta0)  and
//   -sqrt((dv)(ptilde(v_-) - ptilde(v_+))) < u_+ - u_- < sqrt(2) ln(v_+/v_-).
// Boundary values (pure shock / pure rarefaction data) are accepted.
GammaMembership gamma_membership(double v_minus, double u_minus,
                                 double v_plus, double u_plus, double delta0);

// Riemann solver for the 1-rarefaction + 2-shock configuration. Finds the
// unique v_mid in [v_minus, v_plus] so that chaining R1 and S2 reproduces
// u_plus. Bisection to 1e-6 followed by Newton polish to `tol`.
RiemannFan solve_riemann(double v_minus, double u_minus,
                         double v_plus, double u_plus, double tol = 1e-12);

} // namespace nsplab::thermo
