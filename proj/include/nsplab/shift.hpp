#pragma once

#include "nsplab/composite.hpp"

#include <span>

namespace nsplab::shift {

// Method constant M = 5 sqrt(2) c0 / (8 v_m^2). The equivalent form
// 5 c0 sigma_m^4 alpha_m / 8 with sigma_m = sqrt(-ptilde'(v_m)) and
// alpha_m = 1/(sigma_m ptilde(v_m)) is asserted equal in the unit tests.
double method_constant(double c0, double v_mid);
double method_constant_alt(double c0, double v_mid);

struct ShiftState {
    double X = 0.0;
    double c0 = 1.0;
    double delta_S = 0.0;
    double M = 0.0;
    bool enabled = false; // delta_S > 0

    ShiftState() = default;
    ShiftState(double c0_, const thermo::RiemannFan& fan)
        : c0(c0_), delta_S(fan.delta_S),
          M(method_constant(c0_, fan.v_mid)),
          enabled(fan.delta_S > 0.0) {}
};

// Weight a = 1 + (ptilde(v_m) - ptilde(vS(xi - X))) / sqrt(delta_S),
// taking the already-shifted coordinate. Returns 1 when delta_S = 0.
double weight(const shock_profile::ShockProfile& profile, double delta_S,
              double xi_shifted);

// Shift ODE right-hand side: trapezoid quadrature on the simulation grid of
//   -(M/delta_S) [ int a hS'(xi-X) (ptilde(v)-ptilde(vbar))/sigma dxi
//                  - int a d/dxi ptilde(vS(xi-X)) (v - vbar) dxi ].
// Zero when the shift is disabled.
double shift_rhs(std::span<const double> xi, double dxi,
                 std::span<const double> v,
                 const composite::CompositeWave& wave, double t,
                 const ShiftState& state);

} // namespace nsplab::shift
