#pragma once

#include "nsplab/rarefaction.hpp"
#include "nsplab/shock_profile.hpp"
#include "nsplab/thermo.hpp"

#include <span>
#include <vector>

namespace nsplab::composite {

// Superposition of the approximate rarefaction, the shifted shock profile
// and minus the shared mid state, evaluated in the moving frame xi = x - sigma t:
//   (vbar, ubar, phibar)(t, xi) =
//       (vR, uR, phiR)(t, xi + sigma t) + (vS, uS, phiS)(xi - X) - (v_m, u_m, phi_m).
struct Point {
    double v, u, phi, h;     // composite values (h = uR + hS - u_m)
    double vx, ux, phix, hx; // xi-derivatives from component analytic derivatives
    // component values used by weights and diagnostics
    double vR, uR, vRx, uRx;
    double vS, uS, phiS, hS;
    double vSx, uSx, phiSx, hSx, vSxx;
};

struct CompositeWave {
    thermo::RiemannFan fan;
    rarefaction::RarefactionField rare;
    shock_profile::ShockProfile prof;

    CompositeWave(const thermo::RiemannFan& f,
                  const shock_profile::ShockProfile& p)
        : fan(f), rare(f), prof(p) {}

    Point eval(double t, double X, double xi) const;

    // Batched evaluation with a warm-started rarefaction sweep; xi should be
    // sorted ascending (the simulation grid is).
    std::vector<Point> eval_many(double t, double X,
                                 std::span<const double> xi) const;
};

} // namespace nsplab::composite
