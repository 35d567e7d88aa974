#pragma once

#include "nsplab/thermo.hpp"

#include <array>
#include <vector>

namespace nsplab::shock_profile {

// Right-hand side of the reduced traveling-wave system in the variables
// (v, q, phi, z) with q = (ln v)' and z = phi'/v:
//   v'   = v q
//   q'   = -(sigma^2 v q - q/v + z) / sigma
//   phi' = v z
//   z'   = v e^phi - 1
// Algebraically equivalent to the original second-order traveling-wave
// system with K = nu = lambda = 1 (unit-tested against a direct
// finite-difference discretization of it).
std::array<double, 4> profile_rhs(const std::array<double, 4>& state, double sigma);

// Eigenvalues of the traveling-wave linearization about the constant state
// (v0, 0, -ln v0, 0): mu = 0 plus the three roots of
//   (mu - b)(mu^2 - v0) = -1/sigma,  b = (1/v0 - sigma^2 v0)/sigma.
std::vector<double> fixed_point_eigenvalues(double v0, double sigma);

// Slow unstable rate at the left state v_mid (smallest positive eigenvalue);
// sets the tail decay and the domain half-length.
double unstable_rate(const thermo::RiemannFan& fan);

struct ShockProfile {
    thermo::RiemannFan fan;
    double sigma = 0.0;
    double delta_S = 0.0;
    bool constant = false; // delta_S == 0: the profile is the constant mid state

    double L = 0.0;    // grid spans [-L, L]
    double dxi = 0.0;
    std::vector<double> xi;
    std::vector<double> v, u, phi, h;
    std::vector<double> vp, up, phip, hp; // first xi-derivatives
    std::vector<double> vpp, phipp;       // second xi-derivatives

    struct Point {
        double v, u, phi, h;
        double vp, up, phip, hp;
        double vpp, phipp;
    };

    // C1 cubic Hermite interpolation inside [-L, L]; constant far-field
    // extension with zero derivatives outside.
    Point eval(double xi) const;
};

// Heteroclinic profile from (v_mid, u_mid, phi_mid) to (v_plus, u_plus,
// phi_plus), anchored by v(0) = (v_mid + v_plus)/2, computed by a damped
// Newton iteration on the collocated boundary-value problem
//   sigma v'/v = -sigma^2 (v - v_mid) - 1/v + 2/v_mid + (phi'/v)^2/2 - e^phi
//   -(phi'/v)' = 1 - v e^phi
// (the first equation is the once-integrated momentum equation in
// divergence form). L <= 0 selects the default max(40/rate, 200).
ShockProfile solve_profile(const thermo::RiemannFan& fan, double L = 0.0,
                           double tol = 1e-11);

// Max-norm residual of the unreduced traveling-wave system (mass, momentum
// with the electric term, Poisson) evaluated on the profile's stored fields
// with 4th-order centered differences, away from the one-sided end stencils.
double residual_unreduced(const ShockProfile& profile);

struct TailReport {
    double rate_left = 0.0, rate_right = 0.0;     // fitted decay exponents
    double r2_left = 0.0, r2_right = 0.0;
    double rate_left_deriv = 0.0, rate_right_deriv = 0.0;
    double r2_left_deriv = 0.0, r2_right_deriv = 0.0;
    double max_vp = 0.0;
    bool decay_ok = false;   // both R^2 > 0.99 and the two rates agree within 4x
};

// Log-linear fits of |v - v_end| and |v'| on each tail, restricted to the
// magnitude window where the tail is resolved above round-off.
TailReport verify_tail(const ShockProfile& profile);

} // namespace nsplab::shock_profile
