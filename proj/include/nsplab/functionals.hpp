#pragma once

#include "nsplab/composite.hpp"

#include <span>
#include <vector>

namespace nsplab::functionals {

// h = u - (ln v)_xi = u - v_xi / v, centered differences.
std::vector<double> effective_velocity(double dxi, std::span<const double> v,
                                       std::span<const double> u);

// Relative form of Q(v) = -2 ln v:
//   Q(v|vbar) = -2 ln(v/vbar) + (2/vbar)(v - vbar) >= 0.
double relative_Q(double v, double vbar);

// ptilde(v|vbar) = ptilde(v) - ptilde(vbar) - ptilde'(vbar)(v - vbar) >= 0.
double relative_pressure(double v, double vbar);

// Pointwise modulated relative functional
//   eta = |h - hbar|^2/2 + Q(v|vbar) - (v - vbar) phit_xixi / vbar^2
//         + e^{-phibar} phit_xixi^2 / (2 vbar^3)
//         + e^{-phibar} phit_xi^2 / (2 vbar^2).
double eta_pointwise(double h, double hbar, double v, double vbar,
                     double phibar, double phit_xi, double phit_xixi);

struct GoodTerms {
    double G1 = 0.0, G2 = 0.0, G3 = 0.0, GS = 0.0, GR = 0.0, D = 0.0;
    bool g1_flagged = false; // delta_S = 0: G1 reported as 0
};

struct NormSet {
    double Linf_v = 0, Linf_u = 0, Linf_phi = 0;
    double L2_v = 0, L2_u = 0, L2_phi = 0;
    double H1_v = 0, H1_u = 0;
    double H2_v = 0, H2_u = 0;
    double H3_phi = 0;
};

struct EnergyReport {
    double t = 0, X = 0, Xdot = 0;
    NormSet norms;
    double eta_weighted = 0; // int a^X eta dxi
    GoodTerms good;
    double mass_balance_residual = 0;
};

// Perturbation fields and diagnostics for a state (v, u, phi) against the
// composite wave sampled at the same grid. `bar` holds wave.eval at each node.
class Perturbation {
public:
    Perturbation(double dxi, std::span<const double> v, std::span<const double> u,
                 std::span<const double> phi,
                 const std::vector<composite::Point>& bar);

    NormSet norms() const;
    GoodTerms good_terms(double delta_S, double sigma) const;
    double eta_weighted(std::span<const double> weight) const;

    const std::vector<double>& v_tilde() const { return vt_; }
    const std::vector<double>& h_tilde() const { return ht_; }
    const std::vector<double>& phi_tilde() const { return phit_; }
    const std::vector<double>& phi_tilde_xi() const { return phit_x_; }
    const std::vector<double>& phi_tilde_xixi() const { return phit_xx_; }

private:
    double dxi_;
    std::vector<double> vt_, ut_, phit_, ht_;
    std::vector<double> phit_x_, phit_xx_, phit_xxx_;
    std::vector<double> dp_; // ptilde(v) - ptilde(vbar)
    const std::vector<composite::Point>* bar_;
};

// Max of the two discrete Poisson residuals: the (v, phi) equation and the
// shock-component equation on the profile's own grid.
double elliptic_residual(double dxi, std::span<const double> v,
                         std::span<const double> phi,
                         const shock_profile::ShockProfile& profile);

} // namespace nsplab::functionals
