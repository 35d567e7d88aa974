#pragma once

#include <vector>

namespace nsplab::poisson {

// Nonlinear Poisson problem -(phi_xi / v)_xi = 1 - v e^phi + source on a
// uniform grid with Dirichlet boundary values. The optional source term is
// used by manufactured-solution studies and is zero in production.
struct Problem {
    double dxi = 0.0;
    std::vector<double> v;
    double phi_left = 0.0, phi_right = 0.0;
    std::vector<double> source; // empty means zero
    double newton_tol = 1e-12;
    int max_iter = 50;
};

struct Result {
    std::vector<double> phi;
    int iterations = 0;
    double residual = 0.0;       // final max-norm residual
    bool damping_monotone = true; // residual decreased at every accepted step
};

// Damped Newton with the exact tridiagonal Jacobian. Face values of 1/v are
// arithmetic means, so the Jacobian is symmetric positive definite for v > 0.
// Throws on stagnation or iteration cap.
Result solve_phi(const Problem& problem, const std::vector<double>& initial_guess);

// Max-norm of the discrete residual of -(phi_xi/v)_xi - 1 + v e^phi - source
// at interior nodes.
double residual_max(const Problem& problem, const std::vector<double>& phi);

// Electric force Phi = (phi_xi/v)^2 / 2 - (1/v)(phi_xi/v)_xi and its
// xi-derivative, centered differences with one-sided second-order stencils
// at the boundaries.
struct ElectricForce {
    std::vector<double> Phi;
    std::vector<double> Phi_xi;
};
ElectricForce electric_force(double dxi, const std::vector<double>& v,
                             const std::vector<double>& phi);

} // namespace nsplab::poisson
