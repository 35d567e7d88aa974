#pragma once

#include "nsplab/thermo.hpp"

#include <array>
#include <span>
#include <vector>

namespace nsplab::rarefaction {

// Smooth approximate 1-rarefaction built from the exact Burgers solution
// with tanh initial data. The field is frame-agnostic: callers evaluating in
// the shock's moving frame compose x = xi + sigma*t themselves.
struct RarefactionField {
    thermo::RiemannFan fan;
    double w_minus; // lambda1(v_minus)
    double w_mid;   // lambda1(v_mid)
    double tol = 1e-13;

    explicit RarefactionField(const thermo::RiemannFan& f)
        : fan(f),
          w_minus(thermo::lambda1(f.v_minus)),
          w_mid(thermo::lambda1(f.v_mid)) {}
};

// Exact solution of w_t + w w_x = 0 with
// w(0,x) = (w_mid + w_minus)/2 + (w_mid - w_minus)/2 * tanh(x),
// by safeguarded Newton inversion of the characteristic map.
double burgers_eval(double w_minus, double w_mid, double t, double x,
                    double tol = 1e-13);

struct Point {
    double v, u, phi;
};

// (vbar^R, ubar^R, phibar^R)(t, x); internally uses w(1 + t, x).
Point eval(const RarefactionField& field, double t, double x);

struct Sample {
    double v, u, phi;
    double vx, ux;
};

// Values and first derivatives at many positions with a single warm-started
// characteristic inversion per point; fastest when xs is sorted ascending.
std::vector<Sample> sample_many(const RarefactionField& field, double t,
                                std::span<const double> xs);

struct Derivatives {
    // dx^k of (v, u) for k = 1..3; entries beyond the requested order are 0
    std::array<double, 3> vx{};
    std::array<double, 3> ux{};
};

// Orders 1-2 by analytic chain rule through the characteristic map,
// order 3 by centered finite differences of the order-2 output.
Derivatives derivatives(const RarefactionField& field, double t, double x,
                        int order);

struct DecayReport {
    double p = 2.0;
    std::vector<double> times;
    std::vector<double> norm_first;    // ||dx (v,u)||_{L^p} (max over v,u)
    std::vector<double> norm_second;
    double fitted_exponent_first = 0.0;   // slope of log norm vs log(1+t)
    double fitted_exponent_second = 0.0;
    double fitted_constant_first = 0.0;
    double tv_min = 0.0, tv_max = 0.0;    // L1 norm of vx across times
    double tail_constant = 0.0;           // sup of |v - v_mid| e^{2|x-edge|} on the right tail
};

// Discrete L^p norms of first and second x-derivatives on an adaptive
// window, with large-time rate fits against (1+t)^{-1+1/p} (first
// derivatives) and (1+t)^{-1} (second derivatives).
DecayReport verify_decay(const RarefactionField& field,
                         const std::vector<double>& times, double p);

} // namespace nsplab::rarefaction
