#include "nsplab/thermo.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace nsplab::thermo {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;

void require_positive(double v, const char* who) {
    if (!(v > 0.0))
        throw std::domain_error(std::string(who) + ": specific volume must be positive");
}
} // namespace

double pressure(double v) {
    require_positive(v, "pressure");
    return 1.0 / v;
}

double modified_pressure(double v) {
    require_positive(v, "modified_pressure");
    return 2.0 / v;
}

double modified_pressure_d(double v) {
    require_positive(v, "modified_pressure_d");
    return -2.0 / (v * v);
}

double modified_pressure_dd(double v) {
    require_positive(v, "modified_pressure_dd");
    return 4.0 / (v * v * v);
}

Eigenvalues eigenvalues(double v) {
    require_positive(v, "eigenvalues");
    const double c = kSqrt2 / v;
    return {-c, c};
}

double lambda1(double v) { return eigenvalues(v).lambda1; }
double lambda2(double v) { return eigenvalues(v).lambda2; }

double r1_velocity(double v_minus, double u_minus, double v) {
    require_positive(v_minus, "r1_velocity");
    require_positive(v, "r1_velocity");
    if (v < v_minus)
        throw std::domain_error("r1_velocity: R1 is defined for v >= v_minus");
    return u_minus + kSqrt2 * std::log(v / v_minus);
}

double s2_velocity(double v_left, double u_left, double v) {
    require_positive(v_left, "s2_velocity");
    require_positive(v, "s2_velocity");
    if (v < v_left)
        throw std::domain_error("s2_velocity: S2 is defined for v >= v_left");
    const double jump = (v - v_left) * (modified_pressure(v_left) - modified_pressure(v));
    return u_left - std::sqrt(std::max(jump, 0.0));
}

double shock_speed(double v_mid, double u_mid, double v_plus, double u_plus,
                   double tol) {
    require_positive(v_mid, "shock_speed");
    require_positive(v_plus, "shock_speed");
    if (v_plus == v_mid) {
        // zero-amplitude shock: Lax limit
        return lambda2(v_mid);
    }
    const double sigma = -(u_plus - u_mid) / (v_plus - v_mid);
    const double rh2 = -sigma * (u_plus - u_mid) +
                       (modified_pressure(v_plus) - modified_pressure(v_mid));
    if (std::abs(rh2) > tol)
        throw std::invalid_argument("shock_speed: (v_plus, u_plus) is not on S2(v_mid, u_mid); "
                                    "second Rankine-Hugoniot residual " + std::to_string(rh2));
    if (!(lambda2(v_plus) < sigma && sigma < lambda2(v_mid)))
        throw std::invalid_argument("shock_speed: Lax condition lambda2(v_plus) < sigma < lambda2(v_mid) violated");
    return sigma;
}

GammaMembership gamma_membership(double v_minus, double u_minus,
                                 double v_plus, double u_plus, double delta0) {
    require_positive(v_minus, "gamma_membership");
    require_positive(v_plus, "gamma_membership");
    GammaMembership out;
    const double dv = v_plus - v_minus;
    if (!(dv > 0.0)) {
        out.reason = "amplitude bound: v_plus - v_minus must be positive";
        return out;
    }
    if (!(dv < delta0)) {
        out.reason = "amplitude bound: v_plus - v_minus >= delta0";
        return out;
    }
    const double du = u_plus - u_minus;
    const double s2_bound =
        -std::sqrt(dv * (modified_pressure(v_minus) - modified_pressure(v_plus)));
    const double r1_bound = kSqrt2 * std::log(v_plus / v_minus);
    // boundary data (pure shock / pure rarefaction) is admissible; allow
    // round-off slack so exactly-on-curve inputs are not rejected
    const double slack = 1e-12 * (1.0 + std::abs(s2_bound) + std::abs(r1_bound));
    if (!(du > s2_bound - slack)) {
        out.reason = "below S2 bound: u_plus - u_minus <= -sqrt((dv)(ptilde(v_-) - ptilde(v_+)))";
        return out;
    }
    if (!(du < r1_bound + slack)) {
        out.reason = "above R1 bound: u_plus - u_minus >= sqrt(2) ln(v_plus/v_minus)";
        return out;
    }
    out.member = true;
    return out;
}

namespace {
// u_plus reproduced by chaining R1 (v_minus -> vm) and S2 (vm -> v_plus).
double chained_velocity(double v_minus, double u_minus, double v_plus, double vm) {
    const double um = r1_velocity(v_minus, u_minus, vm);
    return s2_velocity(vm, um, v_plus);
}
} // namespace

RiemannFan solve_riemann(double v_minus, double u_minus,
                         double v_plus, double u_plus, double tol) {
    require_positive(v_minus, "solve_riemann");
    require_positive(v_plus, "solve_riemann");
    if (v_plus < v_minus)
        throw std::invalid_argument("solve_riemann: amplitude bound failed, v_plus < v_minus (outside Gamma)");

    const double btol = 1e-11 * (1.0 + std::abs(u_plus));
    const double u_shock = chained_velocity(v_minus, u_minus, v_plus, v_minus);
    const double u_rare = chained_velocity(v_minus, u_minus, v_plus, v_plus);

    RiemannFan fan{};
    fan.v_minus = v_minus; fan.u_minus = u_minus;
    fan.v_plus = v_plus;   fan.u_plus = u_plus;

    double vm;
    if (v_plus == v_minus || std::abs(u_plus - u_rare) <= btol) {
        vm = v_plus; // pure rarefaction boundary
    } else if (std::abs(u_plus - u_shock) <= btol) {
        vm = v_minus; // pure shock boundary
    } else {
        if (u_plus < u_shock)
            throw std::invalid_argument("solve_riemann: below S2 bound "
                                        "(u_plus - u_minus <= -sqrt((dv)(ptilde(v_-) - ptilde(v_+))); outside Gamma)");
        if (u_plus > u_rare)
            throw std::invalid_argument("solve_riemann: above R1 bound "
                                        "(u_plus - u_minus >= sqrt(2) ln(v_plus/v_minus); outside Gamma)");
        // chained velocity is monotone increasing in vm: bisection, then Newton
        double lo = v_minus, hi = v_plus;
        while (hi - lo > 1e-6) {
            const double mid = 0.5 * (lo + hi);
            if (chained_velocity(v_minus, u_minus, v_plus, mid) < u_plus) lo = mid;
            else hi = mid;
        }
        vm = 0.5 * (lo + hi);
        for (int it = 0; it < 60; ++it) {
            const double f = chained_velocity(v_minus, u_minus, v_plus, vm) - u_plus;
            if (std::abs(f) < tol) break;
            const double A = v_plus - vm;
            const double B = modified_pressure(vm) - modified_pressure(v_plus);
            const double AB = A * B;
            double df = kSqrt2 / vm;
            if (AB > 0.0)
                df -= (-B + A * modified_pressure_d(vm)) / (2.0 * std::sqrt(AB));
            double next = vm - f / df;
            if (!std::isfinite(next) || next <= lo || next >= hi)
                next = (f > 0.0) ? 0.5 * (lo + vm) : 0.5 * (vm + hi);
            if (f > 0.0) hi = vm; else lo = vm;
            vm = next;
        }
    }

    fan.v_mid = vm;
    fan.u_mid = r1_velocity(v_minus, u_minus, vm);
    fan.delta_R = vm - v_minus;
    fan.delta_S = v_plus - vm;
    fan.degenerate_rarefaction = (fan.delta_R == 0.0);
    fan.degenerate_shock = (fan.delta_S <= 0.0 || fan.delta_S < 1e-14 * v_plus);
    if (fan.degenerate_shock) {
        fan.v_mid = v_plus;
        fan.u_mid = r1_velocity(v_minus, u_minus, v_plus);
        fan.delta_S = 0.0;
        fan.delta_R = fan.v_mid - v_minus;
        fan.sigma = lambda2(fan.v_mid);
    } else {
        fan.sigma = shock_speed(fan.v_mid, fan.u_mid, v_plus, u_plus, 1e-6);
    }
    fan.phi_minus = -std::log(v_minus);
    fan.phi_mid = -std::log(fan.v_mid);
    fan.phi_plus = -std::log(v_plus);
    return fan;
}

} // namespace nsplab::thermo
