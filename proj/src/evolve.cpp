#include "nsplab/evolve.hpp"

#include "nsplab/numerics.hpp"
#include "nsplab/poisson.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nsplab::evolve {

namespace {

double gaussian_bump(double xi, double A, double xi0, double w) {
    if (A == 0.0) return 0.0;
    const double b = A * std::exp(-numerics::sqr(xi - xi0) / (2.0 * w * w));
    return std::abs(b) < 1e-14 ? 0.0 : b;
}

} // namespace

Simulator::Simulator(const Params& params,
                     const shock_profile::ShockProfile& profile)
    : params_(params), wave_(params.fan, profile) {
    if (!(params_.L_dom > 0.0) || !(params_.dxi > 0.0))
        throw std::invalid_argument("Simulator: L_dom and dxi must be positive");
    const auto n_half = static_cast<std::size_t>(std::llround(params_.L_dom / params_.dxi));
    const std::size_t n = 2 * n_half + 1;
    state_.xi.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        state_.xi[i] = (static_cast<double>(i) - static_cast<double>(n_half)) * params_.dxi;
    state_.shift = shift::ShiftState(params_.c0, params_.fan);
    state_.shift.enabled = state_.shift.enabled && params_.shift_enabled;
    fv1_.resize(n); fu1_.resize(n); fv2_.resize(n); fu2_.resize(n);
    v1_.resize(n); u1_.resize(n); phi1_.resize(n);
}

void Simulator::initialize() {
    const std::size_t n = state_.xi.size();
    state_.t = 0.0;
    state_.shift.X = 0.0;
    state_.v.resize(n); state_.u.resize(n); state_.phi.resize(n);
    const auto bar0 = wave_.eval_many(0.0, 0.0, state_.xi);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& w = bar0[i];
        state_.v[i] = w.v + gaussian_bump(state_.xi[i], params_.A_v, params_.xi0_v, params_.w_v);
        state_.u[i] = w.u + gaussian_bump(state_.xi[i], params_.A_u, params_.xi0_u, params_.w_u);
        state_.phi[i] = w.phi; // Poisson initial guess
    }
    for (const double v : state_.v)
        if (!(v > 0.0))
            throw std::invalid_argument("initialize: perturbation drives v non-positive");
    solve_potential(0.0, 0.0, state_.v, state_.phi);

    const auto sl = wave_.prof.eval(-params_.L_dom);
    const auto sr = wave_.prof.eval(params_.L_dom);
    profile_jump_dom_ = sr.v - sl.v;
    std::vector<double> vt(n);
    for (std::size_t i = 0; i < n; ++i) vt[i] = state_.v[i] - bar0[i].v;
    mass_initial_ = numerics::trapezoid(vt, params_.dxi);
    flux_integral_ = 0.0;
}

double Simulator::boundary_flux(double t, double X, const std::vector<double>& v,
                                const std::vector<double>& u) const {
    const double sigma = params_.fan.sigma;
    const auto wl = wave_.eval(t, X, state_.xi.front());
    const auto wr = wave_.eval(t, X, state_.xi.back());
    const double Fr = sigma * (v.back() - wr.v) + (u.back() - wr.u);
    const double Fl = sigma * (v.front() - wl.v) + (u.front() - wl.u);
    return Fr - Fl;
}

void Simulator::pin_boundaries(double t, double X, std::vector<double>& v,
                               std::vector<double>& u) const {
    // Right end: under the Lax condition both characteristic families enter
    // the domain there, so both fields take the composite values.
    const auto wr = wave_.eval(t, X, state_.xi.back());
    v.back() = wr.v; u.back() = wr.u;

    // Left end: the 1-family leaves the domain and the 2-family enters.
    // Pinning both fields reflects outgoing perturbations, so instead the
    // incoming characteristic variable u - c v takes its composite value and
    // the outgoing one u + c v is extrapolated from the interior.
    const auto w0 = wave_.eval(t, X, state_.xi[0]);
    const auto w1 = wave_.eval(t, X, state_.xi[1]);
    const auto w2 = wave_.eval(t, X, state_.xi[2]);
    const double c = thermo::lambda2(w0.v);
    const double s1 = (u[1] - w1.u) + c * (v[1] - w1.v);
    const double s2 = (u[2] - w2.u) + c * (v[2] - w2.v);
    const double s_out = 2.0 * s1 - s2;
    v[0] = w0.v + 0.5 * s_out / c;
    u[0] = w0.u + 0.5 * s_out;
}

void Simulator::solve_potential(double t, double X, const std::vector<double>& v,
                                std::vector<double>& phi) const {
    poisson::Problem prob;
    prob.dxi = params_.dxi;
    prob.v = v;
    prob.phi_left = wave_.eval(t, X, state_.xi.front()).phi;
    prob.phi_right = wave_.eval(t, X, state_.xi.back()).phi;
    phi = poisson::solve_phi(prob, phi).phi;
}

void Simulator::check_fields(const std::vector<double>& v) const {
    for (const double x : v)
        if (!std::isfinite(x) || x <= 0.0)
            throw std::runtime_error("step: v non-positive or non-finite at t = " +
                                     std::to_string(state_.t));
}

void Simulator::rhs(double t, double X, const std::vector<double>& v,
                    const std::vector<double>& u, std::vector<double>& phi,
                    std::vector<double>& fv, std::vector<double>& fu,
                    double& Xdot) {
    const std::size_t n = v.size();
    const double h = params_.dxi;
    const double sigma = params_.fan.sigma;

    std::vector<double> Phi_xi;
    if (params_.include_electric) {
        solve_potential(t, X, v, phi);
        Phi_xi = poisson::electric_force(h, v, phi).Phi_xi;
    }

    // interior nodes only; endpoints are Dirichlet-pinned by the caller
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double vx = (v[i + 1] - v[i - 1]) / (2.0 * h);
        const double ux = (u[i + 1] - u[i - 1]) / (2.0 * h);
        fv[i] = sigma * vx + ux;
        double a = sigma * ux;
        if (params_.include_pressure) {
            a -= (thermo::modified_pressure(v[i + 1]) -
                  thermo::modified_pressure(v[i - 1])) / (2.0 * h);
        }
        if (params_.include_viscosity) {
            const double mr = 0.5 * (1.0 / v[i] + 1.0 / v[i + 1]);
            const double ml = 0.5 * (1.0 / v[i] + 1.0 / v[i - 1]);
            a += (mr * (u[i + 1] - u[i]) - ml * (u[i] - u[i - 1])) / (h * h);
        }
        if (params_.include_electric) a += Phi_xi[i];
        fu[i] = a;
    }
    fv[0] = fv[n - 1] = fu[0] = fu[n - 1] = 0.0;

    shift::ShiftState stage = state_.shift;
    stage.X = X;
    Xdot = shift::shift_rhs(state_.xi, h, v, wave_, t, stage);
}

double Simulator::compute_dt() const {
    double vmin = state_.v[0], lmax = 0.0;
    for (const double v : state_.v) {
        vmin = std::min(vmin, v);
        lmax = std::max(lmax, thermo::lambda2(v));
    }
    const double s_max = std::abs(params_.fan.sigma) + lmax;
    const double dt_h = params_.cfl_h * params_.dxi / s_max;
    const double dt_p = params_.cfl_p * params_.dxi * params_.dxi * vmin;
    return params_.include_viscosity ? std::min(dt_h, dt_p) : dt_h;
}

void Simulator::step(double dt) {
    const std::size_t n = state_.xi.size();
    const double t = state_.t;
    const double X = state_.shift.X;

    double Xd1 = 0.0, Xd2 = 0.0;
    const double F1 = boundary_flux(t, X, state_.v, state_.u);
    rhs(t, X, state_.v, state_.u, state_.phi, fv1_, fu1_, Xd1);

    const double X1 = X + dt * Xd1;
    for (std::size_t i = 0; i < n; ++i) {
        v1_[i] = state_.v[i] + dt * fv1_[i];
        u1_[i] = state_.u[i] + dt * fu1_[i];
    }
    pin_boundaries(t + dt, X1, v1_, u1_);
    check_fields(v1_);

    phi1_ = state_.phi;
    const double F2 = boundary_flux(t + dt, X1, v1_, u1_);
    rhs(t + dt, X1, v1_, u1_, phi1_, fv2_, fu2_, Xd2);

    flux_integral_ += 0.5 * dt * (F1 + F2);
    state_.shift.X = X + 0.5 * dt * (Xd1 + Xd2);
    for (std::size_t i = 0; i < n; ++i) {
        state_.v[i] += 0.5 * dt * (fv1_[i] + fv2_[i]);
        state_.u[i] += 0.5 * dt * (fu1_[i] + fu2_[i]);
    }
    state_.t = t + dt;
    pin_boundaries(state_.t, state_.shift.X, state_.v, state_.u);
    check_fields(state_.v);
    if (params_.include_electric)
        solve_potential(state_.t, state_.shift.X, state_.v, state_.phi);
    state_.Xdot = 0.5 * (Xd1 + Xd2);
    state_.dt_last = dt;
}

void Simulator::advance_to(double t_target) {
    while (state_.t < t_target - 1e-12) {
        const double dt = std::min(compute_dt(), t_target - state_.t);
        step(dt);
    }
}

std::vector<composite::Point> Simulator::sample_composite() const {
    return wave_.eval_many(state_.t, state_.shift.X, state_.xi);
}

std::vector<double> Simulator::weight_field() const {
    std::vector<double> a(state_.xi.size());
    for (std::size_t i = 0; i < state_.xi.size(); ++i)
        a[i] = shift::weight(wave_.prof, params_.fan.delta_S,
                             state_.xi[i] - state_.shift.X);
    return a;
}

functionals::EnergyReport Simulator::report() const {
    const auto bar = sample_composite();
    functionals::Perturbation pert(params_.dxi, state_.v, state_.u, state_.phi, bar);

    functionals::EnergyReport r;
    r.t = state_.t;
    r.X = state_.shift.X;
    r.Xdot = shift::shift_rhs(state_.xi, params_.dxi, state_.v, wave_, state_.t,
                              state_.shift);
    r.norms = pert.norms();
    r.eta_weighted = pert.eta_weighted(weight_field());
    r.good = pert.good_terms(params_.fan.delta_S, params_.fan.sigma);
    // d/dt int vtilde = boundary flux of sigma vt + ut plus the shift source
    // Xdot * int vbar^S_xi; time-integrated, the source is profile_jump * X.
    const double mass = numerics::trapezoid(pert.v_tilde(), params_.dxi);
    r.mass_balance_residual = std::abs(mass - mass_initial_ - flux_integral_ -
                                       profile_jump_dom_ * state_.shift.X);
    return r;
}

std::vector<functionals::EnergyReport>
run(Simulator& sim, double t_final, double report_interval,
    const std::function<void(const Simulator&)>& on_report) {
    if (!(report_interval > 0.0))
        throw std::invalid_argument("run: report_interval must be positive");
    std::vector<functionals::EnergyReport> reports;
    auto emit = [&] {
        reports.push_back(sim.report());
        if (on_report) on_report(sim);
    };
    emit();
    double t_next = report_interval;
    while (sim.state().t < t_final - 1e-12) {
        sim.advance_to(std::min(t_next, t_final));
        emit();
        t_next += report_interval;
    }
    return reports;
}

} // namespace nsplab::evolve
