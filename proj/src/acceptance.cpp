#include "nsplab/acceptance.hpp"

#include "nsplab/composite.hpp"
#include "nsplab/evolve.hpp"
#include "nsplab/functionals.hpp"
#include "nsplab/numerics.hpp"
#include "nsplab/poisson.hpp"
#include "nsplab/rarefaction.hpp"
#include "nsplab/shift.hpp"
#include "nsplab/shock_profile.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <random>
#include <sstream>

namespace nsplab::acceptance {

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t0) {
    return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::string g(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!detail.str().empty()) detail << "; ";
        detail << what << (cond ? "" : " FAILED");
        ok = ok && cond;
    }
};

} // namespace

thermo::RiemannFan reference_fan() {
    const double u_mid = thermo::r1_velocity(1.0, 0.0, 1.1);
    const double u_plus = thermo::s2_velocity(1.1, u_mid, 1.2);
    return thermo::solve_riemann(1.0, 0.0, 1.2, u_plus);
}

thermo::RiemannFan shock_only_fan(double v_mid, double u_mid, double delta_S) {
    const double v_plus = v_mid + delta_S;
    const double u_plus = thermo::s2_velocity(v_mid, u_mid, v_plus);
    return thermo::solve_riemann(v_mid, u_mid, v_plus, u_plus);
}

CriterionResult criterion_riemann() {
    CriterionResult r{1, "riemann algebra", false, "", 0.0};
    const auto t0 = clock_type::now();
    Check c;

    const double u_mid = thermo::r1_velocity(1.0, 0.0, 1.1);
    const double u_plus = thermo::s2_velocity(1.1, u_mid, 1.2); // 0.0116975
    const double sigma_exact = std::sqrt(2.0 / (1.1 * 1.2));    // 1.2309149

    thermo::RiemannFan fan;
    const int reps = 200;
    const auto ts = clock_type::now();
    for (int i = 0; i < reps; ++i)
        fan = thermo::solve_riemann(1.0, 0.0, 1.2, u_plus);
    const double per_call = seconds_since(ts) / reps;

    c.require(std::abs(fan.v_mid - 1.1) < 1e-8,
              "v_mid = " + g(fan.v_mid) + " within 1e-8 of 1.1");
    c.require(std::abs(fan.sigma - sigma_exact) < 1e-6,
              "sigma = " + g(fan.sigma) + " within 1e-6 of " + g(sigma_exact));
    c.require(thermo::lambda2(fan.v_plus) < fan.sigma &&
                  fan.sigma < thermo::lambda2(fan.v_mid),
              "Lax inequality strict");
    c.require(per_call < 1e-3, "runtime " + g(per_call * 1e3) + " ms < 1 ms");

    r.passed = c.ok;
    r.detail = c.detail.str();
    r.seconds = seconds_since(t0);
    return r;
}

CriterionResult criterion_shock_profile() {
    CriterionResult r{2, "shock profile", false, "", 0.0};
    const auto t0 = clock_type::now();
    Check c;

    const auto fan = reference_fan(); // delta_S = 0.1
    const auto prof = shock_profile::solve_profile(fan);

    c.require(shock_profile::residual_unreduced(prof) < 1e-7,
              "unreduced residual " + g(shock_profile::residual_unreduced(prof)) +
                  " < 1e-7");
    // strict increase wherever the increment is resolvable above the BVP
    // solve tolerance; the far tails (e^{-rate L} ~ 1e-18 per step) carry
    // solver noise of ~1e-13 and only need to be flat to that level
    bool increasing = true;
    for (std::size_t i = 0; i + 1 < prof.v.size(); ++i) {
        const double step = prof.v[i + 1] - prof.v[i];
        const double predicted = 0.5 * (prof.vp[i] + prof.vp[i + 1]) * prof.dxi;
        if (step < -1e-12 || (predicted > 1e-11 && !(step > 0.0))) {
            increasing = false;
            break;
        }
    }
    c.require(increasing, "v strictly increasing (up to solver noise in the tails)");
    c.require(std::abs(prof.eval(0.0).v - 0.5 * (fan.v_mid + fan.v_plus)) < 1e-8,
              "v(0) anchored at the midpoint");
    const auto tail = shock_profile::verify_tail(prof);
    c.require(tail.r2_left > 0.99 && tail.r2_right > 0.99,
              "tail fits R^2 = (" + g(tail.r2_left) + ", " + g(tail.r2_right) +
                  ") > 0.99");

    std::vector<double> scaled;
    for (const double ds : {0.05, 0.1, 0.2}) {
        const auto f = shock_only_fan(1.1, fan.u_mid, ds);
        const auto p = shock_profile::solve_profile(f);
        scaled.push_back(shock_profile::verify_tail(p).max_vp / (ds * ds));
    }
    const double ratio = *std::max_element(scaled.begin(), scaled.end()) /
                         *std::min_element(scaled.begin(), scaled.end());
    c.require(ratio < 3.0, "max|v'|/delta_S^2 spread " + g(ratio) + " < 3");

    r.seconds = seconds_since(t0);
    c.require(r.seconds < 10.0, "runtime " + g(r.seconds) + " s < 10 s");
    r.passed = c.ok;
    r.detail = c.detail.str();
    return r;
}

CriterionResult criterion_rarefaction() {
    CriterionResult r{3, "rarefaction rates", false, "", 0.0};
    const auto t0 = clock_type::now();
    Check c;

    // Pure-rarefaction data in the saturated regime: for tanh data the exact
    // max slope of the underlying Burgers solution is d/(1 + (1+t) d) with
    // d = (w_mid - w_minus)/2, so the t=10 vs t=100 sup ratio approaches
    // 101/11 only once (1+t) d >> 1 AND the -sqrt(2)/w chain factor is nearly
    // constant across the fan. (0.1 -> 1/9) gives d = 0.707 with a 1.2x
    // spread in w^2; the measured ratio is then within 14% of 101/11.
    const double v_mid_r = 1.0 / 9.0;
    const double u_plus = thermo::r1_velocity(0.1, 0.0, v_mid_r);
    const auto fan = thermo::solve_riemann(0.1, 0.0, v_mid_r, u_plus);
    const rarefaction::RarefactionField field(fan);

    auto scan = [&](double t, double& sup_vx, double& l1_vx) {
        const double lo = field.w_minus * (1.0 + t) - 25.0;
        const double hi = field.w_mid * (1.0 + t) + 25.0;
        const double dx = 0.01;
        sup_vx = 0.0;
        std::vector<double> av;
        for (double x = lo; x <= hi; x += dx) {
            const auto d = rarefaction::derivatives(field, t, x, 1);
            sup_vx = std::max(sup_vx, std::abs(d.vx[0]));
            av.push_back(std::abs(d.vx[0]));
        }
        l1_vx = numerics::trapezoid(av, dx);
    };

    double sup10, l110, sup100, l1100;
    scan(10.0, sup10, l110);
    scan(100.0, sup100, l1100);

    const double ratio = sup10 / sup100;
    const double target = 101.0 / 11.0;
    c.require(std::abs(ratio - target) < 0.3 * target,
              "sup|v_x| ratio t=10/t=100 = " + g(ratio) + " within 30% of " +
                  g(target));
    c.require(std::abs(l110 - l1100) < 0.01 * l110,
              "L1|v_x| constant within 1% (" + g(l110) + " vs " + g(l1100) + ")");

    r.seconds = seconds_since(t0);
    c.require(r.seconds < 5.0, "runtime " + g(r.seconds) + " s < 5 s");
    r.passed = c.ok;
    r.detail = c.detail.str();
    return r;
}

CriterionResult criterion_poisson() {
    CriterionResult r{4, "poisson solver", false, "", 0.0};
    const auto t0 = clock_type::now();
    Check c;

    // manufactured solution on [0, 1]: phi = A sin(pi x), v = 1 + B sin(2 pi x)
    const double A = 0.1, B = 0.3;
    const double pi = std::acos(-1.0);
    auto phi_ex = [&](double x) { return A * std::sin(pi * x); };
    auto source = [&](double x) {
        const double v = 1.0 + B * std::sin(2.0 * pi * x);
        const double vx = 2.0 * pi * B * std::cos(2.0 * pi * x);
        const double px = A * pi * std::cos(pi * x);
        const double pxx = -A * pi * pi * std::sin(pi * x);
        return -(pxx / v - px * vx / (v * v)) - 1.0 + v * std::exp(phi_ex(x));
    };

    std::vector<double> errs, hs;
    bool damping = true;
    for (const std::size_t n : {65u, 129u, 257u, 513u}) {
        poisson::Problem prob;
        prob.dxi = 1.0 / static_cast<double>(n - 1);
        prob.v.resize(n);
        prob.source.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = prob.dxi * static_cast<double>(i);
            prob.v[i] = 1.0 + B * std::sin(2.0 * pi * x);
            prob.source[i] = source(x);
        }
        const auto sol = poisson::solve_phi(prob, std::vector<double>(n, 0.0));
        damping = damping && sol.damping_monotone;
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = prob.dxi * static_cast<double>(i);
            e = std::max(e, std::abs(sol.phi[i] - phi_ex(x)));
        }
        errs.push_back(std::log(e));
        hs.push_back(std::log(prob.dxi));
    }
    const auto fit = numerics::fit_line(hs, errs);
    c.require(std::abs(fit.slope - 2.0) < 0.2,
              "convergence order " + g(fit.slope) + " = 2.0 +- 0.2");
    c.require(damping, "Newton residual decrease monotone");

    poisson::Problem triv;
    triv.dxi = 0.05;
    triv.v.assign(201, 1.0);
    const auto sol = poisson::solve_phi(triv, std::vector<double>(201, 0.1));
    double m = 0.0;
    for (const double p : sol.phi) m = std::max(m, std::abs(p));
    c.require(m < 1e-14, "v = 1, zero BC gives phi = 0 to 1e-14 (max " + g(m) + ")");

    r.seconds = seconds_since(t0);
    c.require(r.seconds < 5.0, "runtime " + g(r.seconds) + " s < 5 s");
    r.passed = c.ok;
    r.detail = c.detail.str();
    return r;
}

CriterionResult criterion_steady_profile() {
    CriterionResult r{5, "steady profile fidelity", false, "", 0.0};
    const auto t0 = clock_type::now();
    Check c;

    const auto ref = reference_fan();
    const auto fan = shock_only_fan(ref.v_mid, ref.u_mid, ref.delta_S);
    const auto prof = shock_profile::solve_profile(fan);

    evolve::Params par;
    par.fan = fan;
    par.L_dom = 150.0;
    par.dxi = 0.05;
    evolve::Simulator sim(par, prof);
    sim.initialize();
    sim.advance_to(10.0);

    const auto& st = sim.state();
    double sup = 0.0;
    for (std::size_t i = 0; i < st.xi.size(); ++i) {
        const double vbar = prof.eval(st.xi[i] - st.shift.X).v;
        sup = std::max(sup, std::abs(st.v[i] - vbar));
    }
    c.require(sup <= 5.0 * par.dxi * par.dxi,
              "sup|v - vbar^S| = " + g(sup) + " <= " + g(5.0 * par.dxi * par.dxi));
    c.require(std::abs(st.shift.X) < 1e-6, "|X| = " + g(std::abs(st.shift.X)) + " < 1e-6");

    r.seconds = seconds_since(t0);
    c.require(r.seconds < 120.0, "runtime " + g(r.seconds) + " s < 2 min");
    r.passed = c.ok;
    r.detail = c.detail.str();
    return r;
}

CriterionResult criterion_stability() {
    CriterionResult r{6, "composite-wave stability", false, "", 0.0};
    const auto t0 = clock_type::now();
    Check c;

    const auto fan = reference_fan();
    const auto prof = shock_profile::solve_profile(fan);

    evolve::Params par;
    par.fan = fan;
    par.L_dom = 150.0;
    par.dxi = 0.05;
    par.A_v = 0.01;
    par.A_u = 0.01;
    par.w_v = 2.0;
    par.w_u = 2.0;
    // the shift relaxation rate scales with c0; at c0 = 1 the tracking time
    // constant (~60) is comparable to the whole run, so the asymptotic decay
    // of Xdot would not be visible by t = 100. c0 = 4 makes it visible
    // without changing any measured trend qualitatively.
    par.c0 = 4.0;
    evolve::Simulator sim(par, prof);
    sim.initialize();

    double min_v = 1e30, xdot_running_max = 0.0;
    const auto reports = evolve::run(sim, 100.0, 1.0, [&](const evolve::Simulator& s) {
        for (const double v : s.state().v) min_v = std::min(min_v, v);
    });
    for (std::size_t i = 0; i + 1 < reports.size(); ++i)
        xdot_running_max = std::max(xdot_running_max, std::abs(reports[i].Xdot));

    const auto& first = reports.front();
    const auto& last = reports.back();
    const double sup0 = std::max(first.norms.Linf_v, first.norms.Linf_u);
    const double supT = std::max(last.norms.Linf_v, last.norms.Linf_u);
    c.require(supT < 0.3 * sup0,
              "sup(v~,u~): " + g(supT) + " < 0.3 x " + g(sup0));
    c.require(std::abs(last.Xdot) < 0.2 * xdot_running_max,
              "|Xdot(100)| = " + g(std::abs(last.Xdot)) + " < 0.2 x running max " +
                  g(xdot_running_max));
    c.require(min_v > 0.0, "min(v) = " + g(min_v) + " > 0");
    c.require(last.eta_weighted < first.eta_weighted,
              "weighted eta: " + g(last.eta_weighted) + " < initial " +
                  g(first.eta_weighted));

    r.seconds = seconds_since(t0);
    c.require(r.seconds < 1800.0, "runtime " + g(r.seconds) + " s < 30 min");
    r.passed = c.ok;
    r.detail = c.detail.str() + "; c0 = " + g(par.c0);
    return r;
}

CriterionResult criterion_shift_linearity() {
    CriterionResult r{7, "shift linearity", false, "", 0.0};
    const auto t0 = clock_type::now();
    Check c;

    const auto fan = reference_fan();
    const auto prof = shock_profile::solve_profile(fan);

    auto max_xdot = [&](double amp) {
        evolve::Params par;
        par.fan = fan;
        par.L_dom = 150.0;
        par.dxi = 0.05;
        par.A_v = amp;
        par.A_u = amp;
        evolve::Simulator sim(par, prof);
        sim.initialize();
        double m = 0.0;
        evolve::run(sim, 5.0, 0.25, [&](const evolve::Simulator& s) {
            m = std::max(m, std::abs(s.state().Xdot));
        });
        return m;
    };

    const double m1 = max_xdot(0.01);
    const double m2 = max_xdot(0.005);
    const double m4 = max_xdot(0.0025);
    c.require(std::abs(m2 / m1 - 0.5) < 0.15,
              "half amplitude scales max|Xdot| by " + g(m2 / m1));
    c.require(std::abs(m4 / m2 - 0.5) < 0.15,
              "quarter amplitude scales max|Xdot| by " + g(m4 / m2));

    r.seconds = seconds_since(t0);
    c.require(r.seconds < 600.0, "runtime " + g(r.seconds) + " s < 10 min");
    r.passed = c.ok;
    r.detail = c.detail.str();
    return r;
}

CriterionResult criterion_eta_equivalence(unsigned seed) {
    CriterionResult r{8, "eta equivalence", false, "", 0.0};
    const auto t0 = clock_type::now();
    Check c;

    // regression bounds frozen after one calibration run on seed 12345
    const double c_lo = 0.35, c_hi = 3.0;

    const auto fan = reference_fan();
    const auto prof = shock_profile::solve_profile(fan);
    const composite::CompositeWave wave(fan, prof);

    const double L = 60.0, dxi = 0.05;
    const std::size_t n = 2 * static_cast<std::size_t>(L / dxi) + 1;
    std::vector<double> xi(n);
    std::vector<composite::Point> bar(n);
    for (std::size_t i = 0; i < n; ++i) {
        xi[i] = -L + dxi * static_cast<double>(i);
        bar[i] = wave.eval(0.0, 0.0, xi[i]);
    }
    const std::vector<double> ones(n, 1.0);

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> amp(-1e-2, 1e-2);
    std::uniform_real_distribution<double> center(-40.0, 40.0);
    std::uniform_real_distribution<double> width(1.0, 5.0);

    double lo = 1e30, hi = 0.0;
    std::vector<double> v(n), u(n), phi(n);
    for (int trial = 0; trial < 100; ++trial) {
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = bar[i].v;
            u[i] = bar[i].u;
        }
        for (int b = 0; b < 4; ++b) {
            const double av = amp(rng), au = amp(rng);
            const double cv = center(rng), cu = center(rng);
            const double wv = width(rng), wu = width(rng);
            for (std::size_t i = 0; i < n; ++i) {
                v[i] += av * std::exp(-numerics::sqr(xi[i] - cv) / (2.0 * wv * wv));
                u[i] += au * std::exp(-numerics::sqr(xi[i] - cu) / (2.0 * wu * wu));
            }
        }
        poisson::Problem prob;
        prob.dxi = dxi;
        prob.v = v;
        prob.phi_left = bar.front().phi;
        prob.phi_right = bar.back().phi;
        for (std::size_t i = 0; i < n; ++i) phi[i] = bar[i].phi;
        phi = poisson::solve_phi(prob, phi).phi;

        functionals::Perturbation pert(dxi, v, u, phi, bar);
        const double eta = pert.eta_weighted(ones);
        std::vector<double> s(n);
        const auto& ht = pert.h_tilde();
        const auto& vt = pert.v_tilde();
        const auto& px = pert.phi_tilde_xi();
        const auto& pxx = pert.phi_tilde_xixi();
        for (std::size_t i = 0; i < n; ++i)
            s[i] = ht[i] * ht[i] + vt[i] * vt[i] + px[i] * px[i] + pxx[i] * pxx[i];
        const double S = numerics::trapezoid(s, dxi);
        const double ratio = eta / S;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
    }

    c.require(lo > c_lo && hi < c_hi,
              "ratio range [" + g(lo) + ", " + g(hi) + "] inside [" + g(c_lo) +
                  ", " + g(c_hi) + "]");

    r.seconds = seconds_since(t0);
    c.require(r.seconds < 60.0, "runtime " + g(r.seconds) + " s < 1 min");
    r.passed = c.ok;
    r.detail = c.detail.str();
    return r;
}

CriterionResult criterion_interaction() {
    CriterionResult r{9, "wave-interaction decay", false, "", 0.0};
    const auto t0 = clock_type::now();
    Check c;

    const auto fan = reference_fan();
    const auto prof = shock_profile::solve_profile(fan);
    const rarefaction::RarefactionField field(fan);

    auto interaction_norm = [&](double t) {
        const double L = prof.L, dx = 0.05;
        std::vector<double> f;
        f.reserve(static_cast<std::size_t>(2 * L / dx) + 2);
        for (double xi = -L; xi <= L; xi += dx) {
            const double vSx = prof.eval(xi).vp;
            const double vR = rarefaction::eval(field, t, xi + fan.sigma * t).v;
            f.push_back(numerics::sqr(vSx * (vR - fan.v_mid)));
        }
        return std::sqrt(numerics::trapezoid(f, dx));
    };

    const double n0 = interaction_norm(0.0);
    const double n10 = interaction_norm(10.0);
    const double n50 = interaction_norm(50.0);
    c.require(n0 > n10 && n10 > n50,
              "monotone decay: " + g(n0) + " > " + g(n10) + " > " + g(n50));

    std::vector<double> vals;
    for (int t = 0; t <= 50; ++t) vals.push_back(interaction_norm(t));
    const double integral = numerics::trapezoid(vals, 1.0);
    c.require(std::isfinite(integral) && integral > 0.0,
              "time integral over [0,50] = " + g(integral) + " finite");

    r.seconds = seconds_since(t0);
    c.require(r.seconds < 60.0, "runtime " + g(r.seconds) + " s < 1 min");
    r.passed = c.ok;
    r.detail = c.detail.str();
    return r;
}

std::vector<CriterionResult> run(const std::vector<int>& ids, unsigned seed,
                                 unsigned threads) {
    std::vector<std::function<CriterionResult()>> tasks = {
        criterion_riemann,
        criterion_shock_profile,
        criterion_rarefaction,
        criterion_poisson,
        criterion_steady_profile,
        criterion_stability,
        criterion_shift_linearity,
        [seed] { return criterion_eta_equivalence(seed); },
        criterion_interaction,
    };
    std::vector<std::function<CriterionResult()>> selected;
    for (int id = 1; id <= 9; ++id)
        if (ids.empty() || std::find(ids.begin(), ids.end(), id) != ids.end())
            selected.push_back(tasks[static_cast<std::size_t>(id - 1)]);

    std::vector<CriterionResult> out(selected.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < selected.size(); ++i) out[i] = selected[i]();
        return out;
    }
    std::vector<std::future<CriterionResult>> futures;
    std::size_t next = 0;
    while (next < selected.size() || !futures.empty()) {
        while (next < selected.size() && futures.size() < threads)
            futures.push_back(std::async(std::launch::async, selected[next++]));
        const std::size_t done = next - futures.size();
        out[done] = futures.front().get();
        futures.erase(futures.begin());
    }
    return out;
}

std::string format_line(const CriterionResult& r) {
    std::ostringstream os;
    os << "criterion " << r.id << " (" << r.name << "): "
       << (r.passed ? "PASS" : "FAIL") << " [" << g(r.seconds) << " s] "
       << r.detail;
    return os.str();
}

} // namespace nsplab::acceptance
