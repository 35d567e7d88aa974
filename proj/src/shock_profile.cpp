#include "nsplab/shock_profile.hpp"

#include "nsplab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nsplab::shock_profile {

std::array<double, 4> profile_rhs(const std::array<double, 4>& state, double sigma) {
    const double v = state[0], q = state[1], phi = state[2], z = state[3];
    if (!(v > 0.0))
        throw std::runtime_error("profile_rhs: integration reached non-positive v");
    return {v * q,
            -(sigma * sigma * v * q - q / v + z) / sigma,
            v * z,
            v * std::exp(phi) - 1.0};
}

std::vector<double> fixed_point_eigenvalues(double v0, double sigma) {
    if (!(v0 > 0.0)) throw std::domain_error("fixed_point_eigenvalues: v0 must be positive");
    const double b = (1.0 / v0 - sigma * sigma * v0) / sigma;
    // (mu - b)(mu^2 - v0) = -1/sigma  <=>  mu^3 - b mu^2 - v0 mu + (b v0 + 1/sigma) = 0
    auto roots = numerics::cubic_real_roots(-b, -v0, b * v0 + 1.0 / sigma);
    roots.push_back(0.0); // line of quasi-neutral equilibria
    std::sort(roots.begin(), roots.end());
    return roots;
}

double unstable_rate(const thermo::RiemannFan& fan) {
    const auto mus = fixed_point_eigenvalues(fan.v_mid, fan.sigma);
    double rate = 0.0;
    for (const double mu : mus)
        if (mu > 1e-10 && (rate == 0.0 || mu < rate)) rate = mu;
    if (rate == 0.0)
        throw std::runtime_error("unstable_rate: no unstable direction at the left state");
    return rate;
}

namespace {

// Once-integrated momentum equation: v' = F(v, phi, phi_xi).
struct Momentum {
    double sigma, v_m;

    double F(double v, double phi, double phix) const {
        const double psi = phix / v;
        return (v / sigma) * (-sigma * sigma * (v - v_m) - 1.0 / v + 2.0 / v_m +
                              0.5 * psi * psi - std::exp(phi));
    }
    double Fv(double v, double phi, double phix) const {
        const double psi = phix / v;
        return (1.0 / sigma) * (-sigma * sigma * (v - v_m) - 1.0 / v + 2.0 / v_m +
                                0.5 * psi * psi - std::exp(phi)) +
               (v / sigma) * (-sigma * sigma + 1.0 / (v * v) - phix * phix / (v * v * v));
    }
    double Fphi(double v, double phi, double) const {
        return -(v / sigma) * std::exp(phi);
    }
    double Fphix(double v, double, double phix) const {
        return phix / (sigma * v);
    }
};

struct Bvp {
    std::size_t n;       // grid nodes
    std::size_t j0;      // anchor node (xi = 0)
    double dxi;
    double anchor;
    double phi_m, phi_p;
    Momentum mom;

    // residual of the full 2n system (identity rows included, residual 0)
    void residual(const std::vector<double>& v, const std::vector<double>& phi,
                  std::vector<double>& r) const {
        const double h = dxi, h2 = h * h;
        std::fill(r.begin(), r.end(), 0.0);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double vh = 0.5 * (v[i] + v[i + 1]);
            const double ph = 0.5 * (phi[i] + phi[i + 1]);
            const double px = (phi[i + 1] - phi[i]) / h;
            const double res = (v[i + 1] - v[i]) / h - mom.F(vh, ph, px);
            r[(i < j0) ? 2 * i : 2 * (i + 1)] = res;
        }
        r[2 * j0] = v[j0] - anchor;
        r[2 * 0 + 1] = phi[0] - phi_m;
        r[2 * (n - 1) + 1] = phi[n - 1] - phi_p;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double wr = 0.5 * (1.0 / v[i] + 1.0 / v[i + 1]);
            const double wl = 0.5 * (1.0 / v[i] + 1.0 / v[i - 1]);
            r[2 * i + 1] = -(wr * (phi[i + 1] - phi[i]) - wl * (phi[i] - phi[i - 1])) / h2 -
                           1.0 + v[i] * std::exp(phi[i]);
        }
    }

    numerics::BandedMatrix jacobian(const std::vector<double>& v,
                                    const std::vector<double>& phi) const {
        const double h = dxi, h2 = h * h;
        numerics::BandedMatrix J(2 * n, 3, 3);
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const std::size_t row = (i < j0) ? 2 * i : 2 * (i + 1);
            const double vh = 0.5 * (v[i] + v[i + 1]);
            const double ph = 0.5 * (phi[i] + phi[i + 1]);
            const double px = (phi[i + 1] - phi[i]) / h;
            const double Fv = mom.Fv(vh, ph, px);
            const double Fp = mom.Fphi(vh, ph, px);
            const double Fx = mom.Fphix(vh, ph, px);
            J.at(row, 2 * i) += -1.0 / h - 0.5 * Fv;
            J.at(row, 2 * (i + 1)) += 1.0 / h - 0.5 * Fv;
            J.at(row, 2 * i + 1) += -0.5 * Fp + Fx / h;
            J.at(row, 2 * (i + 1) + 1) += -0.5 * Fp - Fx / h;
        }
        J.at(2 * j0, 2 * j0) = 1.0;
        J.at(1, 1) = 1.0;
        J.at(2 * (n - 1) + 1, 2 * (n - 1) + 1) = 1.0;
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const std::size_t row = 2 * i + 1;
            const double wr = 0.5 * (1.0 / v[i] + 1.0 / v[i + 1]);
            const double wl = 0.5 * (1.0 / v[i] + 1.0 / v[i - 1]);
            J.at(row, 2 * i + 1) = (wr + wl) / h2 + v[i] * std::exp(phi[i]);
            J.at(row, 2 * (i + 1) + 1) = -wr / h2;
            J.at(row, 2 * (i - 1) + 1) = -wl / h2;
            J.at(row, 2 * i) = (phi[i + 1] - 2.0 * phi[i] + phi[i - 1]) / (2.0 * v[i] * v[i] * h2) +
                               std::exp(phi[i]);
            J.at(row, 2 * (i + 1)) = (phi[i + 1] - phi[i]) / (2.0 * v[i + 1] * v[i + 1] * h2);
            J.at(row, 2 * (i - 1)) = -(phi[i] - phi[i - 1]) / (2.0 * v[i - 1] * v[i - 1] * h2);
        }
        return J;
    }
};

double max_abs(const std::vector<double>& r) {
    double m = 0.0;
    for (const double x : r) m = std::max(m, std::abs(x));
    return m;
}

// 4th-order centered first derivative on a uniform grid (2nd order one-sided
// at the two nodes next to each end).
std::vector<double> derivative4(const std::vector<double>& f, double h) {
    const std::size_t n = f.size();
    std::vector<double> d(n);
    for (std::size_t i = 2; i + 2 < n; ++i)
        d[i] = (-f[i + 2] + 8.0 * f[i + 1] - 8.0 * f[i - 1] + f[i - 2]) / (12.0 * h);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    d[1] = (f[2] - f[0]) / (2.0 * h);
    d[n - 2] = (f[n - 1] - f[n - 3]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return d;
}

} // namespace

ShockProfile solve_profile(const thermo::RiemannFan& fan, double L, double tol) {
    ShockProfile p;
    p.fan = fan;
    p.sigma = fan.sigma;
    p.delta_S = fan.delta_S;

    if (fan.delta_S <= 0.0 || fan.degenerate_shock) {
        p.constant = true;
        p.delta_S = 0.0;
        return p;
    }

    const double rate = unstable_rate(fan);
    if (L <= 0.0) L = std::max(40.0 / rate, 200.0);
    const double dxi = std::min(0.05, 0.01 / fan.delta_S);
    const std::size_t half = static_cast<std::size_t>(std::ceil(L / dxi));
    const std::size_t n = 2 * half + 1;
    p.L = dxi * static_cast<double>(half);
    p.dxi = dxi;

    Bvp bvp;
    bvp.n = n;
    bvp.j0 = half;
    bvp.dxi = dxi;
    bvp.anchor = 0.5 * (fan.v_mid + fan.v_plus);
    bvp.phi_m = fan.phi_mid;
    bvp.phi_p = fan.phi_plus;
    bvp.mom = {fan.sigma, fan.v_mid};

    p.xi.resize(n);
    std::vector<double> v(n), phi(n);
    for (std::size_t i = 0; i < n; ++i) {
        p.xi[i] = -p.L + dxi * static_cast<double>(i);
        v[i] = bvp.anchor + 0.5 * fan.delta_S * std::tanh(rate * p.xi[i]);
        phi[i] = -std::log(v[i]);
    }

    std::vector<double> r(2 * n);
    bvp.residual(v, phi, r);
    double res = max_abs(r);
    bool converged = res < tol;
    for (int it = 0; it < 60 && !converged; ++it) {
        auto J = bvp.jacobian(v, phi);
        for (double& x : r) x = -x;
        const auto delta = J.solve(r);

        double alpha = 1.0;
        std::vector<double> vt(n), pt(n), rt(2 * n);
        bool accepted = false;
        for (int half_it = 0; half_it <= 40; ++half_it) {
            bool positive = true;
            for (std::size_t i = 0; i < n; ++i) {
                vt[i] = v[i] + alpha * delta[2 * i];
                pt[i] = phi[i] + alpha * delta[2 * i + 1];
                if (!(vt[i] > 0.0)) { positive = false; break; }
            }
            if (positive) {
                bvp.residual(vt, pt, rt);
                const double rnew = max_abs(rt);
                if (rnew < res) {
                    v.swap(vt);
                    phi.swap(pt);
                    r.swap(rt);
                    res = rnew;
                    accepted = true;
                    break;
                }
            }
            alpha *= 0.5;
        }
        if (!accepted)
            throw std::runtime_error("solve_profile: Newton stagnation at residual " +
                                     std::to_string(res) + " (delta_S = " +
                                     std::to_string(fan.delta_S) +
                                     "; try a smaller shock amplitude)");
        converged = res < tol;
    }
    if (!converged)
        throw std::runtime_error("solve_profile: no convergence, residual " + std::to_string(res));

    // sampled fields and analytic derivatives
    p.v = std::move(v);
    p.phi = std::move(phi);
    p.u.resize(n); p.h.resize(n);
    p.vp.resize(n); p.up.resize(n); p.phip.resize(n); p.hp.resize(n);
    p.vpp.resize(n); p.phipp.resize(n);

    const auto phix = derivative4(p.phi, dxi);
    for (std::size_t i = 0; i < n; ++i) {
        const double vi = p.v[i], fi = p.phi[i], fx = phix[i];
        p.u[i] = fan.u_mid - fan.sigma * (vi - fan.v_mid);
        p.vp[i] = bvp.mom.F(vi, fi, fx);
        p.up[i] = -fan.sigma * p.vp[i];
        p.phip[i] = fx;
        // Poisson identity: (phi'/v)' = v e^phi - 1
        p.phipp[i] = vi * (vi * std::exp(fi) - 1.0) + fx * p.vp[i] / vi;
        p.vpp[i] = bvp.mom.Fv(vi, fi, fx) * p.vp[i] +
                   bvp.mom.Fphi(vi, fi, fx) * fx +
                   bvp.mom.Fphix(vi, fi, fx) * p.phipp[i];
        p.h[i] = p.u[i] - p.vp[i] / vi;
        p.hp[i] = p.up[i] - (p.vpp[i] * vi - p.vp[i] * p.vp[i]) / (vi * vi);
    }
    return p;
}

ShockProfile::Point ShockProfile::eval(double x) const {
    if (constant || v.empty()) {
        return {fan.v_mid, fan.u_mid, fan.phi_mid, fan.u_mid,
                0.0, 0.0, 0.0, 0.0, 0.0, 0.0};
    }
    if (x <= -L)
        return {fan.v_mid, fan.u_mid, fan.phi_mid, fan.u_mid, 0, 0, 0, 0, 0, 0};
    if (x >= L)
        return {fan.v_plus, fan.u_plus, fan.phi_plus, fan.u_plus, 0, 0, 0, 0, 0, 0};

    const double s = (x + L) / dxi;
    std::size_t i = static_cast<std::size_t>(s);
    if (i + 1 >= v.size()) i = v.size() - 2;
    const double t = s - static_cast<double>(i);

    // Hermite basis
    const double t2 = t * t, t3 = t2 * t;
    const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
    const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
    const double g00 = (6 * t2 - 6 * t) / dxi, g10 = 3 * t2 - 4 * t + 1;
    const double g01 = (6 * t - 6 * t2) / dxi, g11 = 3 * t2 - 2 * t;

    auto hermite = [&](const std::vector<double>& f, const std::vector<double>& fp) {
        return h00 * f[i] + h10 * dxi * fp[i] + h01 * f[i + 1] + h11 * dxi * fp[i + 1];
    };
    auto hermite_d = [&](const std::vector<double>& f, const std::vector<double>& fp) {
        return g00 * f[i] + g10 * fp[i] + g01 * f[i + 1] + g11 * fp[i + 1];
    };
    auto linear = [&](const std::vector<double>& f) {
        return (1.0 - t) * f[i] + t * f[i + 1];
    };

    Point pt;
    pt.v = hermite(v, vp);
    pt.u = hermite(u, up);
    pt.phi = hermite(phi, phip);
    pt.h = hermite(h, hp);
    pt.vp = hermite(vp, vpp);
    pt.up = -sigma * pt.vp;
    pt.phip = hermite(phip, phipp);
    pt.hp = hermite_d(h, hp);
    pt.vpp = linear(vpp);
    pt.phipp = linear(phipp);
    return pt;
}

double residual_unreduced(const ShockProfile& profile) {
    if (profile.constant) return 0.0;
    const std::size_t n = profile.v.size();
    const double h = profile.dxi;
    const double sigma = profile.sigma;

    const auto vx = derivative4(profile.v, h);
    const auto ux = derivative4(profile.u, h);
    const auto phix = derivative4(profile.phi, h);

    std::vector<double> pv(n), uxv(n), psi(n);
    for (std::size_t i = 0; i < n; ++i) {
        pv[i] = 1.0 / profile.v[i]; // isothermal pressure p(v)
        uxv[i] = ux[i] / profile.v[i];
        psi[i] = phix[i] / profile.v[i];
    }
    const auto pvx = derivative4(pv, h);
    const auto uxvx = derivative4(uxv, h);
    const auto psix = derivative4(psi, h);

    double r = 0.0;
    for (std::size_t i = 4; i + 4 < n; ++i) {
        const double mass = -sigma * vx[i] - ux[i];
        const double mom = -sigma * ux[i] + pvx[i] - uxvx[i] + psi[i];
        const double pois = -psix[i] - 1.0 + profile.v[i] * std::exp(profile.phi[i]);
        r = std::max({r, std::abs(mass), std::abs(mom), std::abs(pois)});
    }
    return r;
}

TailReport verify_tail(const ShockProfile& profile) {
    TailReport rep;
    if (profile.constant) return rep;
    const auto& xi = profile.xi;
    const auto& v = profile.v;
    const auto& vp = profile.vp;
    const double ds = profile.delta_S;

    rep.max_vp = *std::max_element(vp.begin(), vp.end());

    auto fit_side = [&](bool left, const std::vector<double>& f, double f_end,
                        double& rate, double& r2) {
        std::vector<double> xs, ys;
        for (std::size_t i = 0; i < xi.size(); ++i) {
            if (left && xi[i] > -2.0) continue;
            if (!left && xi[i] < 2.0) continue;
            const double d = std::abs(f[i] - f_end);
            if (d < 1e-11 || d > 0.2 * ds) continue;
            xs.push_back(xi[i]);
            ys.push_back(std::log(d));
        }
        if (xs.size() < 10) { rate = 0.0; r2 = 0.0; return; }
        const auto fit = numerics::fit_line(xs, ys);
        rate = std::abs(fit.slope);
        r2 = fit.r_squared;
    };

    fit_side(true, v, profile.fan.v_mid, rep.rate_left, rep.r2_left);
    fit_side(false, v, profile.fan.v_plus, rep.rate_right, rep.r2_right);
    fit_side(true, vp, 0.0, rep.rate_left_deriv, rep.r2_left_deriv);
    fit_side(false, vp, 0.0, rep.rate_right_deriv, rep.r2_right_deriv);

    const double rmin = std::min(rep.rate_left, rep.rate_right);
    const double rmax = std::max(rep.rate_left, rep.rate_right);
    rep.decay_ok = rep.r2_left > 0.99 && rep.r2_right > 0.99 &&
                   rmin > 0.0 && rmax / rmin < 4.0;
    return rep;
}

} // namespace nsplab::shock_profile
