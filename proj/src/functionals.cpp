#include "nsplab/functionals.hpp"

#include "nsplab/numerics.hpp"
#include "nsplab/poisson.hpp"

#include <cmath>
#include <stdexcept>

namespace nsplab::functionals {

std::vector<double> effective_velocity(double dxi, std::span<const double> v,
                                       std::span<const double> u) {
    if (v.size() != u.size())
        throw std::invalid_argument("effective_velocity: size mismatch");
    for (const double x : v)
        if (!(x > 0.0)) throw std::domain_error("effective_velocity: v must be positive");
    const auto vx = numerics::derivative(v, dxi);
    std::vector<double> h(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) h[i] = u[i] - vx[i] / v[i];
    return h;
}

double relative_Q(double v, double vbar) {
    if (!(v > 0.0) || !(vbar > 0.0))
        throw std::domain_error("relative_Q: arguments must be positive");
    return -2.0 * std::log(v / vbar) + (2.0 / vbar) * (v - vbar);
}

double relative_pressure(double v, double vbar) {
    return thermo::modified_pressure(v) - thermo::modified_pressure(vbar) -
           thermo::modified_pressure_d(vbar) * (v - vbar);
}

double eta_pointwise(double h, double hbar, double v, double vbar,
                     double phibar, double phit_xi, double phit_xixi) {
    const double ht = h - hbar;
    const double vt = v - vbar;
    const double e = std::exp(-phibar);
    return 0.5 * ht * ht + relative_Q(v, vbar) - vt * phit_xixi / (vbar * vbar) +
           0.5 * e * phit_xixi * phit_xixi / (vbar * vbar * vbar) +
           0.5 * e * phit_xi * phit_xi / (vbar * vbar);
}

Perturbation::Perturbation(double dxi, std::span<const double> v,
                           std::span<const double> u,
                           std::span<const double> phi,
                           const std::vector<composite::Point>& bar)
    : dxi_(dxi), bar_(&bar) {
    const std::size_t n = v.size();
    if (u.size() != n || phi.size() != n || bar.size() != n)
        throw std::invalid_argument("Perturbation: size mismatch");

    vt_.resize(n); ut_.resize(n); phit_.resize(n); dp_.resize(n);
    const auto h = effective_velocity(dxi, v, u);
    ht_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        vt_[i] = v[i] - bar[i].v;
        ut_[i] = u[i] - bar[i].u;
        phit_[i] = phi[i] - bar[i].phi;
        ht_[i] = h[i] - bar[i].h;
        dp_[i] = thermo::modified_pressure(v[i]) - thermo::modified_pressure(bar[i].v);
    }
    // derivatives of the superposed phi-perturbation (cancel the common part
    // before differencing)
    phit_x_ = numerics::derivative(phit_, dxi);
    phit_xx_ = numerics::second_derivative(phit_, dxi);
    phit_xxx_ = numerics::derivative(phit_xx_, dxi);
}

NormSet Perturbation::norms() const {
    const std::size_t n = vt_.size();
    const auto vtx = numerics::derivative(vt_, dxi_);
    const auto vtxx = numerics::second_derivative(vt_, dxi_);
    const auto utx = numerics::derivative(ut_, dxi_);
    const auto utxx = numerics::second_derivative(ut_, dxi_);

    NormSet s;
    std::vector<double> a(n);
    auto l2 = [&](const std::vector<double>& f) {
        for (std::size_t i = 0; i < n; ++i) a[i] = f[i] * f[i];
        return numerics::trapezoid(a, dxi_);
    };
    auto linf = [&](const std::vector<double>& f) {
        double m = 0.0;
        for (const double x : f) m = std::max(m, std::abs(x));
        return m;
    };
    s.Linf_v = linf(vt_); s.Linf_u = linf(ut_); s.Linf_phi = linf(phit_);
    const double v0 = l2(vt_), v1 = l2(vtx), v2 = l2(vtxx);
    const double u0 = l2(ut_), u1 = l2(utx), u2 = l2(utxx);
    const double p0 = l2(phit_), p1 = l2(phit_x_), p2 = l2(phit_xx_), p3 = l2(phit_xxx_);
    s.L2_v = std::sqrt(v0); s.L2_u = std::sqrt(u0); s.L2_phi = std::sqrt(p0);
    s.H1_v = std::sqrt(v0 + v1); s.H1_u = std::sqrt(u0 + u1);
    s.H2_v = std::sqrt(v0 + v1 + v2); s.H2_u = std::sqrt(u0 + u1 + u2);
    s.H3_phi = std::sqrt(p0 + p1 + p2 + p3);
    return s;
}

GoodTerms Perturbation::good_terms(double delta_S, double sigma) const {
    const std::size_t n = vt_.size();
    const auto& bar = *bar_;
    const auto dpx = numerics::derivative(dp_, dxi_);

    std::vector<double> g1(n), g2(n), g3(n), gs(n), gr(n), d(n);
    for (std::size_t i = 0; i < n; ++i) {
        g2[i] = phit_xx_[i] * phit_xx_[i];
        g3[i] = phit_xxx_[i] * phit_xxx_[i];
        gs[i] = bar[i].vSx * dp_[i] * dp_[i];
        gr[i] = bar[i].vRx * vt_[i] * vt_[i];
        d[i] = dpx[i] * dpx[i];
        if (delta_S > 0.0) {
            const double w = ht_[i] - dp_[i] / sigma;
            g1[i] = bar[i].vSx * w * w;
        }
    }
    GoodTerms out;
    out.G2 = numerics::trapezoid(g2, dxi_);
    out.G3 = numerics::trapezoid(g3, dxi_);
    out.GS = numerics::trapezoid(gs, dxi_);
    out.GR = numerics::trapezoid(gr, dxi_);
    out.D = numerics::trapezoid(d, dxi_);
    if (delta_S > 0.0) {
        out.G1 = numerics::trapezoid(g1, dxi_) / std::sqrt(delta_S);
    } else {
        out.g1_flagged = true;
    }
    return out;
}

double Perturbation::eta_weighted(std::span<const double> weight) const {
    const std::size_t n = vt_.size();
    if (weight.size() != n)
        throw std::invalid_argument("eta_weighted: weight size mismatch");
    const auto& bar = *bar_;
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) {
        f[i] = weight[i] * eta_pointwise(ht_[i] + bar[i].h, bar[i].h,
                                         vt_[i] + bar[i].v, bar[i].v,
                                         bar[i].phi, phit_x_[i], phit_xx_[i]);
    }
    return numerics::trapezoid(f, dxi_);
}

double elliptic_residual(double dxi, std::span<const double> v,
                         std::span<const double> phi,
                         const shock_profile::ShockProfile& profile) {
    poisson::Problem prob;
    prob.dxi = dxi;
    prob.v.assign(v.begin(), v.end());
    prob.phi_left = phi.front();
    prob.phi_right = phi.back();
    const std::vector<double> phiv(phi.begin(), phi.end());
    double r = poisson::residual_max(prob, phiv);

    if (!profile.constant) {
        poisson::Problem sp;
        sp.dxi = profile.dxi;
        sp.v = profile.v;
        sp.phi_left = profile.phi.front();
        sp.phi_right = profile.phi.back();
        r = std::max(r, poisson::residual_max(sp, profile.phi));
    }
    return r;
}

} // namespace nsplab::functionals
