#include "nsplab/rarefaction.hpp"

#include "nsplab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nsplab::rarefaction {

namespace {
constexpr double kSqrt2 = 1.4142135623730951;

struct Tanh {
    double c, d; // w0(x) = c + d tanh(x), d >= 0

    double value(double x) const { return c + d * std::tanh(x); }
    double deriv(double x) const {
        const double s = 1.0 / std::cosh(x);
        return d * s * s;
    }
    double deriv2(double x) const {
        const double s = 1.0 / std::cosh(x);
        return -2.0 * d * s * s * std::tanh(x);
    }
};

// Characteristic foot: solve x0 + w0(x0) * t = x. A caller-provided guess
// (e.g. the previous root in a sweep) cuts the iteration count sharply.
double invert_characteristic(const Tanh& w0, double t, double x, double tol,
                             double guess = std::numeric_limits<double>::quiet_NaN()) {
    if (t == 0.0) return x;
    if (w0.d == 0.0) return x - w0.c * t;
    // bracket from the range of w0
    double lo = x - (w0.c + w0.d) * t;
    double hi = x - (w0.c - w0.d) * t;
    double x0 = x - w0.c * t; // midpoint characteristic as initial guess
    if (std::isfinite(guess) && guess > lo && guess < hi) x0 = guess;
    for (int it = 0; it < 100; ++it) {
        const double f = x0 + w0.value(x0) * t - x;
        if (std::abs(f) < tol) return x0;
        if (f > 0.0) hi = x0; else lo = x0;
        const double fp = 1.0 + t * w0.deriv(x0); // > 1, no characteristic crossing
        double next = x0 - f / fp;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        x0 = next;
    }
    return x0;
}
} // namespace

double burgers_eval(double w_minus, double w_mid, double t, double x, double tol) {
    if (t < 0.0) throw std::domain_error("burgers_eval: t must be nonnegative");
    const Tanh w0{0.5 * (w_mid + w_minus), 0.5 * (w_mid - w_minus)};
    if (w0.d == 0.0) return w0.c;
    if (t == 0.0) return w0.value(x);
    return w0.value(invert_characteristic(w0, t, x, tol));
}

Point eval(const RarefactionField& field, double t, double x) {
    if (t < 0.0) throw std::domain_error("rarefaction::eval: t must be nonnegative");
    const double w = burgers_eval(field.w_minus, field.w_mid, 1.0 + t, x, field.tol);
    const double v = -kSqrt2 / w;
    const double u = field.fan.u_minus + kSqrt2 * std::log(v / field.fan.v_minus);
    return {v, u, -std::log(v)};
}

std::vector<Sample> sample_many(const RarefactionField& field, double t,
                                std::span<const double> xs) {
    if (t < 0.0) throw std::domain_error("sample_many: t must be nonnegative");
    const double s = 1.0 + t;
    const Tanh w0{0.5 * (field.w_mid + field.w_minus),
                  0.5 * (field.w_mid - field.w_minus)};
    std::vector<Sample> out(xs.size());
    if (w0.d == 0.0) {
        const double v = -kSqrt2 / w0.c;
        const double u = field.fan.u_minus + kSqrt2 * std::log(v / field.fan.v_minus);
        for (auto& o : out) o = {v, u, -std::log(v), 0.0, 0.0};
        return out;
    }
    double guess = std::numeric_limits<double>::quiet_NaN();
    double prev_x = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i];
        if (i > 0) guess += x - prev_x; // roots advance no faster than x
        const double x0 = invert_characteristic(w0, s, x, field.tol, guess);
        guess = x0;
        prev_x = x;
        const double w = w0.value(x0);
        const double D = 1.0 + s * w0.deriv(x0);
        const double wx = w0.deriv(x0) / D;
        const double v = -kSqrt2 / w;
        const double vx = kSqrt2 * wx / (w * w);
        Sample& o = out[i];
        o.v = v;
        o.u = field.fan.u_minus + kSqrt2 * std::log(v / field.fan.v_minus);
        o.phi = -std::log(v);
        o.vx = vx;
        o.ux = kSqrt2 * vx / v;
    }
    return out;
}

namespace {
// Analytic x-derivatives of (v, u) up to second order at (t, x),
// t already offset (the caller passes s = 1 + t).
void analytic_derivs(const RarefactionField& field, double s, double x,
                     double& vx, double& ux, double& vxx, double& uxx) {
    const Tanh w0{0.5 * (field.w_mid + field.w_minus),
                  0.5 * (field.w_mid - field.w_minus)};
    if (w0.d == 0.0) { vx = ux = vxx = uxx = 0.0; return; }
    const double x0 = invert_characteristic(w0, s, x, field.tol);
    const double w = w0.value(x0);
    const double D = 1.0 + s * w0.deriv(x0);
    const double wx = w0.deriv(x0) / D;
    const double wxx = w0.deriv2(x0) / (D * D * D);
    const double v = -kSqrt2 / w;
    vx = kSqrt2 * wx / (w * w);
    vxx = kSqrt2 * (wxx / (w * w) - 2.0 * wx * wx / (w * w * w));
    ux = kSqrt2 * vx / v;
    uxx = kSqrt2 * (vxx * v - vx * vx) / (v * v);
}
} // namespace

Derivatives derivatives(const RarefactionField& field, double t, double x,
                        int order) {
    if (order < 1 || order > 3)
        throw std::invalid_argument("rarefaction::derivatives: order must be 1, 2 or 3");
    if (t < 0.0) throw std::domain_error("rarefaction::derivatives: t must be nonnegative");
    Derivatives d;
    const double s = 1.0 + t;
    double vxx, uxx;
    analytic_derivs(field, s, x, d.vx[0], d.ux[0], vxx, uxx);
    if (order >= 2) { d.vx[1] = vxx; d.ux[1] = uxx; }
    if (order == 3) {
        const double h = 1e-4;
        double vxl, uxl, vxxl, uxxl, vxr, uxr, vxxr, uxxr;
        analytic_derivs(field, s, x - h, vxl, uxl, vxxl, uxxl);
        analytic_derivs(field, s, x + h, vxr, uxr, vxxr, uxxr);
        d.vx[2] = (vxxr - vxxl) / (2.0 * h);
        d.ux[2] = (uxxr - uxxl) / (2.0 * h);
    }
    return d;
}

DecayReport verify_decay(const RarefactionField& field,
                         const std::vector<double>& times, double p) {
    if (times.empty())
        throw std::invalid_argument("verify_decay: times must be nonempty");
    DecayReport rep;
    rep.p = p;
    rep.times = times;

    std::vector<double> tv;
    for (const double t : times) {
        const double s = 1.0 + t;
        const double lo = field.w_minus * s - 25.0;
        const double hi = field.w_mid * s + 25.0;
        const double dx = 0.01;
        const auto n = static_cast<std::size_t>((hi - lo) / dx) + 1;
        std::vector<double> a1(n), a2(n), absvx(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = lo + dx * static_cast<double>(i);
            const Derivatives d = derivatives(field, t, x, 2);
            a1[i] = std::max(std::abs(d.vx[0]), std::abs(d.ux[0]));
            a2[i] = std::max(std::abs(d.vx[1]), std::abs(d.ux[1]));
            absvx[i] = std::abs(d.vx[0]);
        }
        auto norm = [&](std::vector<double>& a) {
            if (p == 1.0) return numerics::trapezoid(a, dx);
            if (std::isinf(p)) return *std::max_element(a.begin(), a.end());
            for (double& x : a) x = std::pow(x, p);
            return std::pow(numerics::trapezoid(a, dx), 1.0 / p);
        };
        tv.push_back(numerics::trapezoid(absvx, dx));
        rep.norm_first.push_back(norm(a1));
        rep.norm_second.push_back(norm(a2));
    }
    rep.tv_min = *std::min_element(tv.begin(), tv.end());
    rep.tv_max = *std::max_element(tv.begin(), tv.end());

    if (times.size() >= 2) {
        std::vector<double> lt, l1, l2;
        for (std::size_t i = 0; i < times.size(); ++i) {
            lt.push_back(std::log(1.0 + times[i]));
            l1.push_back(std::log(std::max(rep.norm_first[i], 1e-300)));
            l2.push_back(std::log(std::max(rep.norm_second[i], 1e-300)));
        }
        const auto f1 = numerics::fit_line(lt, l1);
        const auto f2 = numerics::fit_line(lt, l2);
        rep.fitted_exponent_first = f1.slope;
        rep.fitted_exponent_second = f2.slope;
        rep.fitted_constant_first = std::exp(f1.intercept);
    }

    // exponential tail beyond the right fan edge, at the last requested time
    {
        const double t = times.back();
        const double edge = field.w_mid * (1.0 + t);
        double c = 0.0;
        for (double x = edge; x <= edge + 15.0; x += 0.05) {
            const Point pt = eval(field, t, x);
            c = std::max(c, std::abs(pt.v - field.fan.v_mid) * std::exp(2.0 * (x - edge)));
        }
        rep.tail_constant = c;
    }
    return rep;
}

} // namespace nsplab::rarefaction
