#include "nsplab/composite.hpp"

#include <cmath>

namespace nsplab::composite {

namespace {

Point assemble(const thermo::RiemannFan& fan, double vR, double uR, double vRx,
               double uRx, const shock_profile::ShockProfile::Point& s) {
    Point p;
    p.vR = vR; p.uR = uR; p.vRx = vRx; p.uRx = uRx;
    p.vS = s.v; p.uS = s.u; p.phiS = s.phi; p.hS = s.h;
    p.vSx = s.vp; p.uSx = s.up; p.phiSx = s.phip; p.hSx = s.hp; p.vSxx = s.vpp;

    p.v = vR + s.v - fan.v_mid;
    p.u = uR + s.u - fan.u_mid;
    p.phi = -std::log(vR) + s.phi - fan.phi_mid;
    p.h = uR + s.h - fan.u_mid;

    const double phiRx = -vRx / vR; // phiR = -ln vR
    p.vx = vRx + s.vp;
    p.ux = uRx + s.up;
    p.phix = phiRx + s.phip;
    p.hx = uRx + s.hp;
    return p;
}

} // namespace

Point CompositeWave::eval(double t, double X, double xi) const {
    const double x = xi + fan.sigma * t; // static-frame position for the rarefaction
    const auto r = rarefaction::eval(rare, t, x);
    const auto rd = rarefaction::derivatives(rare, t, x, 1);
    const auto s = prof.eval(xi - X);
    return assemble(fan, r.v, r.u, rd.vx[0], rd.ux[0], s);
}

std::vector<Point> CompositeWave::eval_many(double t, double X,
                                            std::span<const double> xi) const {
    std::vector<double> x(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) x[i] = xi[i] + fan.sigma * t;
    const auto r = rarefaction::sample_many(rare, t, x);
    std::vector<Point> out(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i)
        out[i] = assemble(fan, r[i].v, r[i].u, r[i].vx, r[i].ux,
                          prof.eval(xi[i] - X));
    return out;
}

} // namespace nsplab::composite
