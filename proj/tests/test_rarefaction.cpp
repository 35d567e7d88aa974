#include <doctest.h>

#include "nsplab/rarefaction.hpp"
#include "nsplab/thermo.hpp"

#include <cmath>
#include <vector>

using namespace nsplab;
using rarefaction::RarefactionField;

namespace {
thermo::RiemannFan reference_fan() {
    return thermo::solve_riemann(1.0, 0.0, 1.2, 0.011697457932161747);
}
} // namespace

TEST_CASE("Burgers data and characteristic identity") {
    const double wm = -1.4142135623730951, w0 = -1.2856486930664500;
    SUBCASE("t = 0 reproduces the tanh data") {
        for (double x : {-3.0, -0.5, 0.0, 0.7, 4.0}) {
            const double expected =
                0.5 * (w0 + wm) + 0.5 * (w0 - wm) * std::tanh(x);
            CHECK(rarefaction::burgers_eval(wm, w0, 0.0, x) ==
                  doctest::Approx(expected).epsilon(1e-14));
        }
    }
    SUBCASE("constant data stays constant") {
        CHECK(rarefaction::burgers_eval(wm, wm, 3.7, 1.9) ==
              doctest::Approx(wm).epsilon(1e-15));
    }
    SUBCASE("solution is constant along characteristics") {
        for (double x0 : {-2.0, 0.0, 1.5}) {
            const double t = 6.0;
            const double w_init =
                0.5 * (w0 + wm) + 0.5 * (w0 - wm) * std::tanh(x0);
            const double x = x0 + w_init * t;
            CHECK(rarefaction::burgers_eval(wm, w0, t, x) ==
                  doctest::Approx(w_init).epsilon(1e-11));
        }
    }
}

TEST_CASE("field endpoints and the 1-Riemann-invariant identity") {
    const RarefactionField field(reference_fan());
    SUBCASE("far states") {
        const auto left = rarefaction::eval(field, 2.0, -1e3);
        const auto right = rarefaction::eval(field, 2.0, 1e3);
        CHECK(left.v == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(left.u == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
        CHECK(right.v == doctest::Approx(1.1).epsilon(1e-10));
        CHECK(right.u == doctest::Approx(0.13478894891149448).epsilon(1e-10));
        CHECK(right.phi == doctest::Approx(-std::log(1.1)).epsilon(1e-10));
    }
    SUBCASE("u_x = sqrt(2) v_x / v pointwise inside the fan") {
        for (double x : {-1.0, 0.0, 1.0, 2.5}) {
            const auto p = rarefaction::eval(field, 1.5, x);
            const auto d = rarefaction::derivatives(field, 1.5, x, 1);
            CHECK(p.v * d.ux[0] ==
                  doctest::Approx(std::sqrt(2.0) * d.vx[0]).epsilon(1e-10));
        }
    }
}

TEST_CASE("analytic derivatives match finite differences") {
    const RarefactionField field(reference_fan());
    const double t = 3.0, h = 1e-5;
    for (double x : {-0.8, 0.4, 2.0}) {
        const auto d = rarefaction::derivatives(field, t, x, 2);
        const auto pl = rarefaction::eval(field, t, x - h);
        const auto pr = rarefaction::eval(field, t, x + h);
        const auto pc = rarefaction::eval(field, t, x);
        CHECK(d.vx[0] ==
              doctest::Approx((pr.v - pl.v) / (2 * h)).epsilon(1e-7));
        CHECK(d.ux[0] ==
              doctest::Approx((pr.u - pl.u) / (2 * h)).epsilon(1e-7));
        CHECK(d.vx[1] ==
              doctest::Approx((pr.v - 2 * pc.v + pl.v) / (h * h)).epsilon(1e-4));
    }
}

TEST_CASE("batched sweep agrees with pointwise evaluation") {
    const RarefactionField field(reference_fan());
    const double t = 12.0;
    std::vector<double> xs;
    for (double x = -40.0; x <= 40.0; x += 0.37) xs.push_back(x);
    const auto batch = rarefaction::sample_many(field, t, xs);
    REQUIRE(batch.size() == xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto p = rarefaction::eval(field, t, xs[i]);
        const auto d = rarefaction::derivatives(field, t, xs[i], 1);
        CHECK(batch[i].v == doctest::Approx(p.v).epsilon(1e-11));
        CHECK(batch[i].u == doctest::Approx(p.u).epsilon(1e-11));
        CHECK(batch[i].phi == doctest::Approx(p.phi).epsilon(1e-11));
        CHECK(batch[i].vx ==
              doctest::Approx(d.vx[0]).scale(1.0).epsilon(1e-10));
        CHECK(batch[i].ux ==
              doctest::Approx(d.ux[0]).scale(1.0).epsilon(1e-10));
    }
}

TEST_CASE("max slope of w follows d / (1 + t d)") {
    // For tanh data the Burgers max slope is exactly t -> d/(1 + t d) with
    // d half the data jump; v inherits it up to the 1/w^2 factor.
    const double wm = -1.4142135623730951, w0 = -1.2856486930664500;
    const double d = 0.5 * (w0 - wm);
    for (double t : {0.0, 4.0, 20.0}) {
        const double s = t;
        double max_slope = 0.0;
        const double h = 1e-4;
        for (double x = wm * (1.0 + s) - 8.0; x <= w0 * (1.0 + s) + 8.0; x += 0.01) {
            const double wl = rarefaction::burgers_eval(wm, w0, t, x - h);
            const double wr = rarefaction::burgers_eval(wm, w0, t, x + h);
            max_slope = std::max(max_slope, (wr - wl) / (2 * h));
        }
        CHECK(max_slope == doctest::Approx(d / (1.0 + s * d)).epsilon(1e-4));
    }
}

TEST_CASE("decay report: first derivatives shrink, tail is exponential") {
    const RarefactionField field(reference_fan());
    const auto rep = rarefaction::verify_decay(field, {0.0, 10.0, 40.0}, 2.0);
    REQUIRE(rep.norm_first.size() == 3);
    CHECK(rep.norm_first[2] < rep.norm_first[0]);
    CHECK(rep.norm_second[2] < rep.norm_second[0]);
    // the fitted L2 rate heads toward -(1 - 1/p) = -1/2; at this small
    // amplitude (d t ~ 2.6 at t = 40) only the onset of the decay is visible
    CHECK(rep.fitted_exponent_first < -0.05);
    CHECK(rep.fitted_exponent_second < rep.fitted_exponent_first);
    // total variation of v is conserved by the exact solution
    CHECK(rep.tv_max / rep.tv_min < 1.01);
    CHECK(rep.tail_constant < 10.0);
}
