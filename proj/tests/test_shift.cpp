#include <doctest.h>

#include "nsplab/shift.hpp"

#include <cmath>
#include <vector>

using namespace nsplab;

namespace {
thermo::RiemannFan reference_fan() {
    return thermo::solve_riemann(1.0, 0.0, 1.2, 0.011697457932161747);
}
} // namespace

TEST_CASE("method constant: frozen value and algebraic equivalence") {
    // 5 sqrt(2) / (8 * 1.1^2)
    CHECK(shift::method_constant(1.0, 1.1) ==
          doctest::Approx(0.73048221196957389).epsilon(1e-14));
    for (double v : {0.5, 1.0, 1.1, 2.0, 7.3})
        for (double c0 : {0.25, 1.0, 4.0})
            CHECK(shift::method_constant(c0, v) ==
                  doctest::Approx(shift::method_constant_alt(c0, v)).epsilon(1e-13));
    // scales linearly in c0
    CHECK(shift::method_constant(3.0, 1.1) ==
          doctest::Approx(3.0 * shift::method_constant(1.0, 1.1)).epsilon(1e-14));
}

TEST_CASE("weight: limits and monotone range") {
    const auto fan = reference_fan();
    const auto prof = shock_profile::solve_profile(fan);

    CHECK(shift::weight(prof, fan.delta_S, -1e4) ==
          doctest::Approx(1.0).epsilon(1e-7));
    // right limit frozen: 1 + (2/1.1 - 2/1.2)/sqrt(0.1)
    CHECK(shift::weight(prof, fan.delta_S, 1e4) ==
          doctest::Approx(1.4791329788133908).epsilon(1e-6));

    double prev = shift::weight(prof, fan.delta_S, -60.0);
    for (double xi = -59.0; xi <= 60.0; xi += 1.0) {
        const double a = shift::weight(prof, fan.delta_S, xi);
        CHECK(a >= prev - 1e-12); // inherits the profile's monotonicity
        CHECK(a >= 1.0 - 1e-12);
        prev = a;
    }

    CHECK(shift::weight(prof, 0.0, 3.0) == 1.0);
}

TEST_CASE("shift state wiring") {
    const auto fan = reference_fan();
    shift::ShiftState st(2.0, fan);
    CHECK(st.enabled);
    CHECK(st.delta_S == doctest::Approx(fan.delta_S).epsilon(1e-12));
    CHECK(st.M == doctest::Approx(shift::method_constant(2.0, fan.v_mid)).epsilon(1e-14));
    CHECK(st.X == 0.0);
}

TEST_CASE("shift rate vanishes on the unperturbed composite wave") {
    const auto fan = reference_fan();
    const auto prof = shock_profile::solve_profile(fan);
    const composite::CompositeWave wave(fan, prof);

    std::vector<double> xi, v;
    const double dxi = 0.1;
    for (double x = -60.0; x <= 60.0 + 1e-9; x += dxi) xi.push_back(x);
    const double t = 2.0;
    const shift::ShiftState st(1.0, fan);
    const auto bar = wave.eval_many(t, st.X, xi);
    v.resize(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) v[i] = bar[i].v;

    CHECK(shift::shift_rhs(xi, dxi, v, wave, t, st) ==
          doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("shift rate is linear in an infinitesimal density perturbation") {
    const auto fan = reference_fan();
    const auto prof = shock_profile::solve_profile(fan);
    const composite::CompositeWave wave(fan, prof);

    std::vector<double> xi;
    const double dxi = 0.1;
    for (double x = -60.0; x <= 60.0 + 1e-9; x += dxi) xi.push_back(x);
    const shift::ShiftState st(1.0, fan);
    const auto bar = wave.eval_many(0.0, 0.0, xi);

    auto rate = [&](double eps) {
        std::vector<double> v(xi.size());
        for (std::size_t i = 0; i < xi.size(); ++i)
            v[i] = bar[i].v + eps * std::exp(-xi[i] * xi[i] / 8.0);
        return shift::shift_rhs(xi, dxi, v, wave, 0.0, st);
    };
    const double r1 = rate(1e-3), r2 = rate(5e-4);
    CHECK(r1 != 0.0);
    CHECK(r1 / r2 == doctest::Approx(2.0).epsilon(1e-3));
}

TEST_CASE("shift rate is zero when the shock amplitude is zero") {
    const auto fan =
        thermo::solve_riemann(1.0, 0.0, 1.2, thermo::r1_velocity(1.0, 0.0, 1.2));
    const auto prof = shock_profile::solve_profile(fan);
    const composite::CompositeWave wave(fan, prof);
    std::vector<double> xi{-1.0, 0.0, 1.0}, v{1.0, 1.3, 1.2};
    const shift::ShiftState st(1.0, fan);
    CHECK(!st.enabled);
    CHECK(shift::shift_rhs(xi, 1.0, v, wave, 0.0, st) == 0.0);
}
