#include <doctest.h>

#include "nsplab/thermo.hpp"

#include <cmath>
#include <stdexcept>

using namespace nsplab::thermo;

TEST_CASE("pressure laws") {
    CHECK(pressure(2.0) == 0.5);
    CHECK(modified_pressure(2.0) == 1.0);
    CHECK(modified_pressure_d(2.0) == -0.5);
    CHECK(modified_pressure_dd(2.0) == 0.5);
    CHECK(modified_pressure(1.0) == 2.0);
}

TEST_CASE("eigenvalues") {
    // frozen: sqrt(2)/1.2 and sqrt(2)/1.1
    CHECK(lambda2(1.2) == doctest::Approx(1.1785113019775792).epsilon(1e-15));
    CHECK(lambda2(1.1) == doctest::Approx(1.2856486930664500).epsilon(1e-15));
    CHECK(lambda1(1.1) == doctest::Approx(-1.2856486930664500).epsilon(1e-15));
    CHECK(eigenvalues(1.0).lambda2 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("wave-curve velocities, frozen values") {
    // sqrt(2) ln(1.1)
    CHECK(r1_velocity(1.0, 0.0, 1.1) ==
          doctest::Approx(0.13478894891149448).epsilon(1e-15));
    // -sqrt(0.2 * (2 - 2/1.2))
    CHECK(s2_velocity(1.0, 0.0, 1.2) ==
          doctest::Approx(-0.25819888974716110).epsilon(1e-15));
    CHECK(r1_velocity(1.0, 0.0, 1.0) == 0.0);
    CHECK(s2_velocity(1.0, 0.0, 1.0) == 0.0);
}

TEST_CASE("shock speed and Lax condition") {
    const double u_mid = r1_velocity(1.0, 0.0, 1.1);
    const double u_plus = u_mid + s2_velocity(1.1, 0.0, 1.2);
    // frozen: sqrt(2 / (1.1 * 1.2))
    const double sigma = shock_speed(1.1, u_mid, 1.2, u_plus);
    CHECK(sigma == doctest::Approx(1.2309149097933273).epsilon(1e-14));
    CHECK(lambda2(1.2) < sigma);
    CHECK(sigma < lambda2(1.1));
    // a state off the shock curve must be rejected
    CHECK_THROWS_AS((void)shock_speed(1.1, u_mid, 1.2, u_plus + 1e-3),
                    std::invalid_argument);
}

TEST_CASE("Riemann solver recovers the frozen reference fan") {
    const double u_mid = 0.13478894891149448;
    const double u_plus = 0.011697457932161747; // u_mid + S2 drop, closed form
    const auto fan = solve_riemann(1.0, 0.0, 1.2, u_plus);
    CHECK(fan.v_mid == doctest::Approx(1.1).epsilon(1e-11));
    CHECK(fan.u_mid == doctest::Approx(u_mid).epsilon(1e-11));
    CHECK(fan.sigma == doctest::Approx(1.2309149097933273).epsilon(1e-10));
    CHECK(fan.delta_R == doctest::Approx(0.1).epsilon(1e-10));
    CHECK(fan.delta_S == doctest::Approx(0.1).epsilon(1e-10));
    CHECK(fan.phi_mid == doctest::Approx(-std::log(1.1)).epsilon(1e-10));
    CHECK(!fan.degenerate_rarefaction);
    CHECK(!fan.degenerate_shock);
}

TEST_CASE("degenerate fans") {
    SUBCASE("pure rarefaction: u_plus on the R1 curve") {
        const auto fan = solve_riemann(1.0, 0.0, 1.2, r1_velocity(1.0, 0.0, 1.2));
        CHECK(fan.v_mid == doctest::Approx(1.2).epsilon(1e-9));
        CHECK(fan.delta_S == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
        CHECK(fan.degenerate_shock);
        // Lax limit: sigma -> lambda2(v_mid)
        CHECK(fan.sigma == doctest::Approx(lambda2(fan.v_mid)).epsilon(1e-8));
    }
    SUBCASE("pure shock: u_plus on the S2 curve") {
        const auto fan = solve_riemann(1.0, 0.0, 1.2, s2_velocity(1.0, 0.0, 1.2));
        CHECK(fan.v_mid == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(fan.delta_R == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
        CHECK(fan.degenerate_rarefaction);
    }
}

TEST_CASE("admissible-data membership") {
    CHECK(gamma_membership(1.0, 0.0, 1.2, 0.011697, 1.0).member);
    // v_plus below v_minus
    CHECK(!gamma_membership(1.0, 0.0, 0.9, 0.0, 1.0).member);
    // amplitude at or above delta0
    CHECK(!gamma_membership(1.0, 0.0, 2.1, 0.0, 1.0).member);
    // u_plus above the rarefaction bound
    CHECK(!gamma_membership(1.0, 0.0, 1.2, 1.0, 1.0).member);
    // u_plus below the shock bound
    CHECK(!gamma_membership(1.0, 0.0, 1.2, -1.0, 1.0).member);
    // boundary data (pure shock) is accepted
    CHECK(gamma_membership(1.0, 0.0, 1.2, s2_velocity(1.0, 0.0, 1.2), 1.0).member);
    CHECK(!gamma_membership(1.0, 0.0, 0.9, 0.0, 1.0).reason.empty());
}
