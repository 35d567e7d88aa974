#include "nsplab/shift.hpp"

#include "nsplab/numerics.hpp"

#include <cmath>
#include <vector>

namespace nsplab::shift {

double method_constant(double c0, double v_mid) {
    return 5.0 * std::sqrt(2.0) * c0 / (8.0 * v_mid * v_mid);
}

double method_constant_alt(double c0, double v_mid) {
    const double sigma_m = std::sqrt(-thermo::modified_pressure_d(v_mid));
    const double alpha_m = 1.0 / (sigma_m * thermo::modified_pressure(v_mid));
    return 5.0 * c0 * sigma_m * sigma_m * sigma_m * sigma_m * alpha_m / 8.0;
}

double weight(const shock_profile::ShockProfile& profile, double delta_S,
              double xi_shifted) {
    if (delta_S <= 0.0 || profile.constant) return 1.0;
    const auto s = profile.eval(xi_shifted);
    return 1.0 + (thermo::modified_pressure(profile.fan.v_mid) -
                  thermo::modified_pressure(s.v)) / std::sqrt(delta_S);
}

double shift_rhs(std::span<const double> xi, double dxi,
                 std::span<const double> v,
                 const composite::CompositeWave& wave, double t,
                 const ShiftState& state) {
    if (!state.enabled || state.delta_S <= 0.0) return 0.0;

    const double sigma = wave.fan.sigma;
    const auto bar = wave.eval_many(t, state.X, xi);
    std::vector<double> f1(xi.size()), f2(xi.size());
    for (std::size_t i = 0; i < xi.size(); ++i) {
        const auto& w = bar[i];
        const double a = 1.0 + (thermo::modified_pressure(wave.fan.v_mid) -
                                thermo::modified_pressure(w.vS)) /
                                   std::sqrt(state.delta_S);
        const double dp = thermo::modified_pressure(v[i]) -
                          thermo::modified_pressure(w.v);
        f1[i] = a * w.hSx * dp / sigma;
        f2[i] = a * thermo::modified_pressure_d(w.vS) * w.vSx * (v[i] - w.v);
    }
    const double I1 = numerics::trapezoid(f1, dxi);
    const double I2 = numerics::trapezoid(f2, dxi);
    return -(state.M / state.delta_S) * (I1 - I2);
}

} // namespace nsplab::shift
