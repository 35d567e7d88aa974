import math

import pytest

import nsplab


def test_version():
    assert nsplab.__version__


def test_riemann_solver():
    fan = nsplab.solve_riemann(1.0, 0.0, 1.2, 0.011697457932161747)
    assert fan.v_mid == pytest.approx(1.1, abs=1e-9)
    assert fan.sigma == pytest.approx(math.sqrt(2.0 / 1.32), abs=1e-9)
    assert fan.delta_R == pytest.approx(0.1, abs=1e-9)
    assert fan.delta_S == pytest.approx(0.1, abs=1e-9)


def test_wave_curves():
    assert nsplab.modified_pressure(2.0) == 1.0
    assert nsplab.lambda2(1.0) == pytest.approx(math.sqrt(2.0), abs=1e-15)
    assert nsplab.r1_velocity(1.0, 0.0, 1.1) == pytest.approx(
        math.sqrt(2.0) * math.log(1.1), abs=1e-15
    )
    assert nsplab.s2_velocity(1.0, 0.0, 1.2) == pytest.approx(
        -math.sqrt(0.2 * (2.0 - 2.0 / 1.2)), abs=1e-15
    )


def test_shock_profile():
    fan = nsplab.solve_riemann(1.0, 0.0, 1.2, 0.011697457932161747)
    prof = nsplab.solve_profile(fan)
    v, u, phi, h = prof.eval(0.0)
    assert v == pytest.approx(0.5 * (fan.v_mid + fan.v_plus), abs=1e-9)
    assert nsplab.profile_residual(prof) < 1e-7
    v_left, _, _, _ = prof.eval(-1e4)
    v_right, _, _, _ = prof.eval(1e4)
    assert v_left == pytest.approx(fan.v_mid, abs=1e-7)
    assert v_right == pytest.approx(fan.v_plus, abs=1e-7)


def test_rarefaction_field():
    fan = nsplab.solve_riemann(1.0, 0.0, 1.2, 0.011697457932161747)
    field = nsplab.RarefactionField(fan)
    v, u, phi = field.eval(1.0, -1e3)
    assert v == pytest.approx(1.0, abs=1e-8)
    assert u == pytest.approx(0.0, abs=1e-8)
    v, u, phi = field.eval(1.0, 1e3)
    assert v == pytest.approx(fan.v_mid, abs=1e-8)
    assert phi == pytest.approx(-math.log(fan.v_mid), abs=1e-8)


def test_poisson_solver():
    n = 201
    phi = nsplab.solve_poisson(0.05, [1.0] * n, 0.0, 0.0)
    assert max(abs(p) for p in phi) < 1e-12


def test_relative_functionals():
    assert nsplab.relative_Q(2.0, 1.0) == pytest.approx(
        2.0 - 2.0 * math.log(2.0), abs=1e-14
    )
    assert nsplab.relative_pressure(2.0, 1.0) == pytest.approx(1.0, abs=1e-14)
    assert nsplab.relative_Q(1.3, 1.3) == 0.0
