import math

import numpy as np
import pytest

import oracles
from rhverify import zeta as zmod
from rhverify.errors import ParamsInsufficient, PoleAtOne, ZeroOnPath
from rhverify.zeta import (
    EULER_GAMMA, ZetaParams, log_zeta_sminus1_quotient, log_zeta_times_zminus1_tracked,
    log_zeta_tracked, psi_three_halves, tracked_log_values, zeta, zeta_times_sminus1,
)


def test_zeta_two_and_zero():
    assert abs(zeta(2.0) - math.pi ** 2 / 6) < 1e-12
    assert abs(zeta(0.0) + 0.5) < 1e-12


def test_zeta_175_against_brute_force_bracket():
    lo, hi = oracles.brute_force_zeta_bracket(1.75, 10 ** 6)
    v = zeta(1.75)
    assert abs(v.imag) == 0.0
    assert lo <= v.real <= hi
    assert abs(v.real - oracles.ZETA_175) < 1e-13


def test_zeta_small_at_first_zero(catalog):
    t1 = float(catalog.values[0])
    assert abs(t1 - 14.134725) < 1e-6
    assert abs(zeta(0.5 + 1j * t1)) < 1e-5
    assert abs(zeta(0.5 + 14.134725j)) < 1e-5


def test_zeta_frozen_complex_values():
    assert abs(zeta(0.25 + 14j) - oracles.ZETA_QUARTER_14) < 1e-12
    assert abs(zeta_times_sminus1(0.75 + 50j) - oracles.ZETA_075_50_TIMES) < 1e-11


def test_zeta_matches_mpmath_on_random_points():
    rng = np.random.default_rng(7)
    s = rng.uniform(0.05, 3.0, 40) + 1j * rng.uniform(-1200, 1200, 40)
    got = zeta(s)
    for si, gi in zip(s, got):
        # Truncation is below 1e-12; rounding in the direct sum adds a few 1e-13.
        assert abs(gi - oracles.mp_zeta(si)) < 2e-12


def test_zeta_array_shape_and_scalar():
    s = np.array([[2.0, 3.0], [0.5 + 10j, 4.0]])
    out = zeta(s)
    assert out.shape == (2, 2)
    assert isinstance(zeta(2.0), complex)


def test_pole_and_domain():
    with pytest.raises(PoleAtOne):
        zeta(1.0)
    with pytest.raises(PoleAtOne):
        zeta(np.array([2.0, 1.0]))
    with pytest.raises(ValueError):
        zeta(-1.5)
    assert abs(zeta_times_sminus1(1.0) - 1.0) < 1e-14


def test_params_insufficient():
    tight = ZetaParams(n_terms=2, bernoulli_order=1, target_abs_error=1e-15)
    with pytest.raises(ParamsInsufficient):
        zeta(0.5 + 5j, tight)


def test_params_validation():
    with pytest.raises(ValueError):
        ZetaParams(n_terms=1)
    with pytest.raises(ValueError):
        ZetaParams(bernoulli_order=0)
    with pytest.raises(ValueError):
        ZetaParams(bernoulli_order=26)
    with pytest.raises(ValueError):
        ZetaParams(target_abs_error=0.0)


def test_conjugate_symmetry():
    rng = np.random.default_rng(3)
    s = rng.uniform(0.1, 3.0, 200) + 1j * rng.uniform(0, 1000, 200)
    assert np.max(np.abs(zeta(np.conj(s)) - np.conj(zeta(s)))) < 1e-13


def test_doubling_n_terms_is_invisible():
    sig = np.linspace(0.25, 3.0, 10)
    t = np.linspace(-1000, 1000, 10)
    s = (sig[:, None] + 1j * t[None, :]).ravel()
    base = ZetaParams()
    wide = ZetaParams(n_terms=2 * max(base.n_terms, 1000))
    assert s.size == 100
    assert np.max(np.abs(zeta(s, base) - zeta(s, wide))) < base.target_abs_error


def test_h_quotient_continuity_at_one():
    x = np.array([0.6, 0.999, 0.9995, 1.0, 1.0005, 1.001, 1.5, 3.0])
    assert np.allclose(log_zeta_sminus1_quotient(x), oracles.h_oracle(x), rtol=0, atol=1e-12)
    assert log_zeta_sminus1_quotient(1.0) == EULER_GAMMA


def test_psi_three_halves():
    v = psi_three_halves()
    assert abs(v - oracles.PSI_THREE_HALVES) < 1e-15
    assert abs(v - (2 - 2 * math.log(2) - EULER_GAMMA)) < 1e-15
    assert abs(v + EULER_GAMMA + 2 * math.log(0.5) - (2 - 4 * math.log(2))) < 1e-15
    assert abs(v - 2 + 2 * math.log(2) + EULER_GAMMA) < 1e-15


# -- tracked logarithms ------------------------------------------------------

def test_tracked_log_real_axis():
    v = log_zeta_tracked(2.0, 0.0)
    assert v.value.imag == 0.0
    assert abs(v.value.real - math.log(math.pi ** 2 / 6)) < 1e-13
    w = log_zeta_times_zminus1_tracked(2.0, 0.0)
    assert abs(w.value - math.log(math.pi ** 2 / 6)) < 1e-13


def test_tracked_log_principal_right_of_two():
    v = log_zeta_tracked(2.0, 10.0)
    assert abs(v.value.imag - np.angle(zeta(2 + 10j))) < 1e-13
    assert v.windings == 0


@pytest.mark.parametrize("sigma,t", [(0.25, 14.0), (0.75, 50.0), (0.5, 100.0), (0.1, 700.0)])
def test_exp_log_identity(sigma, t):
    v = log_zeta_tracked(sigma, t).value
    z = zeta(sigma + 1j * t)
    assert abs(np.exp(v) - z) <= 1e-10 * abs(z)


def test_tracked_times_factor_example():
    w = log_zeta_times_zminus1_tracked(0.75, 50.0)
    assert abs(np.exp(w.value) - oracles.ZETA_075_50_TIMES) < 1e-10 * abs(oracles.ZETA_075_50_TIMES)


def test_tracked_times_factor_near_one():
    for eps in (1e-2, 1e-4, 1e-6):
        assert abs(log_zeta_times_zminus1_tracked(1.0 + eps, 0.0).value) < 1.2 * eps
        assert abs(log_zeta_times_zminus1_tracked(1.0 - eps, 0.0).value) < 1.2 * eps


def test_tracked_log_differs_from_principal_by_whole_turns():
    t = np.linspace(5000.0, 5010.0, 200)
    v = tracked_log_values(0.3, t)
    principal = np.angle(zeta(0.3 + 1j * t))
    k = (v.imag - principal) / (2 * math.pi)
    assert np.allclose(k, np.round(k), atol=1e-8)


def test_anchor_independence():
    for s, t in [(0.5, 30.0), (0.25, 137.3), (0.75, 500.0)]:
        base = log_zeta_tracked(s, t).value
        for start in (3.0, 6.0, 10.0):
            other = log_zeta_tracked(s, t, start_sigma=start).value
            assert abs(other - base) < 1e-10


def test_step_size_independence(monkeypatch):
    pts = [(0.5, 30.0), (0.1, 222.2), (0.75, 999.0)]
    coarse = [log_zeta_tracked(s, t).value for s, t in pts]
    monkeypatch.setattr(zmod, "_INITIAL_STEP", 0.02)
    fine = [log_zeta_tracked(s, t).value for s, t in pts]
    for c, f in zip(coarse, fine):
        assert abs(c - f) < 1e-10


def test_branch_continuity_along_path():
    # Consecutive values along a horizontal path never jump by pi/2.
    t = 250.0
    sig = np.linspace(3.0, 0.05, 300)
    vals = np.array([log_zeta_tracked(s, t).value for s in sig])
    assert np.max(np.abs(np.diff(vals.imag))) < math.pi / 2


def test_vectorised_matches_scalar():
    t = np.array([3.0, 40.0, 300.0])
    vec = tracked_log_values(0.3, t)
    for ti, vi in zip(t, vec):
        assert abs(log_zeta_tracked(0.3, ti).value - vi) < 1e-12


def test_zero_on_path_guard(catalog):
    t1 = float(catalog.values[0])
    ords = catalog.values[:5]
    with pytest.raises(ZeroOnPath):
        log_zeta_tracked(0.25, t1, zero_ordinates=ords)
    up = log_zeta_tracked(0.25, t1, zero_ordinates=ords, side=+1)
    down = log_zeta_tracked(0.25, t1, zero_ordinates=ords, side=-1)
    assert (up.side, down.side) == (1, -1)
    # Passing above or below a simple zero differs by one full turn.
    assert abs(abs(up.value.imag - down.value.imag) - 2 * math.pi) < 1e-5
    # Right of the zero the guard does not apply.
    assert log_zeta_tracked(0.75, t1, zero_ordinates=ords).side == 0


def test_pole_on_path_guard():
    with pytest.raises(ZeroOnPath):
        log_zeta_tracked(0.5, 0.0)
    # The (z - 1) factor removes the pole: no guard needed.
    assert log_zeta_times_zminus1_tracked(0.5, 0.0).side == 0


def test_sigma_must_be_positive():
    with pytest.raises(ValueError):
        log_zeta_tracked(0.0, 10.0)
