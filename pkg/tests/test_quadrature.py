import math
import warnings

import numpy as np
import pytest

import oracles
from rhverify.errors import MaxSubdivisions
from rhverify.quadrature import (
    INVERSE_SQRT, LOGARITHMIC, PANEL_BUDGET_ENV, REMOVABLE, SingularityHint, _initial_panels,
    integrate_finite, integrate_semi_infinite, integrate_symmetric_line, panel_budget,
)
from rhverify.zeta import log_zeta_sminus1_quotient, zeta


def test_arctan_closed_form():
    res = integrate_finite(lambda t: 1.0 / (1.0 + t * t), 0.0, 1.0, 1e-12)
    assert abs(res.value - math.pi / 4) < 1e-12
    assert res.converged


def test_log_with_interior_hint():
    res = integrate_finite(lambda t: np.log(np.abs(t)), -1.0, 1.0, 1e-12,
                           hints=[SingularityHint(0.0, LOGARITHMIC)])
    assert abs(res.value + 2.0) < 1e-11


def test_inverse_sqrt_left_hint():
    res = integrate_finite(lambda s: 1.0 / np.sqrt(s - 1.0), 1.0, 2.0, 1e-12,
                           hints=[SingularityHint(1.0, INVERSE_SQRT, "left")])
    assert abs(res.value - 2.0) < 1e-12


def test_inverse_sqrt_right_hint():
    res = integrate_finite(lambda s: 1.0 / np.sqrt(1.0 - s), 0.0, 1.0, 1e-12,
                           hints=[SingularityHint(1.0, INVERSE_SQRT, "right")])
    assert abs(res.value - 2.0) < 1e-12


def test_semi_infinite_closed_forms():
    assert abs(integrate_semi_infinite(lambda x: 1 / x ** 2, 1.0, 1e-12).value - 1.0) < 1e-11
    assert abs(integrate_semi_infinite(lambda x: np.log(x) / x ** 2, 1.0, 1e-12).value - 1.0) < 1e-11
    with pytest.raises(ValueError):
        integrate_semi_infinite(lambda x: 1 / x, 1.0, decay_exponent=1.0)


def test_semi_infinite_thm5_integrand_against_romberg():
    # ln(zeta(s)(s-1))/((s-1)(s-2 alpha)) at alpha = 0.1 from 0.6; the oracle
    # splits it into [0.6, 2] and [2, inf).
    alpha = 0.1

    def f(s):
        return log_zeta_sminus1_quotient(s) / (s - 2 * alpha)

    ours = integrate_semi_infinite(f, 0.6, 1e-12).value

    def f_or(s):
        return oracles.h_oracle(s) / (s - 2 * alpha)

    head = oracles.romberg(f_or, 0.6, 2.0, levels=12)
    # The tail is smooth in x, so QUADPACK's infinite-range rule is an
    # independent check there.
    tail = oracles.quad(lambda x: f_or(x)[0], 2.0, np.inf)
    assert abs(ours - (head + tail)) < 1e-8


def test_symmetric_line_arctan():
    res = integrate_symmetric_line(lambda t: 1.0 / (1.0 + t * t), 1000.0, 1e-12)
    assert abs(res.value - 2 * math.atan(1000.0)) < 1e-11


def test_symmetric_line_case1_integrand():
    # (a/pi) * 2 int_0^300 ln|zeta(3/4+it)| / (1+t^2) reproduces the reference lhs.
    res = integrate_symmetric_line(lambda t: np.log(np.abs(zeta(0.75 + 1j * t))) / (1 + t * t),
                                   300.0, 1e-11, zero_ordinates=[14.134725142, 21.022039639])
    assert abs(res.value / math.pi - 0.16330508251202144) < 1e-9


def test_symmetric_line_critical_log_integral_vanishes():
    def f(t):
        return 0.5 * np.log(0.25 + t * t) / (0.25 + t * t)
    head = integrate_finite(f, 0.0, 10.0, 1e-13).value
    tail = integrate_semi_infinite(f, 10.0, 1e-13).value
    assert abs(2 * (head + tail)) < 1e-9
    # Truncated at T the integral misses a positive tail of about 2(ln T + 1)/T.
    finite = integrate_symmetric_line(f, 1e4, 1e-12).value
    assert -2.1 * (math.log(1e4) + 1) / 1e4 < finite < 0


def _battery(rng, n):
    """(f, lo, hi, exact, hints) with closed-form integrals on random intervals."""
    cases = []
    for _ in range(n):
        kind = rng.integers(4)
        lo, hi = np.sort(rng.uniform(-5, 5, 2))
        if kind == 0:
            cases.append((lambda t: 1 / (1 + t * t), lo, hi, math.atan(hi) - math.atan(lo), ()))
        elif kind == 1:
            w = rng.uniform(1, 30)
            cases.append((lambda t, w=w: np.cos(w * t), lo, hi,
                          (math.sin(w * hi) - math.sin(w * lo)) / w, ()))
        elif kind == 2:
            lo, hi = -rng.uniform(0.1, 3), rng.uniform(0.1, 3)

            def anti(x):
                return x * math.log(abs(x)) - x
            cases.append((lambda t: np.log(np.abs(t)), lo, hi, anti(hi) - anti(lo),
                          (SingularityHint(0.0, LOGARITHMIC),)))
        else:
            lo, hi = 0.0, rng.uniform(0.1, 4)
            cases.append((lambda t: 1 / np.sqrt(t), lo, hi, 2 * math.sqrt(hi),
                          (SingularityHint(0.0, INVERSE_SQRT, "left"),)))
    return cases


def test_error_estimate_is_honest():
    rng = np.random.default_rng(11)
    trials = _battery(rng, 200)
    honest = 0
    for f, lo, hi, exact, hints in trials:
        res = integrate_finite(f, lo, hi, 1e-10, hints=hints)
        honest += abs(res.value - exact) <= res.err_estimate
    assert honest >= 0.99 * len(trials)


def test_split_point_invariance():
    rng = np.random.default_rng(5)
    f = lambda t: np.exp(-t) * np.sin(7 * t)  # noqa: E731
    base = integrate_finite(f, 0.0, 3.0, 1e-12).value
    for _ in range(10):
        pts = list(rng.uniform(0.0, 3.0, rng.integers(1, 8)))
        other = integrate_finite(f, 0.0, 3.0, 1e-12, split_points=pts).value
        assert abs(other - base) < 1e-12


def test_semi_infinite_consistency_monotone():
    f = lambda x: np.log(x) / x ** 2  # noqa: E731
    whole = integrate_semi_infinite(f, 1.0, 1e-13).value
    gaps, corrected = [], []
    for X in (1e2, 1e3, 1e4):
        part = integrate_finite(f, 1.0, X, 1e-13, split_points=[10.0, 100.0, 1000.0]).value
        gaps.append(whole - part)
        corrected.append(abs(whole - part - (math.log(X) + 1) / X))
    assert gaps[0] > gaps[1] > gaps[2] > 0
    assert max(corrected) < 1e-11


def _transformed_samples(f, lo, hi, hints, n=4001):
    """Integrand times Jacobian on a dense grid of each initial panel."""
    out = []
    for p in _initial_panels(lo, hi, (), hints):
        u = np.linspace(p.lo, p.hi, n)[1:-1]
        x, jac = p.to_x(u)
        out.append(f(x) * jac)
    return np.concatenate(out)


@pytest.mark.parametrize("alpha", [0.0, 0.1, 0.25, 0.45])
def test_substitution_bounds_paper_integrands(alpha):
    # The three sigma kernels: inverse square roots on either side of 1, and
    # the removable point at 1.
    def f6(s):
        return log_zeta_sminus1_quotient(s) / (np.sqrt(s - 1.0) * (s - 2 * alpha) ** 1.5)

    g = _transformed_samples(f6, 1.0, 2.0, [SingularityHint(1.0, INVERSE_SQRT, "left")])
    assert np.all(np.isfinite(g)) and np.max(np.abs(g)) < 1e6

    b = 0.5 + alpha

    def f7(s):
        return log_zeta_sminus1_quotient(s) / (np.sqrt(1.0 - s) * (s - 2 * alpha) ** 1.5)

    g = _transformed_samples(f7, b, 1.0, [SingularityHint(1.0, INVERSE_SQRT, "right")])
    assert np.all(np.isfinite(g)) and np.max(np.abs(g)) < 1e6

    def f5(s):
        return log_zeta_sminus1_quotient(s) / (s - 2 * alpha)

    g = _transformed_samples(f5, b, 2.0, [SingularityHint(1.0, REMOVABLE)])
    assert np.all(np.isfinite(g)) and np.max(np.abs(g)) < 1e6


def test_log_rule_never_samples_the_singularity():
    seen = []

    def f(t):
        seen.append(t.copy())
        return np.log(np.abs(t - 0.3))

    integrate_finite(f, 0.0, 1.0, 1e-12, hints=[SingularityHint(0.3, LOGARITHMIC)])
    assert not np.any(np.concatenate(seen) == 0.3)


def test_hint_validation():
    with pytest.raises(ValueError):
        SingularityHint(0.0, "cusp")
    with pytest.raises(ValueError):
        SingularityHint(0.0, LOGARITHMIC, "middle")
    with pytest.raises(ValueError):
        integrate_finite(np.sin, 0.0, 1.0, hints=[SingularityHint(2.0, LOGARITHMIC)])
    with pytest.raises(ValueError):
        integrate_finite(np.sin, 1.0, 1.0)
    with pytest.raises(ValueError):
        integrate_finite(np.sin, 0.0, 1.0, tol=0.0)


def test_max_subdivisions_warning_and_best_estimate():
    f = lambda t: np.sin(1.0 / t)  # noqa: E731
    with pytest.warns(MaxSubdivisions):
        res = integrate_finite(f, 1e-3, 1.0, 1e-14, max_panels=8)
    assert not res.converged
    assert res.n_panels <= 16
    assert math.isfinite(res.value) and res.err_estimate > 1e-14


def test_panel_budget_env(monkeypatch):
    monkeypatch.delenv(PANEL_BUDGET_ENV, raising=False)
    assert panel_budget() == 20_000
    monkeypatch.setenv(PANEL_BUDGET_ENV, "7")
    assert panel_budget() == 7
    with pytest.warns(MaxSubdivisions):
        res = integrate_finite(lambda t: np.sin(1.0 / t), 1e-3, 1.0, 1e-14)
    assert not res.converged
    monkeypatch.setenv(PANEL_BUDGET_ENV, "0")
    with pytest.raises(ValueError):
        panel_budget()


def test_deterministic_bits():
    f = lambda t: np.log(np.abs(zeta(0.75 + 1j * t)))  # noqa: E731
    r1 = integrate_finite(f, 0.0, 60.0, 1e-11)
    r2 = integrate_finite(f, 0.0, 60.0, 1e-11)
    assert r1 == r2


def test_no_warning_when_converged():
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        integrate_finite(np.exp, 0.0, 1.0, 1e-12)
