import math

import numpy as np
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from rhverify.identities import zero_term_eq1, zero_term_modulus, zero_term_p_closed
from rhverify.quadrature import integrate_finite
from rhverify.report import OutputRow, format_rows, parse_csv, parse_json
from rhverify.zeros import HypotheticalZero
from rhverify.zeta import log_zeta_tracked, zeta

sigmas = st.floats(0.05, 3.0)
heights = st.floats(0.0, 1000.0)


@settings(max_examples=60, deadline=None)
@given(sigmas, heights)
def test_conjugate_symmetry(sigma, t):
    s = complex(sigma, t)
    if s == 1:
        return
    assert abs(zeta(s.conjugate()) - zeta(s).conjugate()) <= 1e-13


@settings(max_examples=25, deadline=None)
@given(st.floats(0.05, 2.0), st.floats(1.0, 400.0))
def test_exp_of_tracked_log(sigma, t):
    z = zeta(complex(sigma, t))
    v = log_zeta_tracked(sigma, t).value
    assert abs(np.exp(v) - z) <= 1e-10 * abs(z)


@settings(max_examples=40, deadline=None)
@given(st.lists(st.floats(0.0, 2.0), max_size=6), st.floats(1.0, 20.0))
def test_split_invariance(points, w):
    def f(x):
        return np.cos(w * x) * np.exp(-x)

    base = integrate_finite(f, 0.0, 2.0, 1e-12).value
    other = integrate_finite(f, 0.0, 2.0, 1e-12, split_points=points).value
    assert abs(base - other) < 1e-12


zeros = st.builds(HypotheticalZero, st.floats(0.01, 0.99), st.floats(0.1, 2000.0),
                  st.integers(1, 3))


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 3.0), st.floats(0.01, 0.99), zeros)
def test_modulus_is_real_part_of_closed_log(a, b, zero):
    if zero.sigma < b:
        return
    closed = zero_term_p_closed(a, b, zero)
    assert math.isclose(2 * a * closed.real, zero_term_modulus(a, b, zero),
                        rel_tol=1e-9, abs_tol=1e-13)
    assert zero_term_modulus(a, b, zero) >= 0


@settings(max_examples=200, deadline=None)
@given(st.floats(0.05, 3.0), st.floats(0.01, 0.99), st.floats(-0.9, 0.9), zeros)
def test_cut_additivity(a, b, X1, zero):
    # Splitting the cut at Re z = b adds the two pieces.
    assume(X1 < b)
    whole = zero_term_eq1(a, b, X1, zero)
    left = zero_term_eq1(a, b, X1, HypotheticalZero(b, zero.t, zero.multiplicity))
    right = zero_term_eq1(a, b, b, zero)
    assert abs(whole - (left + right)) <= 1e-12 * max(1.0, abs(whole))


finite = st.floats(allow_nan=False, allow_infinity=False)
opt = st.one_of(st.none(), finite)
text = st.text(st.characters(blacklist_categories=("Cs", "Cc")), max_size=20)
rows = st.builds(
    OutputRow, text,
    st.sampled_from(["EQ2", "THM5", "WANG"]), opt, opt, opt, opt, opt, opt, opt,
    st.one_of(st.none(), st.integers(0, 10 ** 6)), opt, text)


@settings(max_examples=100, deadline=None)
@given(st.lists(rows, max_size=5))
def test_output_round_trip(rs):
    assert parse_json(format_rows(rs, "json")) == rs
    assert parse_csv(format_rows(rs, "csv")) == rs
