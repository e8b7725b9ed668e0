"""Riemann zeta on Re(s) > -1 and logarithms continued along horizontal lines.

zeta is summed with the Euler-Maclaurin formula

    zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{k=1..M} B_2k/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1) + R_M

with the remainder bounded by |next term| * |s+2M+1| / (Re s + 2M + 1).
Every public function accepts scalars or numpy arrays and evaluates
array input in one vectorised pass.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import ParamsInsufficient, PoleAtOne, ZeroOnPath

EULER_GAMMA = 0.57721566490153286061

# Stieltjes constants gamma_0 .. gamma_4, used for the expansion of
# zeta(s)(s-1) around s = 1.
STIELTJES = (
    EULER_GAMMA,
    -0.072815845483676724861,
    -0.0096903631928723184845,
    0.0020538344203033458662,
    0.0023253700654673000575,
)

MAX_BERNOULLI_ORDER = 25

# Cutoff rule N ~ 0.4 (|s| + 2M): the Euler-Maclaurin terms then shrink
# geometrically with ratio about 0.4 ** 2.
_CUTOFF_SLOPE = 0.4
_CHUNK_ELEMENTS = 1 << 21


def _bernoulli_coefficients(m):
    # B_2k / (2k)! for k = 1..m, exact rationals rounded once.
    b = [Fraction(1)]
    for n in range(1, 2 * m + 1):
        acc = Fraction(0)
        for k in range(n):
            acc += math.comb(n + 1, k) * b[k]
        b.append(-acc / (n + 1))
    return np.array([float(b[2 * k] / math.factorial(2 * k)) for k in range(1, m + 1)])


_BERNOULLI = _bernoulli_coefficients(MAX_BERNOULLI_ORDER + 1)


@dataclass(frozen=True)
class ZetaParams:
    """Euler-Maclaurin settings.

    ``n_terms`` is the smallest direct-sum cutoff N; larger |t| raise it to
    about 0.4 (|t| + 2M) so the correction series stays geometric.  Large
    Re s needs no extra terms because N^-s already makes them negligible.
    """

    n_terms: int = 20
    bernoulli_order: int = 20
    target_abs_error: float = 1e-12

    def __post_init__(self):
        if int(self.n_terms) < 2:
            raise ValueError("n_terms must be >= 2")
        if not 1 <= int(self.bernoulli_order) <= MAX_BERNOULLI_ORDER:
            raise ValueError(f"bernoulli_order must lie in [1, {MAX_BERNOULLI_ORDER}]")
        if not self.target_abs_error > 0:
            raise ValueError("target_abs_error must be positive")

    def cutoff(self, sigma, t):
        """Direct-sum cutoff N used at s = sigma + i t (array aware)."""
        size = np.abs(np.asarray(t, dtype=float)) + np.minimum(np.abs(sigma), 40.0)
        n = np.ceil(_CUTOFF_SLOPE * (size + 2 * self.bernoulli_order))
        return np.maximum(n, self.n_terms).astype(np.int64)


DEFAULT_PARAMS = ZetaParams()

_TWO_PI_LD = np.longdouble("6.283185307179586476925286766559")


def _unit_phases(t, logs):
    """exp(-i t ln n) for the outer grid of t and n, with the phase reduced mod 2 pi.

    t ln n reaches ~10^4 rad at |t| ~ 1000; forming and reducing it in
    extended precision keeps each phase good to ~1e-16 instead of ~1e-12.
    """
    theta = np.multiply.outer(np.asarray(t, dtype=np.longdouble), logs)
    theta = np.fmod(theta, _TWO_PI_LD).astype(float)
    return np.exp(-1j * theta)


def _log_range(n_cut):
    return np.log(np.arange(1, n_cut, dtype=np.longdouble))


def _em_head(s, params):
    """Everything but the N^(1-s)/(s-1) term, with the remainder bound.

    ``s`` is a 1-d complex array.  Returns (head, pole_part, bound) where
    zeta(s) = head + pole_part / (s - 1).
    """
    head = np.empty_like(s)
    pole_part = np.empty_like(s)
    bound = np.empty(s.shape, dtype=float)
    if s.size == 0:
        return head, pole_part, bound
    m = params.bernoulli_order
    cut = params.cutoff(s.real, s.imag)
    order = np.argsort(cut, kind="stable")
    start = 0
    while start < s.size:
        # Grow the chunk while rows * N stays under the element budget.
        stop = start + 1
        while stop < s.size and (stop - start + 1) * cut[order[stop]] <= _CHUNK_ELEMENTS:
            stop += 1
        idx = order[start:stop]
        n_cut = int(cut[order[stop - 1]])
        ss = s[idx]
        logs = _log_range(n_cut)
        mags = np.exp(-np.outer(ss.real, logs.astype(float)))
        direct = (mags * _unit_phases(ss.imag, logs)).sum(axis=1)
        head[idx], pole_part[idx], bound[idx] = _em_tail(ss, direct, n_cut, m)
        start = stop
    return head, pole_part, bound


def _em_tail(ss, direct, n_cut, m):
    # N^-s, with the phase reduced like the direct-sum terms.
    log_n = np.log(np.longdouble(n_cut))
    phase = _unit_phases(np.ravel(ss.imag), np.array([log_n])).reshape(ss.shape)
    n_pow = np.exp(-ss.real * float(log_n)) * phase
    total = direct + 0.5 * n_pow
    # term_k = c_k * s(s+1)...(s+2k-2) * N^(-s-2k+1), built by recurrence
    # so that huge Re s underflows to zero instead of overflowing.
    term = _BERNOULLI[0] * ss * n_pow / n_cut
    for k in range(1, m + 1):
        total = total + term
        ratio = _BERNOULLI[k] / _BERNOULLI[k - 1]
        term = term * ratio * (ss + 2 * k - 1) * (ss + 2 * k) / (n_cut * n_cut)
    bound = np.abs(term) * np.abs(ss + 2 * m + 1) / np.maximum(ss.real + 2 * m + 1, 1e-300)
    return total, n_pow * n_cut, bound


def _em_grid(sig, t, params):
    """Euler-Maclaurin pieces on the grid s = sig[j] + i t[i].

    n^-s = n^-sig * n^-it, so the direct sum becomes one complex
    exponential per (t, n) and a matrix product over the sigma grid.
    """
    m_rows, k_cols = t.size, sig.size
    head = np.empty((m_rows, k_cols), dtype=complex)
    pole_part = np.empty_like(head)
    bound = np.empty((m_rows, k_cols))
    if m_rows == 0 or k_cols == 0:
        return head, pole_part, bound
    m = params.bernoulli_order
    cut = params.cutoff(np.max(np.abs(sig)), t)
    order = np.argsort(cut, kind="stable")
    start = 0
    while start < t.size:
        stop = start + 1
        while stop < t.size and (stop - start + 1) * cut[order[stop]] <= _CHUNK_ELEMENTS:
            stop += 1
        idx = order[start:stop]
        n_cut = int(cut[order[stop - 1]])
        logs = _log_range(n_cut)
        phases = _unit_phases(t[idx], logs)
        decay = np.exp(-np.outer(logs.astype(float), sig))
        direct = phases @ decay
        ss = sig[None, :] + 1j * t[idx][:, None]
        head[idx], pole_part[idx], bound[idx] = _em_tail(ss, direct, n_cut, m)
        start = stop
    return head, pole_part, bound


def zeta_grid(sig, t, params: ZetaParams = DEFAULT_PARAMS, times_sminus1=False):
    """zeta (or zeta(s)(s-1)) on the grid s = sig[j] + i t[i]; shape (len t, len sig)."""
    sig = np.atleast_1d(np.asarray(sig, dtype=float))
    t = np.atleast_1d(np.asarray(t, dtype=float))
    head, pole_part, bound = _em_grid(sig, t, params)
    s = sig[None, :] + 1j * t[:, None]
    _check_domain(s.ravel(), params, bound)
    if times_sminus1:
        return (s - 1.0) * head + pole_part
    if np.any(s == 1.0):
        raise PoleAtOne("zeta has a simple pole at s = 1")
    return head + pole_part / (s - 1.0)


def _as_complex(s):
    arr = np.asarray(s, dtype=complex)
    return arr, arr.ndim == 0


def _check_domain(flat, params, bound):
    if np.any(flat.real <= -1.0):
        raise ValueError("zeta is only implemented for Re(s) > -1")
    worst = float(bound.max()) if bound.size else 0.0
    if worst > params.target_abs_error:
        raise ParamsInsufficient(
            f"Euler-Maclaurin remainder bound {worst:.3g} exceeds "
            f"target {params.target_abs_error:.3g}"
        )


def zeta(s, params: ZetaParams = DEFAULT_PARAMS):
    """Riemann zeta at complex ``s`` (scalar or array), Re(s) > -1, s != 1."""
    arr, scalar = _as_complex(s)
    flat = arr.ravel()
    if np.any(flat == 1.0):
        raise PoleAtOne("zeta has a simple pole at s = 1")
    head, pole_part, bound = _em_head(flat, params)
    _check_domain(flat, params, bound)
    out = (head + pole_part / (flat - 1.0)).reshape(arr.shape)
    return complex(out) if scalar else out


def zeta_times_sminus1(s, params: ZetaParams = DEFAULT_PARAMS):
    """zeta(s) * (s - 1); entire on Re(s) > -1 and equal to 1 at s = 1."""
    arr, scalar = _as_complex(s)
    flat = arr.ravel()
    head, pole_part, bound = _em_head(flat, params)
    _check_domain(flat, params, bound)
    out = ((flat - 1.0) * head + pole_part).reshape(arr.shape)
    return complex(out) if scalar else out


def log_zeta_sminus1_quotient(sigma, params: ZetaParams = DEFAULT_PARAMS):
    """ln(zeta(x)(x-1)) / (x-1) for real x > 0, continuous through x = 1.

    Near x = 1 the Laurent coefficients of zeta give the value directly; the
    direct formula loses about 1e-16/|x-1| there.
    """
    x = np.asarray(sigma, dtype=float)
    scalar = x.ndim == 0
    x = np.atleast_1d(x)
    d = x - 1.0
    out = np.empty_like(x)
    near = np.abs(d) < 1e-3
    if np.any(~near):
        prod = zeta_times_sminus1(x[~near].astype(complex), params).real
        out[~near] = np.log(prod) / d[~near]
    if np.any(near):
        dn = d[near]
        # zeta(s)(s-1) = 1 + sum_n (-1)^n gamma_n d^(n+1) / n!
        y = np.zeros_like(dn)
        for n, g in enumerate(STIELTJES):
            y += (-1) ** n * g * dn ** (n + 1) / math.factorial(n)
        safe = np.where(dn == 0.0, 1.0, dn)
        out[near] = np.where(dn == 0.0, EULER_GAMMA, np.log1p(y) / safe)
    return float(out[0]) if scalar else out


def psi_three_halves() -> float:
    """Digamma at 3/2, i.e. psi(1/2) + 2 = 2 - 2 ln 2 - gamma."""
    return 2.0 - 2.0 * math.log(2.0) - EULER_GAMMA


# ---------------------------------------------------------------------------
# Branch-tracked logarithms
# ---------------------------------------------------------------------------

DEFAULT_START_SIGMA = 4.0
DEFAULT_GUARD = 1e-9
_INITIAL_STEP = 0.25
_MAX_HALVINGS = 10


@dataclass(frozen=True)
class TrackedLog:
    """log f(sigma + i t) continued leftwards from ``start_sigma`` at fixed t.

    ``windings`` counts the 2 pi multiples separating ``value`` from the
    principal logarithm of f at the end point.  ``side`` is +1/-1 when the
    path had to be displaced above/below a zero or pole, else 0.
    """

    sigma: float
    t: float
    value: complex
    start_sigma: float
    windings: int
    side: int = 0


def _step_grid(start, stop, step):
    # On sigma >= 2, |zeta - 1| <= zeta(2) - 1 < 1 keeps Re zeta > 0, so one
    # step covers [2, start]; the uniform grid is only needed left of 2.
    knee = 2.0
    if start > knee > stop:
        n = max(1, int(math.ceil((knee - stop) / step)))
        return np.concatenate(([start], np.linspace(knee, stop, n + 1)))
    n = max(1, int(math.ceil(abs(start - stop) / step)))
    return np.linspace(start, stop, n + 1)


def _continued_arg(values_on, t, grid, max_halvings=_MAX_HALVINGS):
    """Imaginary-part increments of log f along ``grid`` for each t.

    ``values_on(sig, t)`` evaluates f on the grid sig[j] + i t[i] and returns
    an array of shape (len t, len sig).  Rows whose per-step phase change
    reaches pi/2 get their grid halved (only those rows) until every step is
    below pi/2, up to ``max_halvings`` times.
    Returns (f at grid[0], f at grid[-1], total phase change).
    """
    vals = values_on(grid, t)
    first = vals[:, 0].copy()
    last = vals[:, -1].copy()
    steps = np.angle(vals[:, 1:] / vals[:, :-1])
    total = steps.sum(axis=1)
    rows = np.nonzero(np.abs(steps).max(axis=1) >= 0.5 * np.pi)[0]
    cur_vals = vals[rows]
    cur_grid = grid
    level = 0
    while rows.size and level < max_halvings:
        level += 1
        # Every refined row shares the same grid at a given level.
        mids = 0.5 * (cur_grid[1:] + cur_grid[:-1])
        mid_vals = values_on(mids, t[rows])
        kk = cur_grid.size
        new_grid = np.empty(2 * kk - 1)
        new_vals = np.empty((rows.size, 2 * kk - 1), dtype=complex)
        new_grid[0::2] = cur_grid
        new_grid[1::2] = mids
        new_vals[:, 0::2] = cur_vals
        new_vals[:, 1::2] = mid_vals
        steps = np.angle(new_vals[:, 1:] / new_vals[:, :-1])
        total[rows] = steps.sum(axis=1)
        worst = np.abs(steps).max(axis=1)
        if level == max_halvings and np.any(worst > 0.9 * np.pi):
            raise ZeroOnPath(
                "phase still jumps by ~pi after %d halvings; path passes a zero" % level
            )
        still = worst >= 0.5 * np.pi
        rows = rows[still]
        cur_grid = new_grid
        cur_vals = new_vals[still]
    return first, last, total


def _guard_zero(sigma, t, zero_ordinates, guard, side, pole_blocks):
    """Displace t by +/- guard when the path meets a catalogued zero or the pole."""
    hit = False
    if pole_blocks and t == 0.0 and sigma < 1.0:
        hit = True
    if zero_ordinates is not None and sigma <= 0.5 and len(zero_ordinates):
        ords = np.asarray(zero_ordinates, dtype=float)
        if np.min(np.abs(ords - abs(t))) < guard:
            hit = True
    if not hit:
        return t, 0
    if side not in (+1, -1):
        raise ZeroOnPath(
            f"horizontal path at t={t!r} meets a zero/pole left of sigma=4; "
            "pass side=+1 or side=-1 to use F(z +/- i0)"
        )
    return t + side * guard, side


def _tracked(sigma, t, params, start_sigma, with_factor):
    if sigma <= 0:
        raise ValueError("sigma must be positive")
    t_arr = np.atleast_1d(np.asarray(t, dtype=float))
    def f(sg, tt):
        return zeta_grid(sg, tt, params, times_sminus1=with_factor)
    grid = _step_grid(start_sigma, sigma, _INITIAL_STEP)
    first, last, total = _continued_arg(f, t_arr, grid)
    anchor = np.angle(first)
    if with_factor:
        # Principal log zeta plus principal log(z - 1) at the anchor.
        zs = zeta(start_sigma + 1j * t_arr, params)
        anchor = np.angle(zs) + np.angle(start_sigma - 1.0 + 1j * t_arr)
    value = np.log(np.abs(last)) + 1j * (anchor + total)
    return value, last


def tracked_log_values(sigma, t, params: ZetaParams = DEFAULT_PARAMS, *,
                       times_zminus1=False, start_sigma=DEFAULT_START_SIGMA):
    """Vectorised branch-tracked log of zeta(z) or zeta(z)(z-1) on Re z = sigma.

    No zero/pole guard is applied; callers integrating over t rely on
    quadrature nodes never landing on a zero ordinate.
    """
    value, _ = _tracked(float(sigma), t, params, float(start_sigma), times_zminus1)
    return value if np.ndim(t) else complex(value[0])


def _tracked_scalar(sigma, t, params, start_sigma, zero_ordinates, guard, side, with_factor):
    t_used, used_side = _guard_zero(float(sigma), float(t), zero_ordinates, guard, side,
                                    pole_blocks=not with_factor)
    value, last = _tracked(float(sigma), t_used, params, float(start_sigma), with_factor)
    v = complex(value[0])
    windings = int(round((v.imag - float(np.angle(last[0]))) / (2 * np.pi)))
    return TrackedLog(float(sigma), float(t), v, float(start_sigma), windings, used_side)


def log_zeta_tracked(sigma, t, params: ZetaParams = DEFAULT_PARAMS, *,
                     start_sigma=DEFAULT_START_SIGMA, zero_ordinates=None,
                     guard=DEFAULT_GUARD, side=None) -> TrackedLog:
    """log zeta(sigma + i t) continued along Im z = t from ``start_sigma``.

    At sigma = 4 the principal branch is exact because |zeta - 1| < 0.08.
    ``zero_ordinates`` enables the guard: a path ending on the critical line
    (or left of it) within ``guard`` of a catalogued ordinate raises
    ZeroOnPath unless ``side`` selects F(z + i0) (+1) or F(z - i0) (-1).
    """
    return _tracked_scalar(sigma, t, params, start_sigma, zero_ordinates, guard, side, False)


def log_zeta_times_zminus1_tracked(sigma, t, params: ZetaParams = DEFAULT_PARAMS, *,
                                   start_sigma=DEFAULT_START_SIGMA, zero_ordinates=None,
                                   guard=DEFAULT_GUARD, side=None) -> TrackedLog:
    """As :func:`log_zeta_tracked` for f(z) = zeta(z)(z - 1), which has no pole."""
    return _tracked_scalar(sigma, t, params, start_sigma, zero_ordinates, guard, side, True)


def tracked_log_points(sigma, t, params: ZetaParams = DEFAULT_PARAMS, *,
                       times_zminus1=False, start_sigma=DEFAULT_START_SIGMA):
    """Branch-tracked log at scattered points sigma[i] + i t[i] (no guard)."""
    sigma = np.atleast_1d(np.asarray(sigma, dtype=float))
    t = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty(sigma.shape, dtype=complex)
    for i, (sg, tt) in enumerate(zip(sigma, t)):
        value, _ = _tracked(float(sg), np.array([tt]), params, float(start_sigma), times_zminus1)
        out[i] = value[0]
    return out
