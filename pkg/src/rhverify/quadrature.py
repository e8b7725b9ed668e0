"""Globally adaptive 1-d quadrature for the identity integrals.

Smooth panels use the Gauss-Kronrod 7/15 pair with the QUADPACK error
heuristic.  Panels touching a logarithmic singularity use a tanh-sinh rule
whose nodes are placed by their distance from the endpoint, so an
integrable blow-up exactly at a panel edge is never sampled.  An
inverse-square-root endpoint c is removed by the substitution x = c +/- u^2.

Integrands are vectorised: ``f(x)`` receives a 1-d float array.
"""
from __future__ import annotations

import math
import os
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .errors import MaxSubdivisions

DEFAULT_TOL = 1e-10
DEFAULT_PANEL_BUDGET = 20_000
PANEL_BUDGET_ENV = "VERIFIER_PANEL_BUDGET"

LOGARITHMIC = "logarithmic"
INVERSE_SQRT = "inverse_sqrt"
REMOVABLE = "removable"
_KINDS = (LOGARITHMIC, INVERSE_SQRT, REMOVABLE)
_SIDES = ("left", "right", "interior")

# Gauss-Kronrod 15-point nodes (non-negative half) and weights, QUADPACK qk15.
_XGK = np.array([
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
])
_GK_X = np.concatenate([-_XGK[:-1], _XGK[::-1]])
_GK_W = np.concatenate([_WGK[:-1], _WGK[::-1]])
_G_W = np.zeros(15)
_G_W[[1, 3, 5, 7, 9, 11, 13]] = np.concatenate([_WG[:-1], _WG[::-1]])

# tanh-sinh: nodes at tau = j h, |tau| <= 4.5; level L uses h = 2^(1-L).
# A singular panel starts at level 4 and is refined to level 7 before it is
# bisected.
_TS_LEVELS = 7
_TS_START = 4
_TS_TMAX = 4.5
_TS_MIN_REL_GAP = 1e-100


def _tanh_sinh_table():
    h = 0.5 ** (_TS_LEVELS - 1)
    tau = np.arange(-int(_TS_TMAX / h), int(_TS_TMAX / h) + 1) * h
    u = 0.5 * np.pi * np.sinh(tau)
    # gap to the nearer endpoint, as a fraction of the panel width
    gap = 1.0 / (1.0 + np.exp(2.0 * np.abs(u)))
    weight = 0.5 * np.pi * np.cosh(tau) / np.cosh(u) ** 2
    keep = gap > _TS_MIN_REL_GAP
    idx = np.round(tau / h).astype(int)
    return tau[keep], gap[keep], weight[keep], idx[keep]


_TS_TAU, _TS_GAP, _TS_W, _TS_IDX = _tanh_sinh_table()


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    err_estimate: float
    n_evals: int
    n_panels: int
    converged: bool


@dataclass(frozen=True)
class SingularityHint:
    """An integrable singularity at ``location``.

    ``side`` says which endpoint of the interval it sits on (or ``interior``).
    """

    location: float
    kind: str
    side: str = "interior"

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown singularity kind {self.kind!r}")
        if self.side not in _SIDES:
            raise ValueError(f"unknown side {self.side!r}")


def panel_budget(default=DEFAULT_PANEL_BUDGET):
    """Panel budget, overridable through the VERIFIER_PANEL_BUDGET variable."""
    raw = os.environ.get(PANEL_BUDGET_ENV)
    if raw is None or not raw.strip():
        return default
    value = int(raw)
    if value < 1:
        raise ValueError(f"{PANEL_BUDGET_ENV} must be a positive integer")
    return value


class _Panel:
    # One subinterval [lo, hi] in the variable u, with x = map(u):
    #   map "lin":   x = u
    #   map "sqrt+": x = c + u^2    (left inverse-sqrt endpoint at c)
    #   map "sqrt-": x = c - u^2    (right inverse-sqrt endpoint at c)
    __slots__ = ("lo", "hi", "mapping", "c", "sing_lo", "sing_hi", "value", "err", "final",
                 "level")

    def __init__(self, lo, hi, mapping="lin", c=0.0, sing_lo=False, sing_hi=False,
                 level=_TS_START):
        self.lo = lo
        self.hi = hi
        self.mapping = mapping
        self.c = c
        self.sing_lo = sing_lo
        self.sing_hi = sing_hi
        self.value = 0.0
        self.err = math.inf
        self.final = False
        self.level = level

    @property
    def tanh_sinh(self):
        return self.sing_lo or self.sing_hi

    def x_key(self):
        if self.mapping == "lin":
            return self.lo
        if self.mapping == "sqrt+":
            return self.c + self.lo * self.lo
        return self.c - self.hi * self.hi

    def nodes(self):
        """Sample points in u and the matching weights (without the Jacobian)."""
        half = 0.5 * (self.hi - self.lo)
        if not self.tanh_sinh:
            mid = 0.5 * (self.hi + self.lo)
            return mid + half * _GK_X, half * _GK_W, None
        width = self.hi - self.lo
        sel = _TS_SELECT[self.level]
        gap = _TS_GAP[sel]
        # distances measured from the endpoint each node clusters towards
        u = np.where(_TS_TAU[sel] < 0, self.lo + width * gap, self.hi - width * gap)
        # nodes that round onto an endpoint carry negligible weight; skip them
        inside = (u > self.lo) & (u < self.hi)
        return u, half * _TS_W[sel], inside

    def to_x(self, u):
        if self.mapping == "lin":
            return u, np.ones_like(u)
        if self.mapping == "sqrt+":
            return self.c + u * u, 2.0 * u
        return self.c - u * u, 2.0 * u

    def split(self):
        if self.tanh_sinh and self.level < _TS_LEVELS:
            return (_Panel(self.lo, self.hi, self.mapping, self.c, self.sing_lo,
                           self.sing_hi, self.level + 1),)
        mid = 0.5 * (self.lo + self.hi)
        return (
            _Panel(self.lo, mid, self.mapping, self.c, self.sing_lo, False),
            _Panel(mid, self.hi, self.mapping, self.c, False, self.sing_hi),
        )


def _gk_estimate(fv, weights_scale):
    # fv: values at the 15 Kronrod nodes (times Jacobian)
    half = weights_scale
    resk = np.dot(_GK_W, fv) * half
    resg = np.dot(_G_W, fv) * half
    reskh = resk / (2 * half) if half else 0.0
    resasc = np.dot(_GK_W, np.abs(fv - reskh)) * half
    resabs = np.dot(_GK_W, np.abs(fv)) * half
    err = abs(resk - resg)
    if resasc != 0.0 and err != 0.0:
        err = resasc * min(1.0, (200.0 * err / resasc) ** 1.5)
    eps = np.finfo(float).eps
    if resabs > np.finfo(float).tiny / (50 * eps):
        err = max(50 * eps * resabs, err)
    return resk, err


def _ts_select(level):
    return (_TS_IDX % (2 ** (_TS_LEVELS - level))) == 0


_TS_SELECT = {lv: _ts_select(lv) for lv in range(1, _TS_LEVELS + 1)}


def _ts_estimate(fv, half, level):
    # Sum the level sequence ending at ``level`` and extrapolate the error of
    # the finest sum from the last two differences.
    fine_h = 0.5 ** (level - 1)
    terms = _TS_W[_TS_SELECT[level]] * fv
    idx = _TS_IDX[_TS_SELECT[level]]
    sums = []
    base = 2 ** (_TS_LEVELS - level)
    for coarse in (2, 1):
        mask = (idx % (base * 2 ** coarse)) == 0
        sums.append(half * fine_h * 2 ** coarse * terms[mask].sum())
    sums.append(half * fine_h * terms.sum())
    d1 = abs(sums[-1] - sums[-2])
    d2 = abs(sums[-2] - sums[-3])
    if d1 == 0.0:
        err = 0.0
    elif d2 == 0.0 or d1 >= d2:
        err = d1
    else:
        err = min(d1, d1 * d1 / d2 * 10.0)
    eps = np.finfo(float).eps
    err = max(err, 50 * eps * half * fine_h * np.abs(terms).sum())
    return sums[-1], err


def _evaluate(f, panels):
    """Evaluate many panels with a single call of ``f``."""
    xs, jacs, masks = [], [], []
    for p in panels:
        u, _, inside = p.nodes()
        x, jac = p.to_x(u)
        if inside is not None:
            x, jac = x[inside], jac[inside]
        xs.append(x)
        jacs.append(jac)
        masks.append(inside)
    x_all = np.concatenate(xs)
    fx = np.asarray(f(x_all), dtype=float)
    if fx.shape != x_all.shape:
        fx = np.broadcast_to(fx, x_all.shape)
    pos = 0
    for p, jac, inside in zip(panels, jacs, masks):
        n = jac.size
        vals = fx[pos:pos + n] * jac
        pos += n
        if not np.all(np.isfinite(vals)):
            bad = x_all[pos - n:pos][~np.isfinite(vals)]
            raise FloatingPointError(f"integrand not finite at x = {bad[:3]!r}")
        if inside is None:
            fv = vals
        else:
            fv = np.zeros(inside.size)
            fv[inside] = vals
        half = 0.5 * (p.hi - p.lo)
        if p.tanh_sinh:
            p.value, p.err = _ts_estimate(fv, half, p.level)
        else:
            p.value, p.err = _gk_estimate(fv, half)
    return x_all.size


def _initial_panels(lo, hi, split_points, hints):
    breaks = {lo, hi}
    for s in split_points:
        if lo < s < hi:
            breaks.add(float(s))
    log_points = set()
    sqrt_points = set()
    for h in hints:
        if not lo <= h.location <= hi:
            raise ValueError(f"hint at {h.location} lies outside [{lo}, {hi}]")
        if lo < h.location < hi:
            breaks.add(float(h.location))
        if h.kind == LOGARITHMIC:
            log_points.add(float(h.location))
        elif h.kind == INVERSE_SQRT:
            sqrt_points.add(float(h.location))
    breaks = sorted(breaks)
    panels = []
    for a, b in zip(breaks[:-1], breaks[1:]):
        if a in sqrt_points and b in sqrt_points:
            m = 0.5 * (a + b)
            panels.append(_Panel(0.0, math.sqrt(m - a), "sqrt+", a))
            panels.append(_Panel(0.0, math.sqrt(b - m), "sqrt-", b))
        elif a in sqrt_points:
            panels.append(_Panel(0.0, math.sqrt(b - a), "sqrt+", a, sing_hi=b in log_points))
        elif b in sqrt_points:
            panels.append(_Panel(0.0, math.sqrt(b - a), "sqrt-", b, sing_hi=a in log_points))
        else:
            panels.append(_Panel(a, b, "lin", 0.0, a in log_points, b in log_points))
    return panels


def _adapt(f, panels, tol, max_panels):
    n_evals = _evaluate(f, panels)
    while True:
        total_err = math.fsum(p.err for p in panels)
        if total_err <= tol:
            return panels, n_evals, True
        if len(panels) >= max_panels:
            return panels, n_evals, False
        # Split the fewest largest-error panels that bring the rest below tol/2.
        ranked = sorted((p for p in panels if not p.final), key=lambda p: -p.err)
        if not ranked:
            return panels, n_evals, False
        remaining = total_err
        chosen = []
        room = max_panels - len(panels)
        for p in ranked:
            if remaining <= 0.5 * tol or len(chosen) >= room:
                break
            chosen.append(p)
            remaining -= p.err
        new = []
        chosen_ids = {id(p) for p in chosen}
        keep = [p for p in panels if id(p) not in chosen_ids]
        for p in chosen:
            scale = max(abs(p.lo), abs(p.hi), 1e-300)
            if (p.hi - p.lo) <= 64 * np.finfo(float).eps * scale:
                p.final = True
                keep.append(p)
                continue
            new.extend(p.split())
        if not new:
            return panels, n_evals, False
        n_evals += _evaluate(f, new)
        panels = keep + new


def integrate_finite(f: Callable[[np.ndarray], np.ndarray], lo: float, hi: float,
                     tol: float = DEFAULT_TOL, split_points: Sequence[float] = (),
                     hints: Sequence[SingularityHint] = (),
                     max_panels: int | None = None) -> QuadratureResult:
    """Integrate ``f`` over [lo, hi] to absolute tolerance ``tol``.

    Panels are never allowed to straddle a split point or a hint location.
    When the panel budget runs out the best estimate is returned with
    ``converged=False`` and a :class:`MaxSubdivisions` warning.
    """
    lo = float(lo)
    hi = float(hi)
    if not lo < hi:
        raise ValueError("need lo < hi")
    if not tol > 0:
        raise ValueError("tol must be positive")
    if max_panels is None:
        max_panels = panel_budget()
    panels = _initial_panels(lo, hi, split_points, hints)
    panels, n_evals, ok = _adapt(f, panels, tol, max(max_panels, len(panels)))
    panels.sort(key=lambda p: (p.x_key(), p.lo))
    value = math.fsum(p.value for p in panels)
    err = math.fsum(p.err for p in panels)
    if not ok:
        warnings.warn(
            f"panel budget {max_panels} exhausted on [{lo}, {hi}]: "
            f"error estimate {err:.3g} > tol {tol:.3g}",
            MaxSubdivisions, stacklevel=2,
        )
    return QuadratureResult(value, err, n_evals, len(panels), ok)


def integrate_semi_infinite(f: Callable[[np.ndarray], np.ndarray], lo: float,
                            tol: float = DEFAULT_TOL, decay_exponent: float = 2.0,
                            max_panels: int | None = None) -> QuadratureResult:
    """Integrate ``f`` over [lo, inf) via x = lo - 1 + 1/u, u in (0, 1].

    ``f`` must decay like x^-decay_exponent (log factors allowed) with
    ``decay_exponent`` > 1; the transformed integrand then has at worst an
    integrable endpoint singularity at u = 0, which gets the tanh-sinh rule.
    """
    if not decay_exponent > 1:
        raise ValueError("decay_exponent must exceed 1 for a convergent tail")
    shift = float(lo) - 1.0

    def g(u):
        inv = 1.0 / u
        return f(shift + inv) * inv * inv

    return integrate_finite(g, 0.0, 1.0, tol, hints=[SingularityHint(0.0, LOGARITHMIC, "left")],
                            max_panels=max_panels)


def integrate_symmetric_line(f_even: Callable[[np.ndarray], np.ndarray], T: float,
                             tol: float = DEFAULT_TOL, zero_ordinates: Sequence[float] = (),
                             singular_at_zeros: bool = False,
                             max_panels: int | None = None) -> QuadratureResult:
    """2 * integral of an even integrand over [0, T].

    Every ordinate in ``zero_ordinates`` below T becomes a panel boundary; with
    ``singular_at_zeros`` the panels around it also get the logarithmic rule
    (integrands on the critical line, where ln|zeta| diverges at each zero).
    """
    ords = [float(t) for t in zero_ordinates if 0.0 < t < T]
    hints = ()
    if singular_at_zeros:
        hints = [SingularityHint(t, LOGARITHMIC, "interior") for t in ords]
    res = integrate_finite(f_even, 0.0, T, 0.5 * tol, split_points=ords, hints=hints,
                           max_panels=max_panels)
    return QuadratureResult(2.0 * res.value, 2.0 * res.err_estimate, res.n_evals,
                            res.n_panels, res.converged)
