"""Evaluate both sides of each identity for one CaseSpec.

Every evaluator returns a ResidualReport.  Line integrals are truncated at
T; the analytic tail model is reported next to the residual and never added
to it.  Hypothetical zeros with t > 0 stand for a conjugate pair.

Arrangements (lhs | rhs):

    EQ2, EQ7   (a/pi) int ln|zeta(b+it)| / (a^2+t^2)
               | ln|zeta(a+b)(a+b-1)| - ln|a-b+1| + sum of modulus terms
    THM3, EQ8  as above with ln|zeta(b+it)(b-1+it)| and no -ln|a-b+1|
    B_GT_1     (a/pi) int ln|zeta(b+it)| / (a^2+t^2) | ln zeta(a+b)
    THM4       int ln|zeta(z)(z-1)| / (a^2+t^2) | (pi/a) sum of modulus terms
    THM5       int_0^T arg(zeta(z)(z-1)) / (a^2+t^2)
               + int_b^inf ln(zeta(s)(s-1)) / ((1-s)(s-2alpha)) | 2 pi sum Im J
    THM6       int_0^T ln|zeta(z)(z-1)| / (a^2+t^2)^(3/2)
               | -int_1^inf ln(zeta(s)(s-1)) / ((s-1)^(3/2)(s-2alpha)^(3/2)) + 2 pi sum Re J32
    THM7       int_0^T arg(zeta(z)(z-1)) / (a^2+t^2)^(3/2)
               + int_b^1 ln(zeta(s)(s-1)) / ((1-s)^(3/2)(s-2alpha)^(3/2)) | 2 pi sum Im J32
    WANG       Im of the line and semicircle pieces | Im of the paired zero sum and pole term

J and J32 are the p-integrals of g and g^(3/2) for a zero (t > 0).
"""
from __future__ import annotations

import math
import time

import numpy as np

from ..quadrature import LOGARITHMIC, SingularityHint, integrate_finite, integrate_semi_infinite
from ..zeros import ZeroCatalog, ordinates_up_to
from ..zeta import (
    log_zeta_sminus1_quotient, tracked_log_points, tracked_log_values, zeta, zeta_times_sminus1,
)
from . import terms
from .cases import CaseSpec, ResidualReport, TermBreakdown, Theorem

# Above this abscissa the sigma-integrals switch to the semi-infinite rule.
_SIGMA_SPLIT = 2.0


class _Acc:
    """Collects quadrature error estimates and diagnostics for one case."""

    def __init__(self):
        self.err = 0.0
        self.notes = {}
        self.converged = True

    def add(self, name, res, scale=1.0):
        self.err += abs(scale) * res.err_estimate
        self.converged &= res.converged
        self.notes[f"{name}_evals"] = res.n_evals
        self.notes[f"{name}_panels"] = res.n_panels
        return scale * res.value


def _split_points(spec: CaseSpec, catalog, lo=0.0):
    """Panel boundaries for a vertical line: zero ordinates plus the kernel scale."""
    T = spec.T
    pts = list(ordinates_up_to(catalog, T, strict=False))
    a = spec.line_a
    for k in (1.0, 10.0, 100.0):
        if a > 0 and lo < k * a < T:
            pts.append(k * a)
    return sorted(p for p in pts if lo < p < T)


def _on_zero_line(b):
    return abs(b - 0.5) < 1e-15


def _line_integral(spec, catalog, numerator, power, acc, name, lo=0.0):
    """int_lo^T numerator(t) / (a^2 + t^2)^power dt on the case's line."""
    a = spec.line_a
    b = spec.line_b
    splits = _split_points(spec, catalog, lo)
    hints = ()
    if _on_zero_line(b) and catalog is not None:
        # ln|zeta(1/2 + it)| has a log singularity at each ordinate.
        hints = [SingularityHint(t, LOGARITHMIC, "interior")
                 for t in ordinates_up_to(catalog, spec.T, strict=False) if lo < t < spec.T]

    def f(t):
        return numerator(t) / (a * a + t * t) ** power

    res = integrate_finite(f, lo, spec.T, spec.tol, split_points=splits, hints=hints)
    return acc.add(name, res)


def _log_modulus(b, with_factor, params):
    def num(t):
        z = b + 1j * t
        v = zeta_times_sminus1(z, params) if with_factor else zeta(z, params)
        return np.log(np.abs(v))
    return num


def _tracked_arg(b, params):
    def num(t):
        return tracked_log_values(b, t, params, times_zminus1=True).imag
    return num


def _log_abs_f(s, params):
    """ln|zeta(s)(s - 1)| at a real or complex point (finite at s = 1)."""
    return math.log(abs(complex(zeta_times_sminus1(complex(s), params))))


def _tails(spec, m, power, scale, err):
    a = spec.line_a
    est = scale * terms.tail_integral(m, a, power, spec.T)
    env = abs(scale) * terms.tail_envelope(a, power, spec.T)
    return est, abs(est) + env + err


def _hypo_right_of(hypo, b):
    return [z for z in hypo if z.sigma > b]


def _report(spec, bd, acc, t0, tail_est, tail_bound, **notes):
    acc.notes.update(notes)
    acc.notes["converged"] = acc.converged
    return ResidualReport(spec, bd, acc.err, time.perf_counter() - t0, tail_est, tail_bound,
                          acc.notes)


def _modulus_identity(spec, catalog, hypo, *, a, b, with_factor, normalised=True):
    """Shared body of the EQ2/EQ7/THM3/EQ8/B_GT_1/THM4 family."""
    t0 = time.perf_counter()
    acc = _Acc()
    params = spec.zeta_params
    scale = (a / math.pi) * 2.0 if normalised else 2.0
    half = _line_integral(spec, catalog, _log_modulus(b, with_factor, params), 1.0, acc, "line")
    acc.err *= scale
    line = scale * half

    zeros = _hypo_right_of(hypo, b)
    n_catalog = 0
    if b < 0.5:
        crit = terms.critical_zeros(catalog, spec.T, strict=True)
        n_catalog = len(crit)
        zeros = crit + zeros
    # Each listed zero with t > 0 also stands for its conjugate.
    zero_sum = 2.0 * math.fsum(terms.zero_term_modulus(a, b, z) for z in zeros)

    if spec.theorem is Theorem.B_GT_1:
        closed = math.log(zeta(a + b, params).real)
        pole = 0.0
    elif spec.theorem is Theorem.THM4:
        closed = 0.0
        pole = 0.0
        zero_sum *= math.pi / a
    else:
        closed = _log_abs_f(a + b, params)
        pole = 0.0 if with_factor else -math.log(abs(a - b + 1.0))

    rhs = closed + pole + zero_sum
    bd = TermBreakdown(line_integral=line, closed_form=closed, pole_term=pole,
                       zero_sum=zero_sum, lhs=line, rhs=rhs, residual=line - rhs,
                       zeros_used=n_catalog + len(_hypo_right_of(hypo, b)))
    est, bound = _tails(spec, terms.mean_numerator(b, with_factor), 1.0, scale, acc.err)
    return acc, bd, t0, est, bound


def eval_eq2(spec: CaseSpec, catalog: ZeroCatalog | None = None, hypo=()) -> ResidualReport:
    if spec.b < 0.5:
        return eval_eq7_eq8(spec, catalog, hypo)
    acc, bd, t0, est, bound = _modulus_identity(spec, catalog, hypo, a=spec.a, b=spec.b,
                                                with_factor=False)
    return _report(spec, bd, acc, t0, est, bound)


def eval_b_gt_1(spec: CaseSpec, catalog: ZeroCatalog | None = None, hypo=()) -> ResidualReport:
    acc, bd, t0, est, bound = _modulus_identity(spec, None, (), a=spec.a, b=spec.b,
                                                with_factor=False)
    return _report(spec, bd, acc, t0, est, bound)


def eval_thm3(spec: CaseSpec, catalog: ZeroCatalog | None = None, hypo=()) -> ResidualReport:
    acc, bd, t0, est, bound = _modulus_identity(spec, catalog, hypo, a=spec.a, b=spec.b,
                                                with_factor=True)
    return _report(spec, bd, acc, t0, est, bound)


def eval_thm4(spec: CaseSpec, catalog: ZeroCatalog | None = None, hypo=()) -> ResidualReport:
    acc, bd, t0, est, bound = _modulus_identity(spec, catalog, hypo, a=spec.line_a,
                                                b=spec.line_b, with_factor=True,
                                                normalised=False)
    return _report(spec, bd, acc, t0, est, bound)


def eval_eq7_eq8(spec: CaseSpec, catalog: ZeroCatalog | None = None, hypo=()) -> ResidualReport:
    """EQ7 (general a) or EQ8 (a = 1/2 - alpha, with the (z - 1) factor).

    EQ2 specs with b < 1/2 land here too and are evaluated as EQ7.
    """
    th = spec.theorem
    if th is Theorem.EQ2:
        a, b, with_factor = spec.a, spec.b, False
    else:
        a, b, with_factor = spec.line_a, spec.line_b, th is Theorem.EQ8
    acc, bd, t0, est, bound = _modulus_identity(spec, catalog, hypo, a=a, b=b,
                                                with_factor=with_factor)
    notes = {}
    if th is Theorem.EQ8:
        alpha = spec.alpha
        ords = ordinates_up_to(catalog, spec.T, strict=True)
        bsy = 2.0 * math.fsum(terms.bsy_term(alpha, float(t)) for t in ords)
        notes["bsy_rhs"] = bd.closed_form + bsy
        notes["bsy_minus_eq8_sum"] = bsy - bd.zero_sum
    return _report(spec, bd, acc, t0, est, bound, **notes)


def _sigma_integral(acc, name, f, lo, hi=None, hints=(), split_points=(), decay=2.0, tol=1e-12):
    """int_lo^hi f, continuing to infinity from max(lo, 2) when hi is None."""
    value = 0.0
    if hi is not None:
        return acc.add(name, integrate_finite(f, lo, hi, tol, split_points=split_points,
                                              hints=hints))
    knee = max(lo, _SIGMA_SPLIT)
    if lo < knee:
        value += acc.add(name + "_finite", integrate_finite(f, lo, knee, tol,
                                                            split_points=split_points,
                                                            hints=hints))
    value += acc.add(name + "_tail", integrate_semi_infinite(f, knee, tol, decay_exponent=decay))
    return value


def eval_thm5(spec: CaseSpec, catalog: ZeroCatalog | None = None, hypo=()) -> ResidualReport:
    t0 = time.perf_counter()
    acc = _Acc()
    alpha, a, b = spec.alpha, spec.line_a, spec.line_b
    params = spec.zeta_params
    line = _line_integral(spec, catalog, _tracked_arg(b, params), 1.0, acc, "line")

    # ln(zeta(s)(s-1)) / ((1-s)(s-2alpha)) = -h(s)/(s-2alpha), h finite at s = 1.
    def f(s):
        return -log_zeta_sminus1_quotient(s, params) / (s - 2.0 * alpha)

    splits = [1.0] if b < 1.0 else []
    sig = _sigma_integral(acc, "sigma", f, b, split_points=splits, decay=2.0)
    zeros = _hypo_right_of(hypo, b)
    zero_sum = 2.0 * math.pi * math.fsum(terms.zero_term_p_closed(a, b, z).imag for z in zeros)
    # Taken from the real-part equality directly: line + sigma = +zero sum.
    # With the opposite sign the residual is O(1) instead of ~ -pi/(2T).
    lhs = line + sig
    bd = TermBreakdown(line_integral=line, sigma_integral=sig, zero_sum=zero_sum, lhs=lhs,
                       rhs=zero_sum, residual=lhs - zero_sum, zeros_used=len(zeros))
    est, bound = _tails(spec, terms.mean_numerator(b, True, "arg"), 1.0, 1.0, acc.err)
    return _report(spec, bd, acc, t0, est, bound)


def eval_thm6(spec: CaseSpec, catalog: ZeroCatalog | None = None, hypo=()) -> ResidualReport:
    t0 = time.perf_counter()
    acc = _Acc()
    alpha, a, b = spec.alpha, spec.line_a, spec.line_b
    params = spec.zeta_params
    line = _line_integral(spec, catalog, _log_modulus(b, True, params), 1.5, acc, "line")

    def f(s):
        h = log_zeta_sminus1_quotient(s, params)
        return h / (np.sqrt(s - 1.0) * (s - 2.0 * alpha) ** 1.5)

    # s = 1 + u^2 on [1, 2] absorbs the inverse square root exactly; working
    # in u avoids recomputing s - 1 from a rounded s.
    def g(u):
        s = 1.0 + u * u
        return 2.0 * log_zeta_sminus1_quotient(s, params) / (s - 2.0 * alpha) ** 1.5

    sig = acc.add("sigma_finite", integrate_finite(g, 0.0, 1.0, 1e-12))
    sig += _sigma_integral(acc, "sigma", f, _SIGMA_SPLIT, decay=3.0)
    zeros = _hypo_right_of(hypo, b)
    zero_sum = 2.0 * math.pi * math.fsum(
        terms.zero_term_threehalves_closed(alpha, z).real for z in zeros)
    rhs = -sig + zero_sum
    bd = TermBreakdown(line_integral=line, sigma_integral=sig, zero_sum=zero_sum, lhs=line,
                       rhs=rhs, residual=line - rhs, zeros_used=len(zeros))
    est, bound = _tails(spec, terms.mean_numerator(b, True), 1.5, 1.0, acc.err)
    return _report(spec, bd, acc, t0, est, bound)


def eval_thm7(spec: CaseSpec, catalog: ZeroCatalog | None = None, hypo=()) -> ResidualReport:
    t0 = time.perf_counter()
    acc = _Acc()
    alpha, a, b = spec.alpha, spec.line_a, spec.line_b
    params = spec.zeta_params
    line = _line_integral(spec, catalog, _tracked_arg(b, params), 1.5, acc, "line")

    # ln(zeta(s)(s-1)) / (1-s)^(3/2) = -h(s) / sqrt(1-s); with s = 1 - u^2
    # the integral over [b, 1] becomes a smooth one over [0, sqrt(1-b)].
    def g(u):
        s = 1.0 - u * u
        return -2.0 * log_zeta_sminus1_quotient(s, params) / (s - 2.0 * alpha) ** 1.5

    # Both pieces grow like 1/a as alpha -> 1/2; keep the tolerance relative.
    sig_tol = 1e-12 * max(1.0, 1.0 / a)
    sig = acc.add("sigma", integrate_finite(g, 0.0, math.sqrt(1.0 - b), sig_tol))
    zeros = _hypo_right_of(hypo, b)
    zero_sum = 2.0 * math.pi * math.fsum(
        terms.zero_term_threehalves_closed(alpha, z).imag for z in zeros)
    lhs = line + sig
    bd = TermBreakdown(line_integral=line, sigma_integral=sig, zero_sum=zero_sum, lhs=lhs,
                       rhs=zero_sum, residual=lhs - zero_sum, zeros_used=len(zeros))
    est, bound = _tails(spec, terms.mean_numerator(b, True, "arg"), 1.5, 1.0, acc.err)
    return _report(spec, bd, acc, t0, est, bound)


def eval_wang(spec: CaseSpec, catalog: ZeroCatalog | None = None, hypo=()) -> ResidualReport:
    """Wang's a = 0 contour: the line Re z = b with a semicircle of radius R around b.

    The line piece is -2i int_R^T ln|zeta(b+it)| / t^2 dt and the semicircle
    (i/R) int ln zeta(b + R e^{i theta}) e^{-i theta} d theta over
    |theta| <= pi/2; only imaginary parts survive.
    """
    t0 = time.perf_counter()
    acc = _Acc()
    b, R = spec.b, spec.R
    params = spec.zeta_params
    half = _line_integral(spec, catalog, _log_modulus(b, False, params), 1.0, acc, "line",
                          lo=R)
    line = -2.0 * half
    acc.err *= 2.0

    def arc(theta):
        z = b + R * np.exp(1j * theta)
        # log zeta = tracked log(zeta(z)(z-1)) - log(z-1); the second log is
        # principal, which is its horizontal continuation off the real axis.
        F = tracked_log_points(z.real, z.imag, params, times_zminus1=True) - np.log(z - 1.0)
        return 1j / R * F * np.exp(-1j * theta)

    half_pi = 0.5 * math.pi
    arc_im = acc.add("arc", integrate_finite(lambda th: arc(th).imag, -half_pi, half_pi,
                                             spec.tol, split_points=[0.0]))
    arc_re = acc.add("arc_re", integrate_finite(lambda th: arc(th).real, -half_pi, half_pi,
                                                spec.tol, split_points=[0.0]))
    total = terms.wang_sum(b, catalog if b < 0.5 else None, hypo, R,
                           T=spec.T if b < 0.5 else None)
    pole = 2.0 * math.pi * (1.0 / (1.0 - b) - 1.0 / R) if b + R < 1.0 else 0.0
    zero_sum = total.imag - pole
    n_cat = len(ordinates_up_to(catalog, spec.T)) if b < 0.5 else 0
    lhs = line + arc_im
    rhs = total.imag
    bd = TermBreakdown(line_integral=line, sigma_integral=arc_im, pole_term=pole,
                       zero_sum=zero_sum, lhs=lhs, rhs=rhs, residual=lhs - rhs,
                       zeros_used=n_cat + len(_hypo_right_of(hypo, b)))
    m = terms.mean_numerator(b, False)
    est = -2.0 * terms.tail_integral(m, 0.0, 1.0, spec.T)
    bound = abs(est) + 2.0 * terms.tail_envelope(0.0, 1.0, spec.T) + acc.err
    return _report(spec, bd, acc, t0, est, bound, arc_real_part=arc_re)


def line_integrand(spec: CaseSpec):
    """The case's vertical-line integrand as a vectorised function of t."""
    th = spec.theorem
    params = spec.zeta_params
    a, b = spec.line_a, spec.line_b
    if th in (Theorem.THM5, Theorem.THM7):
        num = _tracked_arg(b, params)
    else:
        with_factor = th in (Theorem.THM3, Theorem.THM4, Theorem.THM6, Theorem.EQ8)
        num = _log_modulus(b, with_factor, params)
    power = 1.5 if th in (Theorem.THM6, Theorem.THM7) else 1.0

    def f(t):
        t = np.asarray(t, dtype=float)
        return num(t) / (a * a + t * t) ** power
    return f


EVALUATORS = {
    Theorem.EQ2: eval_eq2,
    Theorem.THM3: eval_thm3,
    Theorem.THM4: eval_thm4,
    Theorem.THM5: eval_thm5,
    Theorem.THM6: eval_thm6,
    Theorem.THM7: eval_thm7,
    Theorem.EQ7: eval_eq7_eq8,
    Theorem.EQ8: eval_eq7_eq8,
    Theorem.B_GT_1: eval_b_gt_1,
    Theorem.WANG: eval_wang,
}


def evaluate(spec: CaseSpec, catalog: ZeroCatalog | None = None, hypo=()) -> ResidualReport:
    """Dispatch on spec.theorem."""
    return EVALUATORS[spec.theorem](spec, catalog, hypo)
