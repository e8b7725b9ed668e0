"""Zero and pole contributions, closed-form companions and tail estimates.

Conventions used throughout:

* g(z) = 1/(a^2 - (z - b)^2) and its 3/2 power share the half-width a and
  centre b.  A zero rho = sigma + i t contributes through the horizontal
  segment from b + i t to rho, written with p = z - b - i t in [0, sigma - b].
* The antiderivative of g is (1/2a) L(z) with
  L(z) = ln(a + z - b) - ln(a - (z - b)).  The two factors move on
  horizontal lines as z runs along a segment, so their principal logs are
  continuous there and L(end) - L(start) equals 2a times the segment
  integral with no 2 pi i ambiguity, unless t = 0 and a factor changes sign.
* Multiplicity m multiplies every zero term.
"""
from __future__ import annotations

import cmath
import math

import numpy as np

from ..errors import DegenerateArgument
from ..quadrature import integrate_finite, integrate_semi_infinite
from ..zeros import HypotheticalZero, ZeroCatalog, ordinates_up_to
from ..zeta import EULER_GAMMA, psi_three_halves

REAL_PART = "real_part"
IMAG_PART = "imag_part"
_PARTS = (REAL_PART, IMAG_PART)


def _log_pair(a, b, z):
    num = a + (z - b)
    den = a - (z - b)
    if num == 0 or den == 0:
        raise DegenerateArgument(f"log argument vanishes at z={z!r} (a={a!r}, b={b!r})")
    return cmath.log(num) - cmath.log(den)


def zero_term_eq1(a, b, X1, zero: HypotheticalZero) -> complex:
    """I_k divided by -pi i / a for one zero, cut starting at Re z = X1.

    Equals 2a times the integral of g along the cut from X1 + i t to the zero.
    """
    if a == 0:
        raise DegenerateArgument("a must be nonzero")
    rho = complex(zero.sigma, zero.t)
    start = complex(X1, zero.t)
    return zero.multiplicity * (_log_pair(a, b, rho) - _log_pair(a, b, start))


def pole_term_ipol(a, b, X1) -> complex:
    """Contribution (pi i / a)[L(1) - L(X1)] of the pole of zeta at z = 1."""
    if a == 0:
        raise DegenerateArgument("a must be nonzero")
    return (1j * math.pi / a) * (_log_pair(a, b, 1.0 + 0j) - _log_pair(a, b, complex(X1)))


def zero_term_modulus(a, b, zero: HypotheticalZero) -> float:
    """ln |(a + sigma - b + i t)/(a - sigma + b - i t)| for one zero (not its conjugate)."""
    d = zero.sigma - b
    # |num|^2 - |den|^2 = 4 a d, so log1p keeps full precision for large t.
    return zero.multiplicity * 0.5 * math.log1p(4.0 * a * d / ((a - d) ** 2 + zero.t ** 2))


def _p_kernel(a, t, part):
    def f(p):
        base = a * a - p * p + t * t
        den = base * base + 4.0 * p * p * t * t
        return base / den if part == REAL_PART else 2.0 * p * t / den
    return f


def zero_term_p_closed(a, b, zero: HypotheticalZero) -> complex:
    """Closed form of the p-integral of 1/(a^2 - (p + i t)^2) over [0, sigma - b]."""
    return zero_term_eq1(a, b, b, zero) / (2.0 * a)


def zero_term_p_integral(a, b, zero: HypotheticalZero, part=REAL_PART, tol=1e-13) -> float:
    """Real or imaginary part of the p-integral, by adaptive quadrature."""
    if part not in _PARTS:
        raise ValueError(f"part must be one of {_PARTS}")
    d = zero.sigma - b
    if d == 0:
        return 0.0
    if d < 0:
        raise ValueError("the zero must lie right of the line (sigma > b)")
    res = integrate_finite(_p_kernel(a, zero.t, part), 0.0, d, tol)
    return zero.multiplicity * res.value


def threehalves_kernel(a, t, p):
    """exp(3 i phi / 2) / ((a^2 - p^2 + t^2)^2 + 4 p^2 t^2)^(3/4), vectorised in p.

    This is the principal value of (a^2 - (p + i t)^2)^(-3/2).
    """
    base = a * a - p * p + t * t
    phi = np.arctan2(2.0 * p * t, base)
    mod = (base * base + 4.0 * p * p * t * t) ** 0.75
    return np.exp(1.5j * phi) / mod


def zero_term_threehalves(alpha, zero: HypotheticalZero, part=REAL_PART, tol=1e-13) -> float:
    """Real or imaginary part of the 3/2-power p-integral, by quadrature.

    a = 1/2 - alpha and b = 1/2 + alpha.
    """
    if part not in _PARTS:
        raise ValueError(f"part must be one of {_PARTS}")
    a, b = 0.5 - alpha, 0.5 + alpha
    d = zero.sigma - b
    if d == 0:
        return 0.0
    if d < 0:
        raise ValueError("the zero must lie right of the line (sigma > 1/2 + alpha)")
    pick = np.real if part == REAL_PART else np.imag
    res = integrate_finite(lambda p: pick(threehalves_kernel(a, zero.t, p)), 0.0, d, tol)
    return zero.multiplicity * res.value


def zero_term_threehalves_closed(alpha, zero: HypotheticalZero) -> complex:
    """Closed form of the same integral: u / (a^2 sqrt(a^2 - u^2)) between u = i t and d + i t.

    a^2 - u^2 keeps the sign of -t in its imaginary part along the segment,
    so the principal square root is continuous there.
    """
    a, b = 0.5 - alpha, 0.5 + alpha

    def prim(u):
        w = a * a - u * u
        if w == 0:
            raise DegenerateArgument("segment ends on the branch point of g")
        return u / (a * a * cmath.sqrt(w))

    u1 = complex(zero.sigma - b, zero.t)
    u0 = complex(0.0, zero.t)
    return zero.multiplicity * (prim(u1) - prim(u0))


def critical_zeros(catalog: ZeroCatalog | None, T: float, strict=True):
    """Catalogued zeros up to T as HypotheticalZero(1/2, t_k)."""
    ords = ordinates_up_to(catalog, T, strict=strict)
    return [HypotheticalZero(0.5, float(t)) for t in ords]


def bsy_term(alpha, t) -> float:
    """ln(|rho| / |rho - (1 - 2 alpha)|) for rho = 1/2 + i t."""
    c = 1.0 - 2.0 * alpha
    return 0.5 * math.log((0.25 + t * t) / ((0.5 - c) ** 2 + t * t))


def eq8_term(alpha, zero: HypotheticalZero) -> float:
    """ln |(sigma + i t)/(1 - 2 alpha - sigma - i t)|, the a = b = 1/2 - alpha modulus term."""
    c = 1.0 - 2.0 * alpha
    s, t = zero.sigma, zero.t
    return zero.multiplicity * 0.5 * math.log((s * s + t * t) / ((c - s) ** 2 + t * t))


def wang_sum(b, catalog: ZeroCatalog | None, hypo=(), R=1.0, T=None) -> complex:
    """Paired zero sum -4 pi i (sigma_k - b)/((sigma_k - b)^2 + t_k^2) plus the pole term.

    Catalogued zeros sit at sigma = 1/2 and enter only when b < 1/2; they are
    truncated at T when given (T beyond the table raises).  Each
    hypothetical zero with t > 0 stands for itself and its conjugate.
    """
    if not 0.0 < b < 1.0:
        raise ValueError("need 0 < b < 1")
    if not R > 0:
        raise ValueError("need R > 0")
    terms = []
    if catalog is not None and b < 0.5:
        ords = catalog.values if T is None else ordinates_up_to(catalog, T)
        d = 0.5 - b
        terms.extend(-4.0 * math.pi * d / (d * d + ords * ords))
    for z in hypo:
        d = z.sigma - b
        if d > 0:
            terms.append(-4.0 * math.pi * z.multiplicity * d / (d * d + z.t * z.t))
    total = 1j * math.fsum(terms)
    if b + R < 1.0:
        total += 2j * math.pi * (1.0 / (1.0 - b) - 1.0 / R)
    return total


def remark1_closed_form(a, b) -> float:
    """Integral over the real t axis of ln|b - 1 + i t| / (a^2 + t^2): (pi/a) ln(a - b + 1)."""
    if not a > 0:
        raise ValueError("need a > 0")
    if not b < 1:
        raise ValueError("need b < 1")
    return math.pi / a * math.log(a - b + 1.0)


def remark1_quadrature(a, b, tol=1e-12) -> float:
    c2 = (1.0 - b) ** 2

    def f(t):
        return 0.5 * np.log(c2 + t * t) / (a * a + t * t)

    split = max(1.0, 4.0 * a)
    head = integrate_finite(f, 0.0, split, tol)
    tail = integrate_semi_infinite(f, split, tol)
    return 2.0 * (head.value + tail.value)


def remark3_closed_form(alpha) -> float:
    """Integral over t > 0 of ln|-1/2 + alpha + i t| / ((1/2 - alpha)^2 + t^2)^(3/2)."""
    a = 0.5 - alpha
    return (psi_three_halves() + EULER_GAMMA + 2.0 * math.log(a)) / (2.0 * a * a)


def remark3_quadrature(alpha, tol=1e-12) -> float:
    a2 = (0.5 - alpha) ** 2

    def f(t):
        return 0.5 * np.log(a2 + t * t) / (a2 + t * t) ** 1.5

    # The integral grows like ln(a) / a^2; keep the tolerance relative to it.
    tol = tol * max(1.0, 1.0 / a2)
    split = max(1.0, 4.0 * math.sqrt(a2))
    head = integrate_finite(f, 0.0, split, tol)
    tail = integrate_semi_infinite(f, split, tol, decay_exponent=3.0)
    return head.value + tail.value


# ---------------------------------------------------------------------------
# Truncation tails
# ---------------------------------------------------------------------------

def mean_numerator(b, with_factor, kind="modulus"):
    """Smooth large-t model of the part of the line integrand left unbalanced.

    ln|zeta(b + i t)| averages to 0 for b >= 1/2.  For b < 1/2 it grows like
    (1/2 - b) ln(t / 2 pi), but the zero sum is truncated at the same T and
    its missing terms cancel that growth to leading order, so it is left
    out.  The (z - 1) factor adds ln|b - 1 + i t| to the modulus and
    arg(b - 1 + i t) to the argument.
    """
    def m(t):
        if not with_factor:
            return np.zeros_like(t)
        if kind == "arg":
            return np.arctan2(t, b - 1.0)
        return 0.5 * np.log((1.0 - b) ** 2 + t * t)
    return m


def tail_integral(m, a, power, T, tol=1e-12) -> float:
    """Integral over t > T of m(t) / (a^2 + t^2)^power."""
    return integrate_semi_infinite(lambda t: m(t) / (a * a + t * t) ** power, T, tol,
                                   decay_exponent=2.0 * power).value


def tail_envelope(a, power, T, tol=1e-12) -> float:
    """Integral over t > T of ln(t) / (a^2 + t^2)^power: the fluctuation allowance."""
    return tail_integral(np.log, a, power, max(T, math.e), tol)
