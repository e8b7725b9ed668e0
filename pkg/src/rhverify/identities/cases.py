"""Case descriptions and result containers for the identity evaluators."""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from ..zeta import DEFAULT_PARAMS, ZetaParams


class Theorem(str, enum.Enum):
    EQ2 = "EQ2"
    THM3 = "THM3"
    THM4 = "THM4"
    THM5 = "THM5"
    THM6 = "THM6"
    THM7 = "THM7"
    EQ7 = "EQ7"
    EQ8 = "EQ8"
    B_GT_1 = "B_GT_1"
    WANG = "WANG"


# Identities parameterised by alpha (a = 1/2 - alpha, b = 1/2 + alpha, or
# b = 1/2 - alpha for the two b < 1/2 forms).
ALPHA_FAMILY = {Theorem.THM4, Theorem.THM5, Theorem.THM6, Theorem.THM7,
                Theorem.EQ7, Theorem.EQ8}

# Wang's semicircle must stay below the first zero ordinate.
WANG_MAX_RADIUS = 14.0


def _need(value, name, theorem):
    if value is None:
        raise ValueError(f"{theorem.value} needs parameter {name}")
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite")
    return float(value)


@dataclass(frozen=True)
class CaseSpec:
    """One identity instance.

    ``a``/``b`` are used by EQ2, THM3, B_GT_1 and WANG (which also takes the
    semicircle radius ``R``); ``alpha`` by THM4..THM7, EQ7 and EQ8.  EQ7 also
    takes ``a``; EQ8 forces a = 1/2 - alpha.
    """

    theorem: Theorem
    T: float
    a: float | None = None
    b: float | None = None
    alpha: float | None = None
    R: float | None = None
    tol: float = 1e-10
    zeta_params: ZetaParams = DEFAULT_PARAMS
    case_id: str = ""

    def __post_init__(self):
        th = Theorem(self.theorem)
        object.__setattr__(self, "theorem", th)
        if not (self.T > 0 and math.isfinite(self.T)):
            raise ValueError("T must be a positive finite height")
        if not self.tol > 0:
            raise ValueError("tol must be positive")

        if th in ALPHA_FAMILY:
            alpha = _need(self.alpha, "alpha", th)
            if th in (Theorem.EQ7, Theorem.EQ8):
                if not 0.0 < alpha < 0.5:
                    raise ValueError(f"{th.value} needs 0 < alpha < 1/2")
            elif not 0.0 <= alpha < 0.5:
                raise ValueError(f"{th.value} needs 0 <= alpha < 1/2")
            if th is Theorem.EQ7:
                if _need(self.a, "a", th) <= 0:
                    raise ValueError("a must be positive")
            elif th is Theorem.EQ8 and self.a is not None:
                if not math.isclose(self.a, 0.5 - alpha, rel_tol=0, abs_tol=1e-15):
                    raise ValueError("EQ8 forces a = 1/2 - alpha")
            return

        b = _need(self.b, "b", th)
        if th is not Theorem.WANG and _need(self.a, "a", th) <= 0:
            raise ValueError("a must be positive")
        if th is Theorem.EQ2:
            # b < 1/2 is accepted and routed to the EQ7 evaluator.
            if not 0.0 < b < 1.0:
                raise ValueError("EQ2 needs 0 < b < 1")
        elif th is Theorem.THM3:
            if not 0.5 <= b < 1.0:
                raise ValueError("THM3 needs 1/2 <= b < 1")
            if abs(self.a + b - 1.0) < 1e-12:
                raise ValueError("THM3 needs a + b != 1 (use THM4)")
        elif th is Theorem.B_GT_1:
            if not b > 1.0:
                raise ValueError("B_GT_1 needs b > 1")
        elif th is Theorem.WANG:
            if not 0.0 < b < 1.0:
                raise ValueError("WANG needs 0 < b < 1")
            R = _need(self.R, "R", th)
            if not 0.0 < R < WANG_MAX_RADIUS:
                raise ValueError(f"WANG needs 0 < R < {WANG_MAX_RADIUS}")
            if abs(b + R - 1.0) < 1e-9:
                raise ValueError("the semicircle may not pass through the pole at 1")
            if R >= self.T:
                raise ValueError("WANG needs R < T")

    @property
    def line_a(self) -> float:
        """The kernel half-width a of g(z) = 1/(a^2 - (z - b)^2)."""
        if self.theorem in (Theorem.THM4, Theorem.THM5, Theorem.THM6, Theorem.THM7,
                            Theorem.EQ8):
            return 0.5 - self.alpha
        if self.theorem is Theorem.WANG:
            return 0.0
        return float(self.a)

    @property
    def line_b(self) -> float:
        """Abscissa of the vertical integration line."""
        if self.theorem in (Theorem.EQ7, Theorem.EQ8):
            return 0.5 - self.alpha
        if self.theorem in ALPHA_FAMILY:
            return 0.5 + self.alpha
        return float(self.b)

    @property
    def b_or_alpha(self) -> float:
        return float(self.alpha) if self.theorem in ALPHA_FAMILY else float(self.b)

    def label(self) -> str:
        return self.case_id or f"{self.theorem.value}@T={self.T:g}"


@dataclass(frozen=True)
class TermBreakdown:
    """Both sides of one identity, term by term.

    ``lhs`` and ``rhs`` are assembled per the identity's own arrangement,
    listed with each evaluator; ``residual`` is lhs - rhs.
    """

    line_integral: float
    closed_form: float = 0.0
    pole_term: float = 0.0
    zero_sum: float = 0.0
    sigma_integral: float = 0.0
    lhs: float = 0.0
    rhs: float = 0.0
    residual: float = 0.0
    zeros_used: int = 0


@dataclass(frozen=True)
class ResidualReport:
    spec: CaseSpec
    breakdown: TermBreakdown
    err_estimate: float
    wall_time: float = 0.0
    tail_estimate: float = 0.0
    tail_bound: float = 0.0
    notes: dict = field(default_factory=dict)

    @property
    def residual(self) -> float:
        return self.breakdown.residual

    @property
    def residual_with_tail(self) -> float:
        """Residual after adding the analytic tail estimate to the line integral."""
        return self.breakdown.residual + self.tail_estimate
