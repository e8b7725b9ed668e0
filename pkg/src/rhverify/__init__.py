"""Numerical checks of integral identities equivalent to the Riemann hypothesis.

Submodules:

* ``zeta``: Euler-Maclaurin zeta and branch-tracked logarithms.
* ``quadrature``: adaptive Gauss-Kronrod / tanh-sinh integration.
* ``zeros``: Odlyzko-format ordinate tables.
* ``identities``: both sides of each identity, term by term.
* ``report`` and ``cli``: batch runs and the ``verifier`` command.
"""
from .errors import (
    DegenerateArgument, MaxSubdivisions, OrderError, ParamsInsufficient, ParseError,
    PoleAtOne, RangeError, TruncationExceedsTable, VerifierError, ZeroOnPath,
)
from .identities import CaseSpec, ResidualReport, Theorem, evaluate
from .quadrature import (
    QuadratureResult, SingularityHint, integrate_finite, integrate_semi_infinite,
    integrate_symmetric_line,
)
from .zeros import HypotheticalZero, ZeroCatalog, load_odlyzko, load_reference, zeros_up_to
# The zeta function itself stays in rhverify.zeta so that the submodule name
# is not shadowed.
from .zeta import ZetaParams, log_zeta_times_zminus1_tracked, log_zeta_tracked, psi_three_halves

__version__ = "0.1.0"

__all__ = [
    "CaseSpec", "DegenerateArgument", "HypotheticalZero", "MaxSubdivisions", "OrderError",
    "ParamsInsufficient", "ParseError", "PoleAtOne", "QuadratureResult", "RangeError",
    "ResidualReport", "SingularityHint", "Theorem", "TruncationExceedsTable",
    "VerifierError", "ZeroCatalog", "ZeroOnPath", "ZetaParams", "evaluate",
    "integrate_finite", "integrate_semi_infinite", "integrate_symmetric_line",
    "load_odlyzko", "load_reference", "log_zeta_times_zminus1_tracked", "log_zeta_tracked",
    "psi_three_halves", "zeros_up_to",
]
