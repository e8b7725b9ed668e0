"""Both sides of the integral identities, term by term."""
from .cases import CaseSpec, ResidualReport, TermBreakdown, Theorem
from .evaluators import (
    EVALUATORS, eval_b_gt_1, eval_eq2, eval_eq7_eq8, eval_thm3, eval_thm4, eval_thm5,
    eval_thm6, eval_thm7, eval_wang, evaluate,
)
from .terms import (
    IMAG_PART, REAL_PART, bsy_term, eq8_term, pole_term_ipol, remark1_closed_form,
    remark1_quadrature, remark3_closed_form, remark3_quadrature, wang_sum, zero_term_eq1,
    zero_term_modulus, zero_term_p_closed, zero_term_p_integral, zero_term_threehalves,
    zero_term_threehalves_closed,
)

__all__ = [
    "CaseSpec", "ResidualReport", "TermBreakdown", "Theorem", "EVALUATORS", "evaluate",
    "eval_b_gt_1", "eval_eq2", "eval_eq7_eq8", "eval_thm3", "eval_thm4", "eval_thm5",
    "eval_thm6", "eval_thm7", "eval_wang", "IMAG_PART", "REAL_PART", "bsy_term", "eq8_term",
    "pole_term_ipol", "remark1_closed_form", "remark1_quadrature", "remark3_closed_form",
    "remark3_quadrature", "wang_sum", "zero_term_eq1", "zero_term_modulus",
    "zero_term_p_closed", "zero_term_p_integral", "zero_term_threehalves",
    "zero_term_threehalves_closed",
]
