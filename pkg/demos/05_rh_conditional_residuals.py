# coding: utf-8
"""Residuals of the RH-equivalent identities, and what an off-line zero does.

Run: python3 demos/05_rh_conditional_residuals.py
"""
from rhverify.identities import CaseSpec, Theorem, evaluate
from rhverify.zeros import HypotheticalZero, load_reference

cat = load_reference()

# ## Truncation
# Every identity is integrated up to a finite T.  The raw residual decays
# like a power of T (times logs); the tail estimate accounts for most of it.

for theorem, kw in ((Theorem.THM4, dict(alpha=0.0)), (Theorem.THM5, dict(alpha=0.25)),
                    (Theorem.THM6, dict(alpha=0.1)), (Theorem.THM7, dict(alpha=0.1))):
    for T in (100.0, 300.0):
        r = evaluate(CaseSpec(theorem, T, **kw), cat)
        print(f"{theorem.value:5s} T={T:5.0f}  residual {r.residual:+.3e}  "
              f"with tail {r.residual_with_tail:+.3e}  bound {r.tail_bound:.1e}")

# ## A zero off the critical line
# Feed a hypothetical zero at 0.9 + 50i.  The identity picks up a term the
# zero sums would otherwise not have, so the residual jumps by a fixed
# amount that no increase in T removes.

spec = CaseSpec(Theorem.THM5, 100.0, alpha=0.25)
clean = evaluate(spec, cat)
dirty = evaluate(spec, cat, hypo=[HypotheticalZero(0.9, 50.0)])
print("shift from one off-line zero:", dirty.residual - clean.residual)

# A zero left of the line (its mirror would be on the right) is ignored by
# the right-half-plane sums.
left = evaluate(spec, cat, hypo=[HypotheticalZero(0.3, 50.0)])
print("left-of-line zero changes residual by", left.residual - clean.residual)
