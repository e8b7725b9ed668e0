# coding: utf-8
"""Evaluating zeta off the real axis and following its logarithm.

Run: python3 demos/01_zeta_and_tracked_log.py
"""
import numpy as np

from rhverify.zeta import (ZetaParams, log_zeta_tracked, log_zeta_times_zminus1_tracked, zeta,
                           zeta_grid)

# ## Point values
# Euler-Maclaurin with a cutoff that grows with |t|, so the same call works
# near the real axis and at height 1000.

for s in (2.0, 0.5 + 14.134725142j, 0.25 + 1000j):
    print(f"zeta({s}) = {zeta(s):.15g}")

print("zeta(2) - pi^2/6 =", zeta(2.0).real - np.pi ** 2 / 6)

# The direct-sum length and Bernoulli order are tunable; doubling the
# length should not move the answer.
coarse = zeta(0.3 + 500j, ZetaParams(n_terms=50))
fine = zeta(0.3 + 500j, ZetaParams(n_terms=400))
print("n_terms 50 vs 400:", abs(coarse - fine))

# ## Grids
# A rectangle of sigma x t values in one call; rows share the phase table.

sig = np.linspace(0.25, 0.75, 3)
t = np.linspace(10.0, 30.0, 5)
print(np.round(np.abs(zeta_grid(sig, t)), 4))

# ## Tracked logarithm
# log zeta continued leftwards from sigma = 4.  The imaginary part is
# arg zeta with no 2 pi jumps; windings says how far it sits from the
# principal value.

for height in (100.0, 1000.0, 5000.0):
    lg = log_zeta_tracked(0.5, height)
    print(f"t={height:7.1f}  arg={lg.value.imag:+.6f}  windings={lg.windings}")

# Right on a zero the logarithm is undefined.  With the catalogue supplied
# the guard catches it; pick a side to get the one-sided limit.
t1 = 14.134725141734694
above = log_zeta_tracked(0.5, t1, zero_ordinates=[t1], side=+1).value.imag
below = log_zeta_tracked(0.5, t1, zero_ordinates=[t1], side=-1).value.imag
# The jump is -pi up to |zeta| roundoff so close to the zero.
print("arg jump across the first zero / pi:", (below - above) / np.pi)

# (z - 1) zeta(z) has no pole, so the log near z = 1 is tame.
print(log_zeta_times_zminus1_tracked(1.0, 0.0).value)
