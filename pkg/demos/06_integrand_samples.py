# coding: utf-8
"""Sampling a line integrand for plotting elsewhere.

Run: python3 demos/06_integrand_samples.py > samples.csv
"""
import sys

import numpy as np

from rhverify.identities import CaseSpec, Theorem
from rhverify.report import dump_integrand, samples_to_text

# ln|zeta(1/4 + it)| / (1 + t^2), the line integrand of the a=1, b=1/4 case.
# It dips at each zero ordinate; the other minima come from the oscillation.

spec = CaseSpec(Theorem.EQ2, 50.0, a=1.0, b=0.25)
t, y = dump_integrand(spec, 0.0, 50.0, 5000)
inner = np.nonzero((y[1:-1] < y[:-2]) & (y[1:-1] < y[2:]))[0] + 1
print("local minima near:", np.round(t[inner], 3), file=sys.stderr)

sys.stdout.write(samples_to_text(t, y))
