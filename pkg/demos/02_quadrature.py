# coding: utf-8
"""Adaptive quadrature on finite, singular and semi-infinite ranges.

Run: python3 demos/02_quadrature.py
"""
import math

import numpy as np

from rhverify.quadrature import SingularityHint, integrate_finite, integrate_semi_infinite

# ## A smooth, oscillating integrand
res = integrate_finite(lambda x: np.cos(40 * x) * np.exp(-x), 0.0, 3.0, 1e-12)
exact = (np.exp(-3.0) * (40 * np.sin(120.0) - np.cos(120.0)) + 1) / 1601
print(f"value {res.value:.16f}  error {abs(res.value - exact):.1e}  "
      f"estimate {res.err_estimate:.1e}  panels {res.n_panels}")

# ## Endpoint singularities
# Hints route the panel touching a singularity through tanh-sinh, which
# never samples the endpoint itself.

log_hint = SingularityHint(0.0, "logarithmic", "left")
res = integrate_finite(lambda x: np.log(x), 0.0, 1.0, 1e-13, hints=[log_hint])
print("int_0^1 ln x =", res.value)

sqrt_hint = SingularityHint(1.0, "inverse_sqrt", "right")
res = integrate_finite(lambda x: 1 / np.sqrt(1 - x), 0.0, 1.0, 1e-13, hints=[sqrt_hint])
print("int_0^1 (1-x)^-1/2 =", res.value)

# ## Half lines
# x = lo - 1 + 1/u folds [lo, inf) onto (0, 1].  decay_exponent tells the
# rule how fast the integrand falls off.

res = integrate_semi_infinite(lambda t: np.log(t) / (1 + t * t), 1.0, 1e-12)
print("int_1^inf ln t/(1+t^2) =", res.value, " Catalan:", 0.915965594177219)

res = integrate_semi_infinite(lambda t: 1 / (0.25 + t * t), 0.0, 1e-12)
print("int_0^inf 1/(1/4+t^2) =", res.value, " pi:", math.pi)

# ## Split points
# Known kinks or near-singular points can be passed in; the result does
# not depend on them beyond roundoff.
f = lambda x: np.abs(x - 0.3)
print(integrate_finite(f, 0.0, 1.0, 1e-12).value,
      integrate_finite(f, 0.0, 1.0, 1e-12, split_points=[0.3]).value)
