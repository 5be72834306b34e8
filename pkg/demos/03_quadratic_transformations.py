"""
Quadratic transformations as formal power series
================================================

Both sides are expanded in x to order N.  The right side uses the argument
-4x/(1-x)^2 and, for the 6F5 case, an x-dependent parameter
delta = (q + (a-q)x)/(1+x) that enters each term as (delta+k)/delta.
At x = -1 that parameter blows up, which is where the termwise limit goes
wrong.
"""

import math
from fractions import Fraction as F

from hyperxf import ParamEnv, instantiate, residual

env = ParamEnv({"a": F(3, 2), "b": F(1, 3), "c": F(-2, 5), "p": F(4, 7), "q": F(5, 2)})
inst = instantiate("prop-6P1", env, order=8)
print("lhs coefficients:", [str(c) for c in inst.lhs.evaluate_formal(8)])
print("rhs coefficients:", [str(c) for c in inst.rhs.evaluate_formal(8)])
print("difference zero :", residual(inst).is_zero())

# The x = -1 specialization, checked numerically with fixed-point sums.
env = ParamEnv({"a": 6, "b": F(1, 2), "c": 1, "p": F(4, 3), "q": F(-1, 3)})
inst = instantiate("cor-3C6P1", env)
_, diag = residual(inst)
lhs, rhs = float(diag["lhs_estimate"]), float(diag["rhs_estimate"])
print(f"6F5(-1) ~ {lhs:.9f}   printed right side ~ {rhs:.9f}")

# The missing piece: with excess 1/2 the sum of k c_k Z^k grows like
# 1/(1+x), cancelling the 1/delta and leaving a finite term.
v = inst.values
extra = (math.gamma(1 + v.a - v.b) * math.gamma(1 + v.a - v.c)
         / (2 * v.q * v.gamma * math.gamma(v.a) * math.gamma(v.a - v.b - v.c)))
print(f"boundary term     ~ {float(extra):.9f}")
print(f"right side + term ~ {rhs + float(extra):.9f}")

# Whipple's 3F2(-1) has no such parameter and matches directly.
inst = instantiate("eq-3e6", ParamEnv({"a": 3, "b": F(1, 4), "c": F(-1, 2)}))
_, diag = residual(inst)
print("3F2(-1):", float(diag["lhs_estimate"]), "vs", float(diag["rhs_estimate"]))
