"""
Conjugate parameter pairs without square roots
==============================================

The 13F12 transformation carries three offsets gamma, delta, eps that are
only ever defined through their squares.  A pair ``(center, square)``
contributes ``(center - g)_k (center + g)_k`` which is a polynomial in
``g**2``, so nothing irrational is ever formed, even when a square is
negative.
"""

from fractions import Fraction as F

from hyperxf import ParamEnv, instantiate, residual
from hyperxf.arith import paired_poch, poch

# (s-t)_k (s+t)_k versus the paired product, with t = 3/2
s, t, k = F(1, 3), F(3, 2), 4
print(poch(s - t, k) * poch(s + t, k), "==", paired_poch(s, t * t, k))
print("negative square:", paired_poch(s, F(-2), k))

env = ParamEnv({"a": F(7, 2), "b": F(1, 3), "c": F(-2, 5), "d": F(3, 4), "e": F(1, 5),
                "f": F(-5, 3), "p": F(2, 7), "q": F(5, 4)}, n=3)
inst = instantiate("prop-13P3", env)
for name in ("g", "lambda", "mu", "gamma_sq", "delta_sq", "eps_sq"):
    print(f"{name:9} = {inst.values[name]}")

print("lhs      =", inst.lhs.evaluate_exact())
print("rhs      =", inst.rhs.evaluate_exact())
print("residual =", residual(inst))
print("structural failures:", inst.structural_failures())
