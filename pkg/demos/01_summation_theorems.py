"""
Closed-form sums versus direct summation
========================================

Every closed form in ``hyperxf.summations`` has a matching series builder,
so each value can be checked against plain term-by-term summation in exact
rational arithmetic.
"""

from fractions import Fraction as F

from hyperxf import summations as S
from hyperxf.series import eval_terminating, excess

# A 4F3(1) with a unit-shift pair (p+1 over p).  The auxiliary q is the
# only new ingredient compared with Pfaff-Saalschutz.
a, b, c, p, n = F(1, 2), F(2, 3), F(11, 4), F(-3, 5), 4
closed = S.sum_rakha_rathie(a, b, c, p, n)
series = S.rakha_rathie_series(a, b, c, p, n)
print("aux q          =", closed.aux["q"])
print("closed form    =", closed.value)
print("direct sum     =", eval_terminating(series))
print("excess         =", excess(series))

# Setting p = b collapses the pair (b, b+1) and leaves a balanced 3F2 with
# numerator b+1, so Pfaff-Saalschutz must be applied with b shifted.
at_b = S.sum_rakha_rathie(a, b, c, b, n).value
print("p=b            =", at_b)
print("PS(a, b+1, c)  =", S.pfaff_saalschutz(a, b + 1, c, n).value)
print("PS(a, b, c)    =", S.pfaff_saalschutz(a, b, c, n).value, "(unshifted, differs)")

# The very-well-poised 9F8 sum behaves the same way against Dougall.
d = F(1, 7)
print("9F8 at p=b     =", S.sum_svf_9f8(a, b, c, d, b, n).value)
print("Dougall b+1    =", S.dougall(a, b + 1, c, d, n).value)

# Degenerate inputs are named, not silently infinite.
try:
    S.sum_ext_chu_vandermonde(2, 5, 2, 3)
except ValueError as exc:
    print("p = a          ->", exc)
