"""Exact rational scalars, rising factorials and truncated power series.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import NotInvertible, OrderMismatch

Rat = Fraction

__all__ = [
    "Rat",
    "rat",
    "rat_str",
    "poch",
    "paired_poch",
    "PowerSeries",
    "ps_const",
    "ps_x",
    "ps_add",
    "ps_sub",
    "ps_scale",
    "ps_mul",
    "ps_invert",
    "ps_binomial_one_minus_x",
    "ps_linear",
]


def rat(value) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def rat_str(q: Fraction) -> str:
    """Canonical ``num/den`` string (denominator always written)."""
    q = rat(q)
    return f"{q.numerator}/{q.denominator}"


def poch(a, k: int) -> Fraction:
    """Rising factorial a(a+1)...(a+k-1); 1 when k == 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    a = rat(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def paired_poch(s, g2, k: int) -> Fraction:
    """(s - g)_k (s + g)_k where g**2 == g2, without taking a square root.

    Each factor (s+j-g)(s+j+g) is (s+j)**2 - g2, so the product stays
    rational even when g2 is negative or not a perfect square.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    s, g2 = rat(s), rat(g2)
    out = Fraction(1)
    for j in range(k):
        out *= (s + j) ** 2 - g2
    return out


@dataclass(frozen=True)
class PowerSeries:
    """Power series in x truncated after x**order."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a power series needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(rat(c) for c in self.coeffs))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def evaluate(self, x) -> Fraction:
        """Evaluate the truncated polynomial at a rational point (Horner)."""
        x = rat(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other):
        return ps_add(self, other)

    def __sub__(self, other):
        return ps_sub(self, other)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return ps_mul(self, other)
        return ps_scale(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return ps_scale(self, -1)

    def __repr__(self):
        return "PowerSeries([" + ", ".join(str(c) for c in self.coeffs) + "])"


def _check_orders(a: PowerSeries, b: PowerSeries):
    if a.order != b.order:
        raise OrderMismatch(f"order mismatch: {a.order} != {b.order}")


def ps_const(c, order: int) -> PowerSeries:
    return PowerSeries((rat(c),) + (Fraction(0),) * order)


def ps_x(order: int) -> PowerSeries:
    """The series x itself (zero when order is 0)."""
    coeffs = [Fraction(0)] * (order + 1)
    if order >= 1:
        coeffs[1] = Fraction(1)
    return PowerSeries(tuple(coeffs))


def ps_linear(c0, c1, order: int) -> PowerSeries:
    """c0 + c1*x."""
    coeffs = [Fraction(0)] * (order + 1)
    coeffs[0] = rat(c0)
    if order >= 1:
        coeffs[1] = rat(c1)
    return PowerSeries(tuple(coeffs))


def ps_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_orders(a, b)
    return PowerSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))


def ps_sub(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _check_orders(a, b)
    return PowerSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))


def ps_scale(a: PowerSeries, c) -> PowerSeries:
    c = rat(c)
    return PowerSeries(tuple(c * x for x in a.coeffs))


def ps_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common order."""
    _check_orders(a, b)
    n = a.order
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n + 1):
        s = Fraction(0)
        for i in range(k + 1):
            if ac[i] and bc[k - i]:
                s += ac[i] * bc[k - i]
        out.append(s)
    return PowerSeries(tuple(out))


def ps_invert(p: PowerSeries) -> PowerSeries:
    """Multiplicative inverse; the constant term must be nonzero."""
    c0 = p.coeffs[0]
    if c0 == 0:
        raise NotInvertible("not invertible as a power series")
    n = p.order
    inv = [Fraction(0)] * (n + 1)
    inv[0] = 1 / c0
    for k in range(1, n + 1):
        s = Fraction(0)
        for i in range(1, k + 1):
            if p.coeffs[i]:
                s += p.coeffs[i] * inv[k - i]
        inv[k] = -s / c0
    return PowerSeries(tuple(inv))


def ps_binomial_one_minus_x(alpha, order: int) -> PowerSeries:
    """(1 - x)**alpha; the x**k coefficient is (-alpha)_k / k!."""
    if order < 0:
        raise ValueError("order must be non-negative")
    alpha = rat(alpha)
    coeffs = [Fraction(1)]
    for k in range(1, order + 1):
        coeffs.append(coeffs[-1] * (k - 1 - alpha) / k)
    return PowerSeries(tuple(coeffs))


def ps_product(factors: Iterable[PowerSeries], order: int) -> PowerSeries:
    out = ps_const(1, order)
    for f in factors:
        out = ps_mul(out, f)
    return out
