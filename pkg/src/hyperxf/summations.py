"""Closed-form sums of terminating unit-argument series.

Each ``sum_*`` function returns a :class:`ClosedForm` holding the exact value
and the auxiliary parameters it had to compute.  A matching ``*_series``
builder returns the left-hand series, so every closed form can be checked
against direct summation.  Degenerate inputs raise
:class:`~hyperxf.errors.DegenerateError` naming the vanishing expression.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict

from .arith import poch, rat
from .errors import DegenerateError
from .series import SeriesSpec, Terminating


@dataclass(frozen=True)
class ClosedForm:
    value: Fraction
    aux: Dict[str, Fraction] = field(default_factory=dict)


def aux_div(num, den, what: str) -> Fraction:
    """num/den, raising a named degeneracy when den is zero."""
    if den == 0:
        raise DegenerateError("aux-denominator-zero", f"{what} = 0")
    return Fraction(num) / den


def poch_ratio(num_bases, den_bases, n: int, where: str = "closed form") -> Fraction:
    """prod (u)_n / prod (v)_n with a named error for a zero denominator."""
    top = Fraction(1)
    for u in num_bases:
        top *= poch(u, n)
    bot = Fraction(1)
    for v in den_bases:
        p = poch(v, n)
        if p == 0:
            raise DegenerateError("degenerate-closed-form", f"({v})_{n} = 0 in {where}")
        bot *= p
    return top / bot


def _unit(upper, lower, n, upper_pairs=(), lower_pairs=()):
    return SeriesSpec(upper, lower, upper_pairs, lower_pairs, Fraction(1), Terminating(n))


# -- classical baselines ----------------------------------------------------

def chu_vandermonde_series(a, b, n):
    return _unit([a, -n], [b], n)


def chu_vandermonde(a, b, n: int) -> ClosedForm:
    """2F1(a, -n; b; 1) = (b-a)_n / (b)_n."""
    a, b = rat(a), rat(b)
    return ClosedForm(poch_ratio([b - a], [b], n, "Chu-Vandermonde"))


def pfaff_saalschutz_series(a, b, c, n):
    a, b, c = rat(a), rat(b), rat(c)
    return _unit([a, b, -n], [c, 1 + a + b - c - n], n)


def pfaff_saalschutz(a, b, c, n: int) -> ClosedForm:
    """Balanced 3F2(a, b, -n; c, 1+a+b-c-n; 1)."""
    a, b, c = rat(a), rat(b), rat(c)
    return ClosedForm(poch_ratio([c - a, c - b], [c, c - a - b], n, "Pfaff-Saalschutz"))


def dougall_series(a, b, c, d, n):
    a, b, c, d = rat(a), rat(b), rat(c), rat(d)
    e = 1 + 2 * a - b - c - d + n
    return _unit([a, 1 + a / 2, b, c, d, e, -n],
                 [a / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a + n], n)


def dougall(a, b, c, d, n: int) -> ClosedForm:
    """Terminating very-well-poised 7F6(1); the fifth numerator e is fixed by
    1 + 2a = b + c + d + e - n."""
    a, b, c, d = rat(a), rat(b), rat(c), rat(d)
    e = 1 + 2 * a - b - c - d + n
    value = poch_ratio(
        [1 + a, 1 + a - b - c, 1 + a - b - d, 1 + a - c - d],
        [1 + a - b, 1 + a - c, 1 + a - d, 1 + a - b - c - d],
        n, "Dougall",
    )
    return ClosedForm(value, {"e": e})


def whipple_4f3_series_pair(a, b, c, d, e, n):
    """Both sides of the Whipple transform of balanced 4F3(1) series.

    f is fixed by the balance condition d + e + f = a + b + c - n + 1.
    Returns (lhs_series, prefactor, rhs_series).
    """
    a, b, c, d, e = map(rat, (a, b, c, d, e))
    f = 1 + a + b + c - d - e - n
    lhs = _unit([a, b, c, -n], [d, e, f], n)
    pre = poch_ratio([e - c, f - c], [e, f], n, "Whipple 4F3 prefactor")
    rhs = _unit([d - a, d - b, c, -n], [d, 1 + c - e - n, 1 + c - f - n], n)
    return lhs, pre, rhs


# -- extended Chu-Vandermonde ---------------------------------------------

def ext_chu_vandermonde_series(a, b, p, n):
    a, b, p = rat(a), rat(b), rat(p)
    return _unit([a, p + 1, -n], [b, p], n)


def sum_ext_chu_vandermonde(a, b, p, n: int) -> ClosedForm:
    """3F2(a, p+1, -n; b, p; 1), a numerator exceeding a denominator by one."""
    a, b, p = rat(a), rat(b), rat(p)
    q = aux_div(p * (b - a - 1), p - a, "p - a")
    value = poch_ratio([b - a - 1, q + 1], [b, q], n, "extended Chu-Vandermonde")
    return ClosedForm(value, {"q": q})


# -- Rakha-Rathie 4F3 and its two rewrites -----------------------------------

def rakha_rathie_q(a, b, c, p) -> Fraction:
    return aux_div(p * (c - a - 1) * (c - b - 1), a * b + p * (c - a - b - 1),
                   "ab + p(c-a-b-1)")


def rakha_rathie_series(a, b, c, p, n):
    a, b, c, p = map(rat, (a, b, c, p))
    return _unit([a, b, p + 1, -n], [c, p, 2 + a + b - c - n], n)


def sum_rakha_rathie(a, b, c, p, n: int) -> ClosedForm:
    """Balanced 4F3(a, b, p+1, -n; c, p, 2+a+b-c-n; 1)."""
    a, b, c, p = map(rat, (a, b, c, p))
    q = rakha_rathie_q(a, b, c, p)
    value = poch_ratio([c - a - 1, c - b - 1, q + 1], [c, c - a - b - 1, q], n,
                       "Rakha-Rathie sum")
    return ClosedForm(value, {"q": q})


def rr_formA_gamma(a, b, c, p) -> Fraction:
    return aux_div(p * (a - p) * (b + c - a), b * c - p * (a - p), "bc - p(a-p)")


def rr_formA_series(a, b, c, p, n):
    a, b, c, p = map(rat, (a, b, c, p))
    g = rr_formA_gamma(a, b, c, p)
    return _unit([a - b - c, g + 1, a + n, -n], [1 + a - b, 1 + a - c, g], n)


def sum_rr_formA(a, b, c, p, n: int) -> ClosedForm:
    a, b, c, p = map(rat, (a, b, c, p))
    g = rr_formA_gamma(a, b, c, p)
    value = poch_ratio([b, c, a - p + 1, p + 1], [1 + a - b, 1 + a - c, p, a - p], n,
                       "Rakha-Rathie form A")
    return ClosedForm(value, {"gamma1": g})


def rr_formB_series(a, b, c, p, n):
    a, b, c, p = map(rat, (a, b, c, p))
    g = rakha_rathie_q(a, b, c, p)
    return _unit([c - a - 1, c - b - 1, g + 1, -n], [c, g, c - a - b - n], n)


def sum_rr_formB(a, b, c, p, n: int) -> ClosedForm:
    a, b, c, p = map(rat, (a, b, c, p))
    g = rakha_rathie_q(a, b, c, p)
    value = poch_ratio([a, b, p + 1], [c, 1 + a + b - c, p], n, "Rakha-Rathie form B")
    return ClosedForm(value, {"gamma2": g})


# -- 9F8 extension of Dougall --------------------------------------------------

def svf_alpha(a, b, c, d, p, n) -> Fraction:
    num = p * (a - p) * (a - b - c) * (a - b - d) * (a - c - d)
    den = (2 * a - b - c - d + n) * (b * c * d + p * (a - p) * (a - b - c - d))
    return aux_div(num, den, "(2a-b-c-d+n)(bcd + p(a-p)(a-b-c-d))")


def svf_9f8_series(a, b, c, d, p, n):
    a, b, c, d, p = map(rat, (a, b, c, d, p))
    return _unit(
        [a, 1 + a / 2, b, c, d, 2 * a - b - c - d + n, a - p + 1, p + 1, -n],
        [a / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + b + c + d - a - n, p, a - p, 1 + a + n],
        n,
    )


def sum_svf_9f8(a, b, c, d, p, n: int) -> ClosedForm:
    """Very-well-poised 9F8(1) with two unit-shift parameter pairs."""
    a, b, c, d, p = map(rat, (a, b, c, d, p))
    alpha = svf_alpha(a, b, c, d, p, n)
    value = poch_ratio(
        [1 + a, a - b - c, a - b - d, a - c - d, alpha + 1],
        [1 + a - b, 1 + a - c, 1 + a - d, a - b - c - d, alpha],
        n, "9F8 sum",
    )
    return ClosedForm(value, {"alpha": alpha})


def svf_gamma_sq(a, b, c, d, p) -> Fraction:
    """Square of the conjugate-pair offset, lam**2/4 - (...)/(...)."""
    lam = 2 * a - b - c - d
    frac = aux_div(p * (a - p) * (a - b - c) * (a - b - d) * (a - c - d),
                   b * c * d + p * (a - p) * (a - b - c - d),
                   "bcd + p(a-p)(a-b-c-d)")
    return lam * lam / 4 - frac


def svf_formB_series(a, b, c, d, p, n):
    a, b, c, d, p = map(rat, (a, b, c, d, p))
    lam = 2 * a - b - c - d
    g2 = svf_gamma_sq(a, b, c, d, p)
    return _unit(
        [lam, 1 + lam / 2, lam + b - a, lam + c - a, lam + d - a, a + n, -n],
        [lam / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + lam - a - n, 1 + lam + n],
        n,
        upper_pairs=[(lam / 2 + 1, g2)],
        lower_pairs=[(lam / 2, g2)],
    )


def sum_svf_formB(a, b, c, d, p, n: int) -> ClosedForm:
    a, b, c, d, p = map(rat, (a, b, c, d, p))
    lam = 2 * a - b - c - d
    g2 = svf_gamma_sq(a, b, c, d, p)
    value = poch_ratio(
        [1 + lam, b, c, d, a - p + 1, p + 1],
        [a - lam, 1 + a - b, 1 + a - c, 1 + a - d, p, a - p],
        n, "9F8 rewritten sum",
    )
    return ClosedForm(value, {"lambda": lam, "gamma_sq": g2})
