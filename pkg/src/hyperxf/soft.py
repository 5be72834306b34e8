"""Heuristic numeric check for nonterminating identities at x = -1.

Partial sums are accumulated in fixed point: each term is an integer scaled
by 2**PRECISION, and the term ratio is applied with pure integer arithmetic.
Exact Fractions would be correct but far too slow for 10**5 terms, and
floats are never used.

Two acceleration heuristics (documented in the report diagnostics):

* alternating side: the average of consecutive partial sums,
  ``S_M - t_{M-1}/2``;
* unit argument with parametric excess w > 0: terms behave like
  ``C k**(-1-w)``, so the tail is estimated as ``t_{M-1} * M / w``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple

from .errors import DegenerateError, HyperError
from .series import SeriesSpec, excess
from .sides import Side

PRECISION = 256
ONE = 1 << PRECISION
FIRST_CHECKPOINT = 1000
REPORT_DIGITS = 10 ** 15


@dataclass
class _IntRatio:
    """t_{k+1}/t_k = sign * prod(p_i + k q_i) / ((k+1) prod(p'_j + k q'_j)) * scale."""

    up: List[Tuple[int, int]]
    low: List[Tuple[int, int]]
    scale_num: int
    scale_den: int

    @classmethod
    def from_spec(cls, spec: SeriesSpec) -> "_IntRatio":
        if spec.upper_pairs or spec.lower_pairs:
            raise HyperError("soft summation does not support conjugate pairs")
        z = spec.arg
        num, den = z.numerator, z.denominator
        up, low = [], []
        for u in spec.upper:
            up.append((u.numerator, u.denominator))
            den *= u.denominator
        for v in spec.lower:
            low.append((v.numerator, v.denominator))
            num *= v.denominator
        return cls(up, low, num, den)

    def step(self, k: int) -> Tuple[int, int]:
        num, den = self.scale_num, self.scale_den * (k + 1)
        for p, q in self.up:
            num *= p + k * q
        for p, q in self.low:
            den *= p + k * q
        return num, den


def _round_div(a: int, b: int) -> int:
    if b < 0:
        a, b = -a, -b
    return (2 * a + b) // (2 * b)


def _to_rat(fixed: int) -> Fraction:
    return Fraction(_round_div(fixed * REPORT_DIGITS, ONE), REPORT_DIGITS)


class _Summer:
    """Incremental fixed-point partial sums of one series."""

    def __init__(self, spec: SeriesSpec):
        self.spec = spec
        self.ratio = _IntRatio.from_spec(spec)
        self.k = 0
        self.term = ONE
        self.total = 0
        if abs(spec.arg) > 1:
            raise HyperError("soft summation needs |argument| <= 1")
        self.alternating = spec.arg < 0
        self.terminated = False
        self.omega = None
        if spec.arg == 1:
            self.omega = excess(spec)
            if self.omega <= 0:
                raise DegenerateError("divergent-unit-series", f"excess {self.omega} <= 0")

    def advance_to(self, m: int) -> None:
        while self.k < m and not self.terminated:
            self.total += self.term
            num, den = self.ratio.step(self.k)
            if den == 0:
                raise DegenerateError("lower-poch-zero", f"degenerate lower parameter at k={self.k + 1}")
            self.k += 1
            if num == 0:
                self.terminated = True
                self.term = 0
                break
            self.term = _round_div(self.term * num, den)

    def last_term(self) -> int:
        # the last included term t_{k-1}; recompute from the current one
        if self.terminated or self.k == 0:
            return 0
        num, den = self.ratio.step(self.k - 1)
        return _round_div(self.term * den, num)

    def estimate(self) -> int:
        if self.terminated:
            return self.total
        last = self.last_term()
        if self.alternating:
            return self.total - last // 2
        w = self.omega
        if w is None:
            # |z| < 1: the geometric decay makes the tail negligible
            return self.total
        return self.total + _round_div(last * self.k * w.denominator, w.numerator)


def _side_estimate(side: Side, summer: _Summer) -> int:
    c = side.scalar_prefactor()
    return _round_div(summer.estimate() * c.numerator, c.denominator)


def _rel(lhs: int, rhs: int) -> Fraction:
    big = max(abs(lhs), abs(rhs))
    if big == 0:
        return Fraction(0)
    return Fraction(abs(lhs - rhs), big)


def soft_residual(lhs: Side, rhs: Side, max_terms: int = 200000,
                  rel_tol=Fraction(1, 100)) -> Tuple[Fraction, Dict[str, object]]:
    """Return (LHS - RHS estimate, diagnostics); diagnostics["pass"] applies rel_tol."""
    rel_tol = Fraction(rel_tol)
    if lhs.series is None or rhs.series is None:
        raise HyperError("soft check needs a series on both sides")
    sums = (_Summer(lhs.series), _Summer(rhs.series))
    m = min(FIRST_CHECKPOINT, max_terms)
    prev = None
    checkpoints = []
    while True:
        for s in sums:
            s.advance_to(m)
        est = (_side_estimate(lhs, sums[0]), _side_estimate(rhs, sums[1]))
        checkpoints.append(m)
        done = all(s.terminated for s in sums) or m >= max_terms
        if prev is not None:
            stable = max(_rel(prev[0], est[0]), _rel(prev[1], est[1])) <= rel_tol / 100
            done = done or stable
        if done:
            break
        prev = est
        m = min(2 * m, max_terms)
    rel = _rel(*est)
    diagnostics = {
        "lhs_estimate": _to_rat(est[0]),
        "rhs_estimate": _to_rat(est[1]),
        "relative_discrepancy": _to_rat(rel.numerator * ONE // rel.denominator),
        "terms": [s.k for s in sums],
        "last_terms": [_to_rat(s.last_term()) for s in sums],
        "checkpoints": checkpoints,
        "heuristic": "averaged alternating partial sums; k^(-1-excess) tail on the unit side",
        "pass": rel <= rel_tol,
    }
    return _to_rat(est[0] - est[1]), diagnostics
