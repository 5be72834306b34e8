"""Building blocks for one side of an identity: prefactor times a body.

A body is a :class:`SeriesSpec`, a finite :class:`DoubleSum`, or an already
closed-form rational.  Prefactor factors are small frozen dataclasses that
know how to evaluate exactly (and, for the x-dependent ones, as power
series).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Tuple, Union

from .arith import (
    PowerSeries,
    paired_poch,
    poch,
    ps_binomial_one_minus_x,
    ps_linear,
    ps_mul,
    ps_scale,
    rat,
)
from .errors import DegenerateError, HyperError
from .series import (
    SeriesSpec,
    eval_formal,
    eval_terminating,
    term,
)


@dataclass(frozen=True)
class PochRatio:
    """prod (num_i)_n / prod (den_i)_n."""

    num: tuple
    den: tuple
    n: int

    def value(self) -> Fraction:
        top = Fraction(1)
        for u in self.num:
            top *= poch(u, self.n)
        bot = Fraction(1)
        for v in self.den:
            p = poch(v, self.n)
            if p == 0:
                raise DegenerateError("prefactor-poch-zero", f"({v})_{self.n} = 0")
            bot *= p
        return top / bot


@dataclass(frozen=True)
class PairedPochRatio:
    """(c1-g)_n (c1+g)_n / ((c2-g)_n (c2+g)_n) with g**2 = square."""

    num_center: Fraction
    den_center: Fraction
    square: Fraction
    n: int

    def value(self) -> Fraction:
        bot = paired_poch(self.den_center, self.square, self.n)
        if bot == 0:
            raise DegenerateError(
                "prefactor-poch-zero",
                f"paired ({self.den_center} +- g)_{self.n} = 0 with g^2 = {self.square}",
            )
        return paired_poch(self.num_center, self.square, self.n) / bot


@dataclass(frozen=True)
class SignPower:
    n: int

    def value(self) -> Fraction:
        return Fraction(-1) ** self.n


@dataclass(frozen=True)
class Const:
    c: Fraction

    def value(self) -> Fraction:
        return rat(self.c)


@dataclass(frozen=True)
class PSLinear:
    """c0 + c1*x; only meaningful in formal mode."""

    c0: Fraction
    c1: Fraction

    def series(self, order: int) -> PowerSeries:
        return ps_linear(self.c0, self.c1, order)


@dataclass(frozen=True)
class PSBinomial:
    """(1 - x)**alpha; only meaningful in formal mode."""

    alpha: Fraction

    def series(self, order: int) -> PowerSeries:
        return ps_binomial_one_minus_x(self.alpha, order)


Factor = Union[PochRatio, PairedPochRatio, SignPower, Const, PSLinear, PSBinomial]


@dataclass(frozen=True)
class DoubleSum:
    """sum_{m=0}^{n} term(outer, m) * inner(m), inner(m) terminating."""

    outer: SeriesSpec
    inner: Callable[[int], SeriesSpec]

    @property
    def n(self) -> int:
        return self.outer.mode.n


@dataclass(frozen=True)
class Side:
    prefactor: Tuple[Factor, ...] = ()
    body: Union[SeriesSpec, DoubleSum, Fraction, None] = None
    term_factor: Optional[Callable[[int], PowerSeries]] = None

    @property
    def series(self) -> Optional[SeriesSpec]:
        return self.body if isinstance(self.body, SeriesSpec) else None

    def validate(self) -> None:
        """Raise DegenerateError if any denominator on this side vanishes."""
        for f in self.prefactor:
            if hasattr(f, "value"):
                f.value()
        body = self.body
        if isinstance(body, SeriesSpec):
            _validate_spec(body)
        elif isinstance(body, DoubleSum):
            _validate_spec(body.outer)
            for m in range(body.n + 1):
                _validate_spec(body.inner(m))

    def scalar_prefactor(self) -> Fraction:
        out = Fraction(1)
        for f in self.prefactor:
            if hasattr(f, "value"):
                out *= f.value()
        return out

    def evaluate_exact(self) -> Fraction:
        body = self.body
        if isinstance(body, SeriesSpec):
            val = eval_terminating(body)
        elif isinstance(body, DoubleSum):
            val = Fraction(0)
            for m in range(body.n + 1):
                c = term(body.outer, m)
                if c:
                    val += c * eval_terminating(body.inner(m))
        elif body is None:
            val = Fraction(1)
        else:
            val = rat(body)
        return self.scalar_prefactor() * val

    def evaluate_formal(self, order: int) -> PowerSeries:
        body = self.body
        if not isinstance(body, SeriesSpec):
            raise HyperError("formal evaluation needs a series body")
        out = eval_formal(body, order, self.term_factor)
        for f in self.prefactor:
            if hasattr(f, "series"):
                out = ps_mul(out, f.series(order))
        return ps_scale(out, self.scalar_prefactor())


def _validate_spec(spec: SeriesSpec) -> None:
    if spec.mode is None:
        # open-ended partial sums: no lower parameter may ever vanish
        for v in spec.lower:
            if v <= 0 and v.denominator == 1:
                raise DegenerateError("lower-poch-zero",
                                      f"lower parameter {v} is a non-positive integer")
        if spec.lower_pairs:
            raise HyperError("open-ended sums with conjugate pairs are not supported")
        return
    reason = spec.degeneracy()
    if reason is not None:
        raise DegenerateError("lower-poch-zero", reason)
