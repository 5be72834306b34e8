"""Concrete generalized hypergeometric series and their evaluation.

A :class:`SeriesSpec` is one fully numeric pFq instance.  Besides plain
upper/lower parameters it carries *conjugate pairs* ``(center, square)``:
a pair stands for the two parameters ``center - g`` and ``center + g`` with
``g**2 == square``; only the product of their rising factorials is ever
needed, so ``g`` itself is never formed.

Three evaluation modes exist:

* ``Terminating(n)`` -- exact sum of the n+1 terms of a series with an
  upper parameter equal to -n;
* ``Partial(M)`` -- exact sum of the first M terms;
* ``Formal(N)`` -- power series in x truncated at order N, where the
  argument is either ``x`` or the quadratic argument ``-4x/(1-x)^2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Union

from .arith import (
    PowerSeries,
    paired_poch,
    poch,
    ps_add,
    ps_binomial_one_minus_x,
    ps_const,
    ps_mul,
    ps_scale,
    ps_x,
    rat,
    rat_str,
)
from .errors import DegenerateError, HyperError

X = "x"
QUADRATIC = "-4x/(1-x)^2"
FORMAL_ARGS = (X, QUADRATIC)


@dataclass(frozen=True)
class Terminating:
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise HyperError("terminating mode needs n >= 0")


@dataclass(frozen=True)
class Partial:
    M: int

    def __post_init__(self):
        if self.M < 1:
            raise HyperError("partial mode needs M >= 1")


@dataclass(frozen=True)
class Formal:
    N: int

    def __post_init__(self):
        if self.N < 0:
            raise HyperError("formal mode needs N >= 0")


Mode = Union[Terminating, Partial, Formal]


def _pairs(pairs):
    return tuple((rat(c), rat(s)) for c, s in pairs)


@dataclass(frozen=True)
class SeriesSpec:
    upper: tuple = ()
    lower: tuple = ()
    upper_pairs: tuple = ()
    lower_pairs: tuple = ()
    arg: Union[Fraction, str] = Fraction(1)
    mode: Optional[Mode] = None

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(rat(u) for u in self.upper))
        object.__setattr__(self, "lower", tuple(rat(v) for v in self.lower))
        object.__setattr__(self, "upper_pairs", _pairs(self.upper_pairs))
        object.__setattr__(self, "lower_pairs", _pairs(self.lower_pairs))
        if isinstance(self.arg, str) and self.arg in FORMAL_ARGS:
            if self.mode is not None and not isinstance(self.mode, Formal):
                raise HyperError("a formal argument requires Formal mode")
        else:
            object.__setattr__(self, "arg", rat(self.arg))
        if isinstance(self.mode, Terminating):
            if -self.mode.n not in self.upper:
                raise HyperError(
                    f"terminating mode needs an upper parameter equal to {-self.mode.n}"
                )

    @property
    def r(self) -> int:
        return len(self.upper) + 2 * len(self.upper_pairs)

    @property
    def s(self) -> int:
        return len(self.lower) + 2 * len(self.lower_pairs)

    @property
    def is_formal(self) -> bool:
        return isinstance(self.arg, str)

    def with_mode(self, mode: Mode) -> "SeriesSpec":
        return SeriesSpec(self.upper, self.lower, self.upper_pairs,
                          self.lower_pairs, self.arg, mode)

    def nterms(self) -> int:
        """Number of terms the current mode evaluates."""
        m = self.mode
        if isinstance(m, Terminating):
            return m.n + 1
        if isinstance(m, Partial):
            return m.M
        if isinstance(m, Formal):
            return m.N + 1
        raise HyperError("series has no evaluation mode")

    def degeneracy(self, nterms: Optional[int] = None) -> Optional[str]:
        """Describe the first vanishing lower rising factorial, or None.

        Terms k < nterms need (l)_k != 0, i.e. l + j != 0 for j <= nterms-2.
        """
        if nterms is None:
            nterms = self.nterms()
        for j in range(max(nterms - 1, 0)):
            for v in self.lower:
                if v + j == 0:
                    return f"lower parameter {v} vanishes at k={j + 1}"
            for c, g2 in self.lower_pairs:
                if (c + j) ** 2 == g2:
                    return f"lower pair ({c}, {g2}) vanishes at k={j + 1}"
        return None

    def to_json(self) -> dict:
        m = self.mode
        if isinstance(m, Terminating):
            mode = {"terminating": m.n}
        elif isinstance(m, Partial):
            mode = {"partial": m.M}
        elif isinstance(m, Formal):
            mode = {"formal": m.N}
        else:
            mode = None
        return {
            "upper": [rat_str(u) for u in self.upper],
            "lower": [rat_str(v) for v in self.lower],
            "upper_pairs": [[rat_str(c), rat_str(s)] for c, s in self.upper_pairs],
            "lower_pairs": [[rat_str(c), rat_str(s)] for c, s in self.lower_pairs],
            "arg": self.arg if self.is_formal else rat_str(self.arg),
            "mode": mode,
        }

    @classmethod
    def from_json(cls, data: dict) -> "SeriesSpec":
        try:
            mode_d = data["mode"]
            (kind, val), = mode_d.items()
            mode = {"terminating": Terminating, "partial": Partial,
                    "formal": Formal}[kind](int(val))
            arg = data.get("arg", "1/1")
            if not (isinstance(arg, str) and arg in FORMAL_ARGS):
                arg = rat(arg)
            return cls(
                upper=[rat(u) for u in data.get("upper", [])],
                lower=[rat(v) for v in data.get("lower", [])],
                upper_pairs=[(rat(c), rat(s)) for c, s in data.get("upper_pairs", [])],
                lower_pairs=[(rat(c), rat(s)) for c, s in data.get("lower_pairs", [])],
                arg=arg,
                mode=mode,
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            if isinstance(exc, HyperError):
                raise
            raise HyperError(f"malformed series spec: {exc}") from exc


def _ratio_parts(spec: SeriesSpec, k: int):
    """Numerator and denominator of t_{k+1}/t_k, argument excluded."""
    num = Fraction(1)
    for u in spec.upper:
        num *= u + k
    for c, g2 in spec.upper_pairs:
        num *= (c + k) ** 2 - g2
    den = Fraction(k + 1)
    for v in spec.lower:
        den *= v + k
    for c, g2 in spec.lower_pairs:
        den *= (c + k) ** 2 - g2
    return num, den


def _coefficients(spec: SeriesSpec, count: int):
    """Term coefficients k = 0..count-1 with the argument set to one."""
    t = Fraction(1)
    out = []
    for k in range(count):
        out.append(t)
        if k + 1 == count:
            break
        num, den = _ratio_parts(spec, k)
        if den == 0:
            raise DegenerateError("lower-poch-zero",
                                  f"degenerate lower parameter at k={k + 1}")
        t = t * num / den
    return out


def term(spec: SeriesSpec, k: int) -> Fraction:
    """The k-th summand.  For a formal argument this is its coefficient."""
    if k < 0:
        raise ValueError("k must be non-negative")
    num = Fraction(1)
    for u in spec.upper:
        num *= poch(u, k)
    for c, g2 in spec.upper_pairs:
        num *= paired_poch(c, g2, k)
    den = poch(1, k)
    for v in spec.lower:
        den *= poch(v, k)
    for c, g2 in spec.lower_pairs:
        den *= paired_poch(c, g2, k)
    if den == 0:
        raise DegenerateError("lower-poch-zero", f"degenerate lower parameter at k={k}")
    z = Fraction(1) if spec.is_formal else spec.arg
    return num * z ** k / den


def _plain_terms(spec: SeriesSpec, count: int):
    z = spec.arg
    out = []
    zk = Fraction(1)
    for c in _coefficients(spec, count):
        out.append(c * zk)
        zk *= z
    return out


def eval_terminating(spec: SeriesSpec) -> Fraction:
    if not isinstance(spec.mode, Terminating):
        raise HyperError("eval_terminating needs Terminating mode")
    if spec.is_formal:
        raise HyperError("eval_terminating needs a rational argument")
    return sum(_plain_terms(spec, spec.mode.n + 1), Fraction(0))


def eval_partial(spec: SeriesSpec, M: Optional[int] = None):
    """Sum of the first M terms, returned with the last term included."""
    if M is None:
        if not isinstance(spec.mode, Partial):
            raise HyperError("eval_partial needs Partial mode or an explicit M")
        M = spec.mode.M
    if M < 1:
        raise HyperError("M must be positive")
    if spec.is_formal:
        raise HyperError("eval_partial needs a rational argument")
    terms = _plain_terms(spec, M)
    return sum(terms, Fraction(0)), terms[-1]


def _argument_series(arg, N: int) -> PowerSeries:
    if arg == X:
        return ps_x(N)
    if arg == QUADRATIC:
        return ps_scale(ps_mul(ps_x(N), ps_binomial_one_minus_x(-2, N)), -4)
    # a rational argument gives a constant series
    return ps_const(arg, N)


def eval_formal(
    spec: SeriesSpec,
    N: Optional[int] = None,
    term_factor: Optional[Callable[[int], PowerSeries]] = None,
) -> PowerSeries:
    """Power series in x to order N.

    Term k is its coefficient times Z**k with Z = x or Z = -4x/(1-x)**2;
    ``term_factor(k)``, when given, multiplies term k by an x-dependent
    series (used for parameters that themselves depend on x).
    """
    if N is None:
        if not isinstance(spec.mode, Formal):
            raise HyperError("eval_formal needs Formal mode or an explicit N")
        N = spec.mode.N
    z = _argument_series(spec.arg, N)
    count = N + 1
    if isinstance(spec.mode, Terminating):
        count = min(count, spec.mode.n + 1)
    coeffs = _coefficients(spec, count)
    out = ps_const(0, N)
    zk = ps_const(1, N)
    for k, c in enumerate(coeffs):
        if c:
            piece = ps_scale(zk, c)
            if term_factor is not None:
                piece = ps_mul(piece, term_factor(k))
            out = ps_add(out, piece)
        zk = ps_mul(zk, z)
    return out


def excess(spec: SeriesSpec) -> Fraction:
    """Sum of lower parameters minus sum of upper ones (pairs count 2*center)."""
    if spec.r != spec.s + 1:
        raise HyperError(f"excess needs r = s + 1, got r={spec.r}, s={spec.s}")
    low = sum(spec.lower, Fraction(0)) + 2 * sum((c for c, _ in spec.lower_pairs), Fraction(0))
    up = sum(spec.upper, Fraction(0)) + 2 * sum((c for c, _ in spec.upper_pairs), Fraction(0))
    return low - up


def is_well_poised(spec: SeriesSpec) -> bool:
    """1 + a1 = b_i + a_{i+1} for some matching of the remaining parameters.

    The first upper parameter is taken as a1.  A conjugate pair matches a
    pair on the other side with the same square and centers summing to 1+a1.
    """
    if spec.r != spec.s + 1 or not spec.upper:
        return False
    target = 1 + spec.upper[0]
    rest = list(spec.upper[1:])
    lower = list(spec.lower)
    for u in rest:
        want = target - u
        if want not in lower:
            return False
        lower.remove(want)
    if lower:
        return False
    lpairs = list(spec.lower_pairs)
    for c, g2 in spec.upper_pairs:
        want = (target - c, g2)
        if want not in lpairs:
            return False
        lpairs.remove(want)
    return not lpairs


def is_very_well_poised(spec: SeriesSpec) -> bool:
    return (
        is_well_poised(spec)
        and len(spec.upper) >= 2
        and spec.upper[1] == 1 + spec.upper[0] / 2
    )
