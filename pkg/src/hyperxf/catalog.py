"""Registry of hypergeometric identities.

Every :class:`IdentityEntry` names its free parameters, the auxiliary
parameters derived from them (in evaluation order), and two side builders.
A builder receives a :class:`Vars` namespace (free + derived parameters,
``n`` and the power-series order ``N``) and returns a
:class:`~hyperxf.sides.Side`.

Conjugate parameters that enter only in ``center +- g`` pairs are stored as
their squares (``gamma_sq`` etc.) and never square-rooted.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Mapping, Optional, Tuple

from . import summations as S
from .arith import PowerSeries, ps_invert, ps_linear, ps_mul, ps_sub, rat, rat_str
from .errors import ConstraintViolation, DegenerateError, HyperError, UnknownEntry
from .series import (
    QUADRATIC,
    X,
    Formal,
    SeriesSpec,
    Terminating,
    excess,
    is_very_well_poised,
)
from .sides import (
    Const,
    DoubleSum,
    PairedPochRatio,
    PochRatio,
    PSBinomial,
    PSLinear,
    Side,
    SignPower,
)
from .summations import aux_div

EXACT = "exact"
FORMAL = "formal"
SOFT = "soft"

SAALSCHUTZIAN = "saalschutzian"
VERY_WELL_POISED = "very-well-poised"


class Vars(dict):
    """Parameter namespace; ``v.a`` is ``v["a"]``."""

    def __getattr__(self, name):
        try:
            return self[name]
        except KeyError:
            raise AttributeError(name) from None

    def extras(self, prefix: str) -> List[Fraction]:
        out = []
        i = 1
        while f"{prefix}_{i}" in self:
            out.append(self[f"{prefix}_{i}"])
            i += 1
        return out


@dataclass(frozen=True)
class ParamEnv:
    """Free-parameter assignment plus the termination index n."""

    bindings: Tuple[Tuple[str, Fraction], ...]
    n: int = 0

    def __init__(self, bindings: Mapping[str, object], n: int = 0):
        items = tuple(sorted((k, rat(v)) for k, v in dict(bindings).items()))
        object.__setattr__(self, "bindings", items)
        object.__setattr__(self, "n", int(n))
        if self.n < 0:
            raise HyperError("n must be non-negative")

    def as_dict(self) -> Dict[str, Fraction]:
        return dict(self.bindings)

    def __getitem__(self, key):
        return dict(self.bindings)[key]

    def with_n(self, n: int) -> "ParamEnv":
        return ParamEnv(self.as_dict(), n)

    def to_json(self) -> dict:
        return {"bindings": {k: rat_str(v) for k, v in self.bindings}, "n": self.n}


@dataclass(frozen=True)
class Derived:
    name: str
    formula: str
    fn: Callable[[Vars], Fraction]
    label: str = ""


@dataclass(frozen=True)
class IdentityEntry:
    id: str
    paper_eq: str
    title: str
    free_params: Tuple[str, ...]
    derived_params: Tuple[Derived, ...]
    lhs: Callable[[Vars], Side]
    rhs: Callable[[Vars], Side]
    check_mode: str = EXACT
    constraints_note: str = ""
    structural_flags: Tuple[Tuple[str, str], ...] = ()
    extra_lists: bool = False
    integer_params: Tuple[str, ...] = ()
    admissible: Optional[Callable[[Vars], Optional[Tuple[str, str]]]] = None
    note: str = ""

    def summary(self) -> dict:
        return {
            "id": self.id,
            "paper_eq": self.paper_eq,
            "title": self.title,
            "free_params": list(self.free_params)
            + (["a_1..a_r", "b_1..b_s", "x"] if self.extra_lists else []),
            "derived_params": [d.name for d in self.derived_params],
            "constraints": self.constraints_note,
            "check_mode": self.check_mode,
        }


@dataclass(frozen=True)
class IdentityInstance:
    entry: IdentityEntry
    env: ParamEnv
    values: Vars
    lhs: Side
    rhs: Side
    order: int

    def structural_failures(self) -> List[str]:
        """Names of structural flags that do not hold on this instance."""
        bad = []
        for side_name, flag in self.entry.structural_flags:
            spec = (self.lhs if side_name == "lhs" else self.rhs).series
            if spec is None:
                bad.append(f"{side_name}:{flag}:no-series")
                continue
            if flag == SAALSCHUTZIAN:
                ok = spec.r == spec.s + 1 and excess(spec) == 1
            elif flag == VERY_WELL_POISED:
                ok = is_very_well_poised(spec)
            else:
                raise HyperError(f"unknown structural flag {flag}")
            if not ok:
                bad.append(f"{side_name}:{flag}")
        return bad


# -- helpers ------------------------------------------------------------------

def _unit(upper, lower, n, up=(), lp=()):
    return SeriesSpec(upper, lower, up, lp, Fraction(1), Terminating(n))


def _pr(num, den, n):
    return PochRatio(tuple(num), tuple(den), n)


def _gamma_nearly_poised(v):
    return aux_div(v.p * (v.a - v.p) * (v.b + v.c - v.a), v.b * v.c - v.p * (v.a - v.p),
                   "bc - p(a-p)")


def _gamma_balanced(v, top="c"):
    # p(t-a-1)(t-b-1) / (ab + p(t-a-b-1)) with t = c or d
    t = v[top]
    return aux_div(v.p * (t - v.a - 1) * (t - v.b - 1), v.a * v.b + v.p * (t - v.a - v.b - 1),
                   f"ab + p({top}-a-b-1)")


def _nonzero(value, what):
    if value == 0:
        raise DegenerateError("aux-denominator-zero", f"{what} = 0")
    return value


def _alpha_w(v):
    return aux_div(v.q * (1 + v.a - v.w), v.a - v.q, "a - q")


def _beta_w(v):
    return aux_div(v.q * (1 + v.a - v.w) + v.n * (v.a - v.q), 1 + 2 * v.q - v.w + v.n,
                   "1 + 2q - w + n")


def _svf_fraction(v, p, b, c, d):
    a = v.a
    return aux_div(p * (a - p) * (a - b - c) * (a - b - d) * (a - c - d),
                   b * c * d + p * (a - p) * (a - b - c - d),
                   "bcd + p(a-p)(a-b-c-d)" if p is v.p else "efg + q(a-q)(a-e-f-g)")


def _shift(values, m):
    return [u + m for u in values]


def _delta_factor(v):
    """Per-term factor (delta+k)/delta for delta = (q + (a-q)x)/(1+x)."""
    base_inv = ps_invert(ps_linear(v.q, v.a - v.q, v.N))

    def factor(k: int) -> PowerSeries:
        return ps_mul(ps_linear(v.q + k, v.a - v.q + k, v.N), base_inv)

    return factor


ALPHA_W = Derived("alpha", "q(1+a-w)/(a-q)", _alpha_w)
BETA_W = Derived("beta", "(q(1+a-w) + n(a-q))/(1+2q-w+n)", _beta_w)


def _gamma_np(label):
    return Derived("gamma", "p(a-p)(b+c-a)/(bc - p(a-p))", _gamma_nearly_poised, label)


LAMBDA = Derived("lambda", "2a-b-c-d", lambda v: 2 * v.a - v.b - v.c - v.d)


def _gamma_sq_svf(label):
    return Derived(
        "gamma_sq",
        "lambda^2/4 - p(a-p)(a-b-c)(a-b-d)(a-c-d)/(bcd + p(a-p)(a-b-c-d))",
        lambda v: v["lambda"] ** 2 / 4 - _svf_fraction(v, v.p, v.b, v.c, v.d),
        label,
    )


# -- summation entries ----------------------------------------------------------

def _closed(fn, *names):
    return lambda v: Side(body=fn(*(v[k] for k in names), v.n).value)


def _summation_entries():
    return [
        IdentityEntry(
            "sum-ext-chu-vandermonde", "1e3f2", "extended Chu-Vandermonde 3F2(1) sum",
            ("a", "b", "p"),
            (Derived("q", "p(b-a-1)/(p-a)", lambda v: aux_div(v.p * (v.b - v.a - 1), v.p - v.a, "p - a"), "2e3f2"),),
            lambda v: Side(body=S.ext_chu_vandermonde_series(v.a, v.b, v.p, v.n)),
            _closed(S.sum_ext_chu_vandermonde, "a", "b", "p"),
        ),
        IdentityEntry(
            "sum-rakha-rathie", "e1R1C1P18", "balanced 4F3(1) sum with a unit-shift pair",
            ("a", "b", "c", "p"),
            (Derived("q", "p(c-a-1)(c-b-1)/(ab + p(c-a-b-1))", _gamma_balanced, "e2R1C1P18"),),
            lambda v: Side(body=S.rakha_rathie_series(v.a, v.b, v.c, v.p, v.n)),
            _closed(S.sum_rakha_rathie, "a", "b", "c", "p"),
            structural_flags=(("lhs", SAALSCHUTZIAN),),
        ),
        IdentityEntry(
            "sum-rr-formA", "e3R1C1P18", "4F3(1) sum, nearly-poised rewrite",
            ("a", "b", "c", "p"),
            (Derived("gamma1", "p(a-p)(b+c-a)/(bc - p(a-p))", _gamma_nearly_poised, "e4R1C1P18"),),
            lambda v: Side(body=S.rr_formA_series(v.a, v.b, v.c, v.p, v.n)),
            _closed(S.sum_rr_formA, "a", "b", "c", "p"),
            structural_flags=(("lhs", SAALSCHUTZIAN),),
        ),
        IdentityEntry(
            "sum-rr-formB", "e5R1C1P18", "4F3(1) sum, balanced rewrite",
            ("a", "b", "c", "p"),
            (Derived("gamma2", "p(c-a-1)(c-b-1)/(ab + p(c-a-b-1))", _gamma_balanced, "e6R1C1P18"),),
            lambda v: Side(body=S.rr_formB_series(v.a, v.b, v.c, v.p, v.n)),
            _closed(S.sum_rr_formB, "a", "b", "c", "p"),
            structural_flags=(("lhs", SAALSCHUTZIAN),),
        ),
        IdentityEntry(
            "sum-svf-9f8", "1e1R3C11P2", "very-well-poised 9F8(1) sum extending Dougall",
            ("a", "b", "c", "d", "p"),
            (Derived("alpha", "p(a-p)(a-b-c)(a-b-d)(a-c-d)/((2a-b-c-d+n)(bcd + p(a-p)(a-b-c-d)))",
                     lambda v: S.svf_alpha(v.a, v.b, v.c, v.d, v.p, v.n), "2e1R3C11P2"),),
            lambda v: Side(body=S.svf_9f8_series(v.a, v.b, v.c, v.d, v.p, v.n)),
            _closed(S.sum_svf_9f8, "a", "b", "c", "d", "p"),
            structural_flags=(("lhs", VERY_WELL_POISED),),
        ),
        IdentityEntry(
            "sum-svf-formB", "1e2R3C11P2", "9F8(1) sum with a conjugate parameter pair",
            ("a", "b", "c", "d", "p"),
            (Derived("lambda", "2a-b-c-d", LAMBDA.fn, "2e2R3C11P2"), _gamma_sq_svf("3e2R3C11P2")),
            lambda v: Side(body=S.svf_formB_series(v.a, v.b, v.c, v.d, v.p, v.n)),
            _closed(S.sum_svf_formB, "a", "b", "c", "d", "p"),
            structural_flags=(("lhs", VERY_WELL_POISED),),
        ),
    ]


def _classical_entries():
    def whipple_lhs(v):
        lhs, _, _ = S.whipple_4f3_series_pair(v.a, v.b, v.c, v.d, v.e, v.n)
        return Side(body=lhs)

    def whipple_rhs(v):
        _, pre, rhs = S.whipple_4f3_series_pair(v.a, v.b, v.c, v.d, v.e, v.n)
        return Side((Const(pre),), rhs)

    return [
        IdentityEntry(
            "classical-chu-vandermonde", "", "Chu-Vandermonde 2F1(1) sum",
            ("a", "b"), (),
            lambda v: Side(body=S.chu_vandermonde_series(v.a, v.b, v.n)),
            _closed(S.chu_vandermonde, "a", "b"),
        ),
        IdentityEntry(
            "classical-pfaff-saalschutz", "", "Pfaff-Saalschutz balanced 3F2(1) sum",
            ("a", "b", "c"), (),
            lambda v: Side(body=S.pfaff_saalschutz_series(v.a, v.b, v.c, v.n)),
            _closed(S.pfaff_saalschutz, "a", "b", "c"),
            structural_flags=(("lhs", SAALSCHUTZIAN),),
        ),
        IdentityEntry(
            "classical-dougall", "", "Dougall very-well-poised 7F6(1) sum",
            ("a", "b", "c", "d"),
            (Derived("e", "1+2a-b-c-d+n", lambda v: 1 + 2 * v.a - v.b - v.c - v.d + v.n),),
            lambda v: Side(body=S.dougall_series(v.a, v.b, v.c, v.d, v.n)),
            _closed(S.dougall, "a", "b", "c", "d"),
            constraints_note="1+2a = b+c+d+e-n (e derived)",
            structural_flags=(("lhs", VERY_WELL_POISED),),
        ),
        IdentityEntry(
            "classical-whipple-4f3", "", "Whipple transform of balanced 4F3(1) series",
            ("a", "b", "c", "d", "e"),
            (Derived("f", "1+a+b+c-d-e-n", lambda v: 1 + v.a + v.b + v.c - v.d - v.e - v.n),),
            whipple_lhs, whipple_rhs,
            constraints_note="d+e+f = a+b+c-n+1 (f derived)",
            structural_flags=(("lhs", SAALSCHUTZIAN), ("rhs", SAALSCHUTZIAN)),
        ),
    ]


# -- nearly-poised / very-well-poised to balanced ------------------------------

def _p11P1_lhs(v):
    ai, bi = v.extras("a"), v.extras("b")
    a, b, c, p, n = v.a, v.b, v.c, v.p, v.n
    return Side(body=SeriesSpec([a, b, c, a - p + 1, p + 1, *ai, -n],
                                [1 + a - b, 1 + a - c, p, a - p, *bi], (), (), v.x, Terminating(n)))


def _p11P1_rhs(v):
    ai, bi = v.extras("a"), v.extras("b")
    a, b, c, g, n, x = v.a, v.b, v.c, v.gamma, v.n, v.x
    outer = SeriesSpec([a / 2, (a + 1) / 2, a - b - c, g + 1, *ai, -n],
                       [1 + a - b, 1 + a - c, g, *bi], (), (), -4 * x, Terminating(n))

    def inner(m):
        return SeriesSpec([a + 2 * m, *_shift(ai, m), -n + m], _shift(bi, m), (), (), x,
                          Terminating(n - m))

    return Side(body=DoubleSum(outer, inner))


def _p3P16_lhs(v):
    a, b, c, p, q, w, n = v.a, v.b, v.c, v.p, v.q, v.w, v.n
    return Side(body=_unit([a, b, c, a - p + 1, p + 1, q + 1, -n],
                           [1 + a - b, 1 + a - c, p, a - p, q, w], n))


def _p3P16_rhs(v):
    a, b, c, w, n = v.a, v.b, v.c, v.w, v.n
    al, be, g = v.alpha, v.beta, v.gamma
    return Side(
        (_pr([w - a - 1, al + 1], [w, al], n),),
        _unit([1 + a - w, a / 2, (a + 1) / 2, a - b - c, be + 1, g + 1, -n],
              [1 + a - b, 1 + a - c, (2 + a - w - n) / 2, (3 + a - w - n) / 2, be, g], n),
    )


def _c1C3P16_lhs(v):
    a, b, c, p, w, n = v.a, v.b, v.c, v.p, v.w, v.n
    return Side(body=_unit([a, b, c, a - p + 1, p + 1, -n], [1 + a - b, 1 + a - c, p, a - p, w], n))


def _c1C3P16_rhs(v):
    a, b, c, w, n, g = v.a, v.b, v.c, v.w, v.n, v.gamma
    return Side(
        (_pr([w - a], [w], n),),
        _unit([1 + a - w, a / 2, (a + 1) / 2, a - b - c, g + 1, -n],
              [1 + a - b, 1 + a - c, (1 + a - w - n) / 2, (2 + a - w - n) / 2, g], n),
    )


def _c2C3P16_lhs(v):
    a, b, c, q, w, n = v.a, v.b, v.c, v.q, v.w, v.n
    return Side(body=_unit([a, b, c, q + 1, -n], [1 + a - b, 1 + a - c, q, w], n))


def _c2C3P16_rhs(v):
    a, b, c, w, n, al, be = v.a, v.b, v.c, v.w, v.n, v.alpha, v.beta
    return Side(
        (_pr([w - a - 1, al + 1], [w, al], n),),
        _unit([1 + a - w, a / 2, (a + 1) / 2, 1 + a - b - c, be + 1, -n],
              [1 + a - b, 1 + a - c, (2 + a - w - n) / 2, (3 + a - w - n) / 2, be], n),
    )


def _p11P2_lhs(v):
    a, b, c, d, e, p, q, w, n = v.a, v.b, v.c, v.d, v.e, v.p, v.q, v.w, v.n
    return Side(body=_unit([a, b, c, d, e, a - p + 1, p + 1, q + 1, -n],
                           [1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, p, a - p, q, w], n))


def _p11P2_rhs(v):
    a, b, c, d, e, w, n = v.a, v.b, v.c, v.d, v.e, v.w, v.n
    al, be, g = v.alpha, v.beta, v.gamma
    outer = _unit([-n, a / 2, (a + 1) / 2, 1 + a - w, 1 + a - d - e, be + 1],
                  [1 + a - d, 1 + a - e, (2 + a - w - n) / 2, (3 + a - w - n) / 2, be], n)

    def inner(k):
        return _unit([-k, a - b - c, d, e, g + 1], [1 + a - b, 1 + a - c, d + e - a - k, g], k)

    return Side((_pr([w - a - 1, al + 1], [w, al], n),), DoubleSum(outer, inner))


def _e1C11P2_lhs(v):
    a, b, c, d, e, p, n = v.a, v.b, v.c, v.d, v.e, v.p, v.n
    return Side(body=_unit([a, 1 + a / 2, b, c, d, e, a - p + 1, p + 1, -n],
                           [a / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, p, a - p, 1 + a + n], n))


def _e1C11P2_rhs(v):
    a, b, c, d, e, n, g = v.a, v.b, v.c, v.d, v.e, v.n, v.gamma
    return Side(
        (_pr([1 + a, 1 + a - d - e], [1 + a - d, 1 + a - e], n),),
        _unit([a - b - c, d, e, g + 1, -n], [1 + a - b, 1 + a - c, d + e - a - n, g], n),
    )


# -- balanced to balanced -----------------------------------------------------

def _p12P1_lhs(v):
    ai, bi = v.extras("a"), v.extras("b")
    a, b, c, p, n = v.a, v.b, v.c, v.p, v.n
    return Side(body=SeriesSpec([a, b, p + 1, *ai, -n], [c, p, *bi], (), (), v.x, Terminating(n)))


def _p12P1_rhs(v):
    ai, bi = v.extras("a"), v.extras("b")
    a, b, c, g, n, x = v.a, v.b, v.c, v.gamma, v.n, v.x
    outer = SeriesSpec([c - a - 1, c - b - 1, g + 1, *ai, -n], [c, g, *bi], (), (), x, Terminating(n))

    def inner(m):
        return SeriesSpec([1 + a + b - c, *_shift(ai, m), -n + m], _shift(bi, m), (), (), x,
                          Terminating(n - m))

    return Side(body=DoubleSum(outer, inner))


def _series_12P2(a, b, c, d, e, f, p, q, n):
    return _unit([a, b, c, p + 1, q + 1, -n], [d, e, f, p, q], n)


def _p12P2_lhs(v):
    return Side(body=_series_12P2(v.a, v.b, v.c, v.d, v.e, v.f, v.p, v.q, v.n))


def _p12P2_rhs(v):
    a, b, c, d, e, f, n = v.a, v.b, v.c, v.d, v.e, v.f, v.n
    al, g, de = v.alpha, v.gamma, v.delta
    return Side(
        (_pr([e - c - 1, f - c - 1, al + 1], [e, f, al], n),),
        _unit([d - a - 1, d - b - 1, c, g + 1, de + 1, -n],
              [d, 2 + c - e - n, 2 + c - f - n, g, de], n),
    )


def alpha_12P2(a, b, c, d, e, f, q) -> Fraction:
    return aux_div(q * (e - c - 1) * (f - c - 1), (c - q) * (d - a - b - 1), "(c-q)(d-a-b-1)")


def delta_12P2(a, b, c, d, e, f, q, n) -> Fraction:
    return aux_div(q * (e - c - 1) * (f - c - 1) + n * (c - q) * (d - a - b - 1),
                   (e - c - 1) * (f - c - 1) - (c - q) * (d - a - b - 1),
                   "(e-c-1)(f-c-1) - (c-q)(d-a-b-1)")


def gamma_12P2(a, b, d, p) -> Fraction:
    return aux_div(p * (d - a - 1) * (d - b - 1), a * b + p * (d - a - b - 1), "ab + p(d-a-b-1)")


def ftilde_side(a, b, c, d, e, f, p, q, n, sign=False) -> Side:
    """(d)_n (e)_n (f)_n (alpha)_n times the balanced 6F5 with unit-shift pairs."""
    al = alpha_12P2(a, b, c, d, e, f, q)
    factors = [_pr([d, e, f, al], [], n)]
    if sign:
        factors.insert(0, SignPower(n))
    return Side(tuple(factors), _series_12P2(a, b, c, d, e, f, p, q, n))


def _ftilde_of(env: ParamEnv) -> Side:
    v = Vars(env.as_dict())
    n = env.n
    f = 3 + v.a + v.b + v.c - v.d - v.e - n
    side = ftilde_side(v.a, v.b, v.c, v.d, v.e, f, v.p, v.q, n)
    side.validate()
    return side


def reflect_12P2(env: ParamEnv) -> ParamEnv:
    """Map (a,b,c;d,e,f;p,q) to (d-a-1, d-b-1, c; d, 2+c-e-n, 2+c-f-n; gamma, delta).

    The reflected f is recomputed by the balance constraint, which gives
    exactly 2+c-f-n.
    """
    v = Vars(env.as_dict())
    n = env.n
    a, b, c, d, e, p, q = v.a, v.b, v.c, v.d, v.e, v.p, v.q
    f = 3 + a + b + c - d - e - n
    g = gamma_12P2(a, b, d, p)
    de = delta_12P2(a, b, c, d, e, f, q, n)
    refl = ParamEnv({"a": d - a - 1, "b": d - b - 1, "c": c, "d": d, "e": 2 + c - e - n,
                     "p": g, "q": de}, n)
    try:
        _ftilde_of(refl)
    except DegenerateError as exc:
        raise DegenerateError("reflected-env-inadmissible", exc.reason) from exc
    return refl


def _r1R12P2_lhs(v):
    return ftilde_side(v.a, v.b, v.c, v.d, v.e, v.f, v.p, v.q, v.n)


def _r1R12P2_rhs(v):
    n = v.n
    return ftilde_side(v.d - v.a - 1, v.d - v.b - 1, v.c, v.d, 2 + v.c - v.e - n,
                       2 + v.c - v.f - n, v.gamma, v.delta, n, sign=True)


def _c1C12P2_lhs(v):
    a, b, c, d, e, f, p, n = v.a, v.b, v.c, v.d, v.e, v.f, v.p, v.n
    return Side(body=_unit([a, b, c, p + 1, -n], [d, e, f, p], n))


def _c1C12P2_rhs(v):
    a, b, c, d, e, f, n, g = v.a, v.b, v.c, v.d, v.e, v.f, v.n, v.gamma
    return Side(
        (_pr([e - c, f - c], [e, f], n),),
        _unit([d - a - 1, d - b - 1, c, g + 1, -n], [d, 1 + c - e - n, 1 + c - f - n, g], n),
    )


def _c2C12P2_lhs(v):
    a, c, d, e, p, n = v.a, v.c, v.d, v.e, v.p, v.n
    return Side(body=_unit([a, c, p + 1, -n], [d, e, p], n))


def _c2C12P2_rhs(v):
    a, c, d, e, n, g = v.a, v.c, v.d, v.e, v.n, v.gamma
    return Side((_pr([e - c], [e], n),), _unit([d - a - 1, c, g + 1, -n], [d, 1 + c - e - n, g], n))


def _e3e2C12P2_lhs(v):
    return Side(body=_unit([v.a, v.c, -v.n], [v.d, v.e], v.n))


def _e3e2C12P2_rhs(v):
    a, c, d, e, n = v.a, v.c, v.d, v.e, v.n
    return Side((_pr([e - c], [e], n),), _unit([d - a, c, -n], [d, 1 + c - e - n], n))


# -- very-well-poised targets --------------------------------------------------

def _p13P1_lhs(v):
    ai, bi = v.extras("a"), v.extras("b")
    a, b, c, d, p, n = v.a, v.b, v.c, v.d, v.p, v.n
    return Side(body=SeriesSpec([a, b, c, d, a - p + 1, p + 1, *ai, -n],
                                [1 + a - b, 1 + a - c, 1 + a - d, p, a - p, *bi], (), (), v.x,
                                Terminating(n)))


def _p13P1_rhs(v):
    ai, bi = v.extras("a"), v.extras("b")
    a, b, c, d, n, x = v.a, v.b, v.c, v.d, v.n, v.x
    lam, g2 = v["lambda"], v.gamma_sq
    outer = SeriesSpec(
        [lam, lam + b - a, lam + c - a, lam + d - a, a / 2, (a + 1) / 2, *ai, -n],
        [lam / 2, (lam + 1) / 2, 1 + a - b, 1 + a - c, 1 + a - d, *bi],
        [(lam / 2 + 1, g2)], [(lam / 2, g2)], x, Terminating(n),
    )

    def inner(m):
        return SeriesSpec([a + 2 * m, a - lam, *_shift(ai, m), -n + m],
                          [1 + lam + 2 * m, *_shift(bi, m)], (), (), x, Terminating(n - m))

    return Side(body=DoubleSum(outer, inner))


def _p13P3_lhs(v):
    a, b, c, d, e, f, g, p, q, n = v.a, v.b, v.c, v.d, v.e, v.f, v.g, v.p, v.q, v.n
    return Side(body=_unit(
        [a, 1 + a / 2, b, c, d, e, f, g, a - p + 1, p + 1, a - q + 1, q + 1, -n],
        [a / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a - f, 1 + a - g,
         p, a - p, q, a - q, 1 + a + n],
        n,
    ))


def _p13P3_rhs(v):
    a, b, c, d, e, f, g, n = v.a, v.b, v.c, v.d, v.e, v.f, v.g, v.n
    lam, mu = v["lambda"], v.mu
    return Side(
        (
            _pr([1 + a, 1 + lam - e, 1 + lam - f, 1 + lam - g],
                [1 + lam, 1 + a - e, 1 + a - f, 1 + a - g], n),
            PairedPochRatio(mu / 2 + 1, mu / 2, v.delta_sq, n),
        ),
        _unit(
            [lam, 1 + lam / 2, lam + b - a, lam + c - a, lam + d - a, e, f, g, -n],
            [lam / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + lam - e, 1 + lam - f, 1 + lam - g,
             1 + lam + n],
            n,
            up=[(lam / 2 + 1, v.gamma_sq), (lam / 2 + 1, v.eps_sq)],
            lp=[(lam / 2, v.gamma_sq), (lam / 2, v.eps_sq)],
        ),
    )


def _eps_sq(v):
    a, e, f, g, q, n, mu, lam = v.a, v.e, v.f, v.g, v.q, v.n, v.mu, v["lambda"]
    num = (q * (a - q) * (a - e - f) * (a - e - g) * (a - f - g)
           + n * (mu + n) * (e * f * g + q * (a - q) * (a - e - f - g)))
    den = ((a - e - f) * (a - e - g) * (a - f - g)
           - (mu + n) * (e * f + e * g + f * g + a * (a - e - f - g) - q * (a - q)))
    return lam ** 2 / 4 - aux_div(num, den, "(a-e-f)(a-e-g)(a-f-g) - (mu+n)(ef+eg+fg+a(a-e-f-g)-q(a-q))")


def _delta_sq_13P3(v):
    return v.mu ** 2 / 4 - _svf_fraction(v, v.q, v.e, v.f, v.g)


def _vwp_13_rhs(v, pairs):
    a, b, c, d, w, n = v.a, v.b, v.c, v.d, v.w, v.n
    lam = v["lambda"]
    return _unit(
        [lam, 1 + lam / 2, a / 2, (a + 1) / 2, lam + b - a, lam + c - a, lam + d - a, 1 + a - w, -n],
        [lam / 2, (2 + 2 * lam - a) / 2, (1 + 2 * lam - a) / 2, 1 + a - b, 1 + a - c, 1 + a - d,
         lam + w - a, 1 + lam + n],
        n,
        up=[(lam / 2 + 1, s) for s in pairs],
        lp=[(lam / 2, s) for s in pairs],
    )


def _pref_13P4(v):
    a, n, lam, al = v.a, v.n, v["lambda"], v.alpha
    return _pr([2 * lam - a, lam - a, al + 1], [1 + lam, 2 * lam - 2 * a, al], n)


def _p13P4_lhs(v):
    a, b, c, d, p, q, w, n = v.a, v.b, v.c, v.d, v.p, v.q, v.w, v.n
    return Side(body=_unit([a, b, c, d, a - p + 1, p + 1, q + 1, -n],
                           [1 + a - b, 1 + a - c, 1 + a - d, p, a - p, q, w], n))


def _p13P4_rhs(v):
    return Side((_pref_13P4(v),), _vwp_13_rhs(v, [v.gamma_sq, v.delta_sq]))


def _c1C13P4_lhs(v):
    a, b, c, d, q, w, n = v.a, v.b, v.c, v.d, v.q, v.w, v.n
    return Side(body=_unit([a, b, c, d, q + 1, -n], [1 + a - b, 1 + a - c, 1 + a - d, q, w], n))


def _c1C13P4_rhs(v):
    return Side((_pref_13P4(v),), _vwp_13_rhs(v, [v.delta_sq]))


W_13P4 = Derived("w", "1+2a-2*lambda-n", lambda v: 1 + 2 * v.a - 2 * v["lambda"] - v.n, "3e13P4")
ALPHA_13P4 = Derived("alpha", "q(2*lambda-a)/(2q-a)",
                     lambda v: aux_div(v.q * (2 * v["lambda"] - v.a), 2 * v.q - v.a, "2q - a"), "4e13P4")
DELTA_SQ_13P4 = Derived("delta_sq", "lambda^2/4 - (q(2*lambda-a) + n(2q-a))/2",
                        lambda v: v["lambda"] ** 2 / 4
                        - (v.q * (2 * v["lambda"] - v.a) + v.n * (2 * v.q - v.a)) / 2, "6e13P4")


# -- quadratic transformations (formal in x) --------------------------------------

def _fx(upper, lower, v):
    return SeriesSpec(upper, lower, (), (), X, Formal(v.N))


def _fq(upper, lower, v):
    return SeriesSpec(upper, lower, (), (), QUADRATIC, Formal(v.N))


def _e1e6_lhs(v):
    a, b, c = v.a, v.b, v.c
    return Side(body=_fx([a, b, c], [1 + a - b, 1 + a - c], v))


def _e1e6_rhs(v):
    a, b, c = v.a, v.b, v.c
    return Side((PSBinomial(-a),), _fq([a / 2, (a + 1) / 2, 1 + a - b - c], [1 + a - b, 1 + a - c], v))


def _e2e6_lhs(v):
    a, b, c = v.a, v.b, v.c
    return Side(body=_fx([a, 1 + a / 2, b, c], [a / 2, 1 + a - b, 1 + a - c], v))


def _e2e6_rhs(v):
    a, b, c = v.a, v.b, v.c
    return Side((PSLinear(1, 1), PSBinomial(-a - 1)),
                _fq([(a + 1) / 2, (a + 2) / 2, 1 + a - b - c], [1 + a - b, 1 + a - c], v))


def _p6P1_lhs(v):
    a, b, c, p, q = v.a, v.b, v.c, v.p, v.q
    return Side(body=_fx([a, b, c, a - p + 1, p + 1, q + 1], [1 + a - b, 1 + a - c, p, a - p, q], v))


def _p6P1_rhs(v):
    a, b, c, g = v.a, v.b, v.c, v.gamma
    return Side(
        (PSLinear(1, v.slope), PSBinomial(-a - 1)),
        _fq([a / 2, (a + 1) / 2, a - b - c, g + 1], [1 + a - b, 1 + a - c, g], v),
        _delta_factor(v),
    )


def _c1C6P1_lhs(v):
    a, b, c, p = v.a, v.b, v.c, v.p
    return Side(body=_fx([a, b, c, a - p + 1, p + 1], [1 + a - b, 1 + a - c, p, a - p], v))


def _c1C6P1_rhs(v):
    a, b, c, g = v.a, v.b, v.c, v.gamma
    return Side((PSBinomial(-a),),
                _fq([a / 2, (a + 1) / 2, a - b - c, g + 1], [1 + a - b, 1 + a - c, g], v))


def _c2C6P1_lhs(v):
    a, b, c, q = v.a, v.b, v.c, v.q
    return Side(body=_fx([a, b, c, q + 1], [1 + a - b, 1 + a - c, q], v))


def _c2C6P1_rhs(v):
    a, b, c = v.a, v.b, v.c
    return Side(
        (PSLinear(1, v.slope), PSBinomial(-a - 1)),
        _fq([a / 2, (a + 1) / 2, 1 + a - b - c], [1 + a - b, 1 + a - c], v),
        _delta_factor(v),
    )


SLOPE = Derived("slope", "(a-q)/q", lambda v: aux_div(v.a - v.q, v.q, "q"))


# -- numeric soft checks at x = -1 ------------------------------------------------

def _open(upper, lower, z):
    return SeriesSpec(upper, lower, (), (), Fraction(z), None)


def _c3C6P1_lhs(v):
    a, b, c, p, q = v.a, v.b, v.c, v.p, v.q
    return Side(body=_open([a, b, c, a - p + 1, p + 1, q + 1], [1 + a - b, 1 + a - c, p, a - p, q], -1))


def _c3C6P1_rhs(v):
    a, b, c, q, g = v.a, v.b, v.c, v.q, v.gamma
    k = aux_div(2 * q - a, q, "q") * Fraction(2) ** int(-a - 1)
    return Side((Const(k),), _open([a / 2, (a + 1) / 2, a - b - c, g + 1], [1 + a - b, 1 + a - c, g], 1))


def _e3e6_lhs(v):
    a, b, c = v.a, v.b, v.c
    return Side(body=_open([a, b, c], [1 + a - b, 1 + a - c], -1))


def _e3e6_rhs(v):
    a, b, c = v.a, v.b, v.c
    return Side((Const(Fraction(2) ** int(-a)),),
                _open([a / 2, (a + 1) / 2, 1 + a - b - c], [1 + a - b, 1 + a - c], 1))


# LHS terms at -1 decay like k^(-1-excess); keep the excess comfortably positive
SOFT_MIN_EXCESS = Fraction(1, 2)


def _soft_c3C6P1(v):
    if 2 * v.q == v.a:
        return ("q-equals-half-a", "q = a/2")
    if v.a - 2 * v.b - 2 * v.c - 1 < SOFT_MIN_EXCESS:
        return ("slow-alternating-convergence", "a - 2b - 2c - 1 < 1/2")
    return None


def _soft_e3e6(v):
    if 2 + v.a - 2 * v.b - 2 * v.c < SOFT_MIN_EXCESS:
        return ("slow-alternating-convergence", "2 + a - 2b - 2c < 1/2")
    return None


_DERIVED_12P2 = (
        Derived("f", "3+a+b+c-d-e-n", lambda v: 3 + v.a + v.b + v.c - v.d - v.e - v.n, "2e12P2"),
        Derived("alpha", "q(e-c-1)(f-c-1)/((c-q)(d-a-b-1))",
                lambda v: alpha_12P2(v.a, v.b, v.c, v.d, v.e, v.f, v.q), "3e12P2"),
        Derived("gamma", "p(d-a-1)(d-b-1)/(ab + p(d-a-b-1))",
                lambda v: gamma_12P2(v.a, v.b, v.d, v.p), "4e12P2"),
        Derived("delta", "(q(e-c-1)(f-c-1) + n(c-q)(d-a-b-1))/((e-c-1)(f-c-1) - (c-q)(d-a-b-1))",
                lambda v: delta_12P2(v.a, v.b, v.c, v.d, v.e, v.f, v.q, v.n), "5e12P2"),
)


# -- registry ------------------------------------------------------------------

def _build_registry() -> List[IdentityEntry]:
    entries = _summation_entries()
    entries += [
        IdentityEntry(
            "prop-11P1", "2e11P1", "r+6F(s+4)(x) as a finite double sum",
            ("a", "b", "c", "p"), (_gamma_np("1e11P1"),),
            _p11P1_lhs, _p11P1_rhs, extra_lists=True,
        ),
        IdentityEntry(
            "prop-3P16", "1e3P16", "7F6(1) with two unit-shift pairs to a balanced 7F6(1)",
            ("a", "b", "c", "p", "q", "w"),
            (Derived("alpha", ALPHA_W.formula, _alpha_w, "2e3P16"),
             Derived("beta", BETA_W.formula, _beta_w, "3e3P16"),
             _gamma_np("4e3P16")),
            _p3P16_lhs, _p3P16_rhs,
            structural_flags=(("rhs", SAALSCHUTZIAN),),
        ),
        IdentityEntry(
            "cor-1C3P16", "1e1C3P16", "6F5(1) to a balanced 6F5(1)",
            ("a", "b", "c", "p", "w"), (_gamma_np("2e1C3P16"),),
            _c1C3P16_lhs, _c1C3P16_rhs,
            structural_flags=(("rhs", SAALSCHUTZIAN),),
            note="limit q -> infinity of prop-3P16; verified independently",
        ),
        IdentityEntry(
            "cor-2C3P16", "1e2C3P16", "5F4(1) to a balanced 6F5(1)",
            ("a", "b", "c", "q", "w"),
            (Derived("alpha", ALPHA_W.formula, _alpha_w, "2e2C3P16"),
             Derived("beta", BETA_W.formula, _beta_w, "3e2C3P16")),
            _c2C3P16_lhs, _c2C3P16_rhs,
            structural_flags=(("rhs", SAALSCHUTZIAN),),
            note="limit p -> infinity of prop-3P16; verified independently",
        ),
        IdentityEntry(
            "prop-11P2", "1e11P2", "9F8(1) to a double sum of balanced series",
            ("a", "b", "c", "d", "e", "p", "q", "w"),
            (Derived("alpha", ALPHA_W.formula, _alpha_w, "2e11P2"),
             Derived("beta", BETA_W.formula, _beta_w, "3e11P2"),
             _gamma_np("4e11P2")),
            _p11P2_lhs, _p11P2_rhs,
        ),
        IdentityEntry(
            "eq-1e1C11P2", "1e1C11P2", "very-well-poised 9F8(1) to a balanced 5F4(1)",
            ("a", "b", "c", "d", "e", "p"), (_gamma_np("2e1C11P3"),),
            _e1C11P2_lhs, _e1C11P2_rhs,
            structural_flags=(("lhs", VERY_WELL_POISED), ("rhs", SAALSCHUTZIAN)),
            note="limits q -> a/2, w -> 1+a+n of prop-11P2; verified independently",
        ),
        IdentityEntry(
            "prop-12P1", "2e12P1", "r+4F(s+2)(x) as a finite double sum",
            ("a", "b", "c", "p"),
            (Derived("gamma", "p(c-a-1)(c-b-1)/(ab + p(c-a-b-1))", _gamma_balanced, "1e12P1"),),
            _p12P1_lhs, _p12P1_rhs, extra_lists=True,
        ),
        IdentityEntry(
            "prop-12P2", "1e12P2", "balanced 6F5(1) to balanced 6F5(1)",
            ("a", "b", "c", "d", "e", "p", "q"), _DERIVED_12P2,
            _p12P2_lhs, _p12P2_rhs,
            constraints_note="d+e+f-a-b-c+n = 3 (f derived)",
            structural_flags=(("lhs", SAALSCHUTZIAN), ("rhs", SAALSCHUTZIAN)),
        ),
        IdentityEntry(
            "remark-1R12P2", "2e1R12P2", "reflection symmetry of the normalized balanced 6F5(1)",
            ("a", "b", "c", "d", "e", "p", "q"), _DERIVED_12P2 + (
                Derived("alpha_reflected", "alpha evaluated at the reflected parameters",
                        lambda v: alpha_12P2(v.d - v.a - 1, v.d - v.b - 1, v.c, v.d, 2 + v.c - v.e - v.n,
                                             2 + v.c - v.f - v.n, v.delta), "3e12P2"),
            ),
            _r1R12P2_lhs, _r1R12P2_rhs,
            constraints_note="d+e+f-a-b-c+n = 3 (f derived)",
        ),
        IdentityEntry(
            "cor-1C12P2", "1e1C12P2", "balanced 5F4(1) to balanced 5F4(1)",
            ("a", "b", "c", "d", "e", "p"),
            (Derived("f", "2+a+b+c-d-e-n", lambda v: 2 + v.a + v.b + v.c - v.d - v.e - v.n, "2e1C12P2"),
             Derived("gamma", "p(d-a-1)(d-b-1)/(ab + p(d-a-b-1))",
                     lambda v: gamma_12P2(v.a, v.b, v.d, v.p), "3e1C12P2")),
            _c1C12P2_lhs, _c1C12P2_rhs,
            constraints_note="d+e+f-a-b-c+n = 2 (f derived)",
            structural_flags=(("lhs", SAALSCHUTZIAN), ("rhs", SAALSCHUTZIAN)),
        ),
        IdentityEntry(
            "cor-2C12P2", "1e2C12P2", "4F3(1) with a unit-shift pair to 4F3(1)",
            ("a", "c", "d", "e", "p"),
            (Derived("gamma", "p(d-a-1)/(p-a)",
                     lambda v: aux_div(v.p * (v.d - v.a - 1), v.p - v.a, "p - a"), "2e2C12P2"),),
            _c2C12P2_lhs, _c2C12P2_rhs,
            note="limit b -> infinity of cor-1C12P2; verified independently",
        ),
        IdentityEntry(
            "eq-3e2C12P2", "3e2C12P2", "Sheppard-Thomae relation between 3F2(1) series",
            ("a", "c", "d", "e"), (),
            _e3e2C12P2_lhs, _e3e2C12P2_rhs,
            note="limit p -> infinity of cor-2C12P2; verified independently",
        ),
        IdentityEntry(
            "prop-13P1", "2e13P1", "r+7F(s+5)(x) as a double sum with a conjugate pair",
            ("a", "b", "c", "d", "p"),
            (Derived("lambda", "2a-b-c-d", LAMBDA.fn, "1e13P1"), _gamma_sq_svf("3e13P1")),
            _p13P1_lhs, _p13P1_rhs, extra_lists=True,
        ),
        IdentityEntry(
            "prop-13P3", "2e13P3", "very-well-poised 13F12(1) to very-well-poised 13F12(1)",
            ("a", "b", "c", "d", "e", "f", "p", "q"),
            (
                Derived("g", "3a-b-c-d-e-f+n", lambda v: 3 * v.a - v.b - v.c - v.d - v.e - v.f + v.n, "1e13P3"),
                Derived("lambda", "2a-b-c-d", LAMBDA.fn, "3e13P3"),
                Derived("mu", "2a-e-f-g", lambda v: 2 * v.a - v.e - v.f - v.g, "4e13P3"),
                _gamma_sq_svf("5e13P3"),
                Derived("delta_sq", "mu^2/4 - q(a-q)(a-e-f)(a-e-g)(a-f-g)/(efg + q(a-q)(a-e-f-g))",
                        _delta_sq_13P3, "6e13P3"),
                Derived("eps_sq",
                        "lambda^2/4 - [q(a-q)(a-e-f)(a-e-g)(a-f-g) + n(mu+n)(efg + q(a-q)(a-e-f-g))]"
                        " / [(a-e-f)(a-e-g)(a-f-g) - (mu+n)(ef+eg+fg+a(a-e-f-g)-q(a-q))]",
                        _eps_sq, "7e13P3"),
            ),
            _p13P3_lhs, _p13P3_rhs,
            constraints_note="3a = b+c+d+e+f+g-n (g derived)",
            structural_flags=(("lhs", VERY_WELL_POISED), ("rhs", VERY_WELL_POISED)),
        ),
        IdentityEntry(
            "prop-13P4", "1e13P4", "balanced 8F7(1) to very-well-poised 13F12(1)",
            ("a", "b", "c", "d", "p", "q"),
            (Derived("lambda", "2a-b-c-d", LAMBDA.fn, "2e13P4"), W_13P4, ALPHA_13P4,
             _gamma_sq_svf("5e13P4"), DELTA_SQ_13P4),
            _p13P4_lhs, _p13P4_rhs,
            constraints_note="w = 1+2a-2*lambda-n (derived)",
            structural_flags=(("lhs", SAALSCHUTZIAN), ("rhs", VERY_WELL_POISED)),
        ),
        IdentityEntry(
            "cor-1C13P4", "1e1C13P4", "balanced 6F5(1) to very-well-poised 11F10(1)",
            ("a", "b", "c", "d", "q"),
            (Derived("lambda", "1+2a-b-c-d", lambda v: 1 + 2 * v.a - v.b - v.c - v.d, "2e1C13P4"),
             Derived("w", W_13P4.formula, W_13P4.fn, "3e1C13P4"),
             Derived("alpha", ALPHA_13P4.formula, ALPHA_13P4.fn, "4e1C13P4"),
             Derived("delta_sq", DELTA_SQ_13P4.formula, DELTA_SQ_13P4.fn, "5e1C13P4")),
            _c1C13P4_lhs, _c1C13P4_rhs,
            constraints_note="w = 1+2a-2*lambda-n (derived)",
            structural_flags=(("lhs", SAALSCHUTZIAN), ("rhs", VERY_WELL_POISED)),
        ),
        IdentityEntry(
            "eq-1e6", "1e6", "Whipple quadratic transformation of 3F2(x)",
            ("a", "b", "c"), (), _e1e6_lhs, _e1e6_rhs, check_mode=FORMAL,
        ),
        IdentityEntry(
            "eq-2e6", "2e6", "Bailey companion quadratic transformation of 4F3(x)",
            ("a", "b", "c"), (), _e2e6_lhs, _e2e6_rhs, check_mode=FORMAL,
            structural_flags=(("lhs", VERY_WELL_POISED),),
        ),
        IdentityEntry(
            "prop-6P1", "1e6P1", "quadratic transformation of 6F5(x) with an x-dependent parameter",
            ("a", "b", "c", "p", "q"), (_gamma_np("2e6P1"), SLOPE),
            _p6P1_lhs, _p6P1_rhs, check_mode=FORMAL,
            note="delta = (q+(a-q)x)/(1+x) enters as the per-term factor (delta+k)/delta",
        ),
        IdentityEntry(
            "cor-1C6P1", "1e1C6P1", "quadratic transformation of 5F4(x)",
            ("a", "b", "c", "p"), (_gamma_np("2e1C6P1"),),
            _c1C6P1_lhs, _c1C6P1_rhs, check_mode=FORMAL,
        ),
        IdentityEntry(
            "cor-2C6P1", "1e2C6P1", "quadratic transformation of 4F3(x) with an x-dependent parameter",
            ("a", "b", "c", "q"), (SLOPE,),
            _c2C6P1_lhs, _c2C6P1_rhs, check_mode=FORMAL,
        ),
        IdentityEntry(
            "cor-3C6P1", "1e3C6P1", "6F5(-1) in terms of a 4F3(1)",
            ("a", "b", "c", "p", "q"), (_gamma_np("2e3C6P1"),),
            _c3C6P1_lhs, _c3C6P1_rhs, check_mode=SOFT,
            integer_params=("a",), admissible=_soft_c3C6P1,
            constraints_note="a integer; q != a/2",
        ),
        IdentityEntry(
            "eq-3e6", "3e6", "Whipple's 3F2(-1) in terms of a 3F2(1)",
            ("a", "b", "c"), (), _e3e6_lhs, _e3e6_rhs, check_mode=SOFT,
            integer_params=("a",), admissible=_soft_e3e6,
            constraints_note="a integer",
        ),
    ]
    entries += _classical_entries()
    return entries


# -- specialization cross-checks ---------------------------------------------------

def _x_ps_lhs(v):
    return Side(body=S.sum_rakha_rathie(v.a, v.b, v.c, v.b, v.n).value)


def _x_ps_rhs(v):
    return Side(body=S.pfaff_saalschutz(v.a, v.b + 1, v.c, v.n).value)


def _x_dougall_lhs(v):
    return Side(body=S.sum_svf_9f8(v.a, v.b, v.c, v.d, v.b, v.n).value)


def _x_dougall_rhs(v):
    return Side(body=S.dougall(v.a, v.b + 1, v.c, v.d, v.n).value)


def _at(v, **over):
    w = Vars(v)
    w.update(over)
    return w


def _x_whipple_lhs_side(v):
    # cor-1C12P2 left side at p = b
    return _c1C12P2_lhs(_at(v, p=v.b))


def _x_whipple_classical_lhs(v):
    lhs, _, _ = S.whipple_4f3_series_pair(v.a, v.b + 1, v.c, v.d, v.e, v.n)
    return Side(body=lhs)


def _x_whipple_rhs_side(v):
    return _c1C12P2_rhs(_at(v, p=v.b, gamma=gamma_12P2(v.a, v.b, v.d, v.b)))


def _x_whipple_classical_rhs(v):
    _, pre, rhs = S.whipple_4f3_series_pair(v.a, v.b + 1, v.c, v.d, v.e, v.n)
    return Side((Const(pre),), rhs)


def _x_13P3_reduced_lhs(v):
    # 13P3 left side at q = e with the cancelling pairs removed: an 11F10
    a, b, c, d, e, f, g, p, n = v.a, v.b, v.c, v.d, v.e, v.f, v.g, v.p, v.n
    return Side(body=_unit(
        [a, 1 + a / 2, b, c, d, e + 1, f, g, a - p + 1, p + 1, -n],
        [a / 2, 1 + a - b, 1 + a - c, 1 + a - d, a - e, 1 + a - f, 1 + a - g, p, a - p, 1 + a + n],
        n,
    ))


def _x_13P3_rhs_at_e(v):
    return _p13P3_rhs(v)


def _env_of(v, names) -> ParamEnv:
    return ParamEnv({k: v[k] for k in names}, v.n)


_NAMES_12P2 = ("a", "b", "c", "d", "e", "p", "q")


def _x_twice_lhs(v):
    return Side(body=ftilde(_env_of(v, _NAMES_12P2)))


def _x_twice_rhs(v):
    return Side(body=ftilde(reflect_12P2(reflect_12P2(_env_of(v, _NAMES_12P2)))))


CROSS_CHECKS: List[IdentityEntry] = [
    IdentityEntry(
        "xcheck-pfaff-saalschutz", "e1R1C1P18", "4F3 sum at p=b against Pfaff-Saalschutz (b+1)",
        ("a", "b", "c"), (), _x_ps_lhs, _x_ps_rhs,
    ),
    IdentityEntry(
        "xcheck-dougall", "1e1R3C11P2", "9F8 sum at p=b against Dougall (b+1)",
        ("a", "b", "c", "d"), (), _x_dougall_lhs, _x_dougall_rhs,
    ),
    IdentityEntry(
        "xcheck-whipple-4f3-lhs", "1e1C12P2", "cor-1C12P2 left side at p=b against classical 4F3 (b+1)",
        ("a", "b", "c", "d", "e"),
        (Derived("f", "2+a+b+c-d-e-n", lambda v: 2 + v.a + v.b + v.c - v.d - v.e - v.n),),
        _x_whipple_lhs_side, _x_whipple_classical_lhs,
    ),
    IdentityEntry(
        "xcheck-whipple-4f3-rhs", "1e1C12P2", "cor-1C12P2 right side at p=b against classical transform (b+1)",
        ("a", "b", "c", "d", "e"),
        (Derived("f", "2+a+b+c-d-e-n", lambda v: 2 + v.a + v.b + v.c - v.d - v.e - v.n),),
        _x_whipple_rhs_side, _x_whipple_classical_rhs,
    ),
    IdentityEntry(
        "xcheck-13P3-q-equals-e", "2e13P3", "prop-13P3 right side at q=e against the reduced 11F10",
        ("a", "b", "c", "d", "e", "f", "p"),
        (
            Derived("q", "e", lambda v: v.e),
            Derived("g", "3a-b-c-d-e-f+n", lambda v: 3 * v.a - v.b - v.c - v.d - v.e - v.f + v.n),
            Derived("lambda", "2a-b-c-d", LAMBDA.fn),
            Derived("mu", "2a-e-f-g", lambda v: 2 * v.a - v.e - v.f - v.g),
            _gamma_sq_svf(""),
            Derived("delta_sq", "mu^2/4 - ...", _delta_sq_13P3),
            Derived("eps_sq", "lambda^2/4 - ...", _eps_sq),
        ),
        _x_13P3_reduced_lhs, _x_13P3_rhs_at_e,
        structural_flags=(("rhs", VERY_WELL_POISED),),
    ),
    IdentityEntry(
        "xcheck-reflect-twice", "2e1R12P2", "normalized 6F5 unchanged by reflecting twice",
        _NAMES_12P2, (), _x_twice_lhs, _x_twice_rhs,
    ),
]


REGISTRY: List[IdentityEntry] = _build_registry()
_BY_ID: Dict[str, IdentityEntry] = {e.id: e for e in REGISTRY + CROSS_CHECKS}


def list_entries(include_cross_checks: bool = False) -> List[IdentityEntry]:
    return list(REGISTRY) + (list(CROSS_CHECKS) if include_cross_checks else [])


def get_entry(entry_id: str) -> IdentityEntry:
    try:
        return _BY_ID[entry_id]
    except KeyError:
        raise UnknownEntry(entry_id) from None


def compute_values(entry: IdentityEntry, env: ParamEnv, order: int = 12) -> Vars:
    """Free parameters plus derived ones, evaluated in declaration order."""
    given = env.as_dict()
    missing = [k for k in entry.free_params if k not in given]
    if entry.extra_lists and "x" not in given:
        missing.append("x")
    if missing:
        raise ConstraintViolation(f"{entry.id}: missing parameters {missing}")
    v = Vars(given)
    v["n"] = env.n
    v["N"] = order
    for d in entry.derived_params:
        val = d.fn(v)
        if d.name in given and given[d.name] != val:
            raise ConstraintViolation(
                f"{entry.id}: constraint violated, {d.name} = {given[d.name]} but {d.formula} = {val}"
            )
        v[d.name] = val
    for k in entry.integer_params:
        if v[k].denominator != 1:
            raise ConstraintViolation(f"{entry.id}: {k} must be an integer")
    return v


def instantiate(entry_id: str, env: ParamEnv, order: int = 12) -> IdentityInstance:
    entry = get_entry(entry_id)
    v = compute_values(entry, env, order)
    if entry.admissible is not None:
        bad = entry.admissible(v)
        if bad is not None:
            raise DegenerateError(*bad)
    lhs, rhs = entry.lhs(v), entry.rhs(v)
    lhs.validate()
    rhs.validate()
    return IdentityInstance(entry, env, v, lhs, rhs, order)


def residual(inst: IdentityInstance, soft_terms: int = 200000, soft_rel_tol=Fraction(1, 100)):
    """LHS - RHS in the carrier of the entry's check mode.

    exact -> Fraction; formal -> PowerSeries; soft -> (Fraction, diagnostics).
    """
    mode = inst.entry.check_mode
    if mode == EXACT:
        return inst.lhs.evaluate_exact() - inst.rhs.evaluate_exact()
    if mode == FORMAL:
        return ps_sub(inst.lhs.evaluate_formal(inst.order), inst.rhs.evaluate_formal(inst.order))
    if mode == SOFT:
        from .soft import soft_residual

        return soft_residual(inst.lhs, inst.rhs, soft_terms, soft_rel_tol)
    raise HyperError(f"unknown check mode {mode}")


def ftilde(env: ParamEnv) -> Fraction:
    """Normalized balanced 6F5 value used by the reflection remark."""
    return _ftilde_of(env).evaluate_exact()


def explain(entry_id: str) -> dict:
    e = get_entry(entry_id)
    return {
        **e.summary(),
        "derived_chain": [
            {"name": d.name, "formula": d.formula, "eq": d.label} for d in e.derived_params
        ],
        "structural_flags": [f"{s}:{f}" for s, f in e.structural_flags],
        "note": e.note,
    }
