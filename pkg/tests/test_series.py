from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import rationals
from hyperxf.errors import DegenerateError, HyperError
from hyperxf.series import (
    QUADRATIC,
    X,
    Formal,
    Partial,
    SeriesSpec,
    Terminating,
    eval_formal,
    eval_partial,
    eval_terminating,
    excess,
    is_very_well_poised,
    is_well_poised,
    term,
)


def spec(upper, lower, arg=1, mode=None, up=(), lp=()):
    return SeriesSpec(upper, lower, up, lp, arg, mode)


def test_term_examples():
    s = spec([-2, 1], [1], F(1, 3))
    assert term(s, 0) == 1
    assert term(s, 1) == F(-2, 3)
    assert term(spec([-1], [], up=[(1, 4)]), 1) == 3


def test_term_degenerate():
    with pytest.raises(DegenerateError, match="degenerate lower parameter"):
        term(spec([1], [-1]), 3)


def test_eval_terminating_examples():
    s = spec([-2, 1], [1], F(1, 3), Terminating(2))
    # binomial theorem oracle
    assert eval_terminating(s) == (1 - F(1, 3)) ** 2 == F(4, 9)
    assert eval_terminating(spec([-3], [], 1, Terminating(3))) == 0
    assert eval_terminating(spec([0, F(5, 2)], [F(7, 3)], 9, Terminating(0))) == 1


def test_eval_partial_examples():
    assert eval_partial(spec([1], [], 1, Partial(1))) == (1, 1)
    assert eval_partial(spec([1], [], F(1, 2), Partial(4))) == (F(15, 8), F(1, 8))
    assert eval_partial(spec([-2, 1], [1], F(1, 3)), 10) == (F(4, 9), 0)


def test_eval_formal_examples():
    a = F(2, 7)
    s = spec([a], [], X, Formal(2))
    assert list(eval_formal(s)) == [1, a, a * (a + 1) / 2]
    assert list(eval_formal(spec([F(3)], [], X, Formal(0)))) == [1]


def test_eval_formal_quadratic_single_term():
    # upper -1 kills all terms past k=1: 1 + c1 * (-4x)(1-x)^-2
    b, c = F(1, 3), F(5, 2)
    s = spec([-1, b], [c], QUADRATIC, Formal(2))
    c1 = -b / c
    assert list(eval_formal(s)) == [1, -4 * c1, -8 * c1]


def test_excess_examples():
    a, b, c, d, n = F(1, 2), F(2, 3), F(5, 4), F(-1, 5), 3
    assert excess(spec([a, b, -n], [c, d])) == c + d - a - b + n
    assert excess(spec([], [2], up=[(1, 5)])) == 0
    # Pfaff-Saalschutz series is Saalschutzian
    assert excess(spec([a, b, -n], [c, 1 + a + b - c - n])) == 1
    with pytest.raises(HyperError):
        excess(spec([1, 2], [3, 4]))


def test_terminating_needs_minus_n():
    with pytest.raises(HyperError):
        spec([1, 2], [3], 1, Terminating(2))


def test_formal_arg_needs_formal_mode():
    with pytest.raises(HyperError):
        spec([1], [], X, Terminating(0))


def test_degeneracy_predicate():
    assert spec([-3], [-1], 1, Terminating(3)).degeneracy() is not None
    assert spec([-1], [-1], 1, Terminating(1)).degeneracy() is None
    assert spec([-3], [], 1, Terminating(3), lp=[(1, 4)]).degeneracy() is not None


def test_well_poised_detection():
    a, b, c, d = F(1, 2), F(1, 3), F(1, 5), F(2, 7)
    n = 2
    e = 1 + 2 * a - b - c - d + n
    s = spec([a, 1 + a / 2, b, c, d, e, -n],
             [a / 2, 1 + a - b, 1 + a - c, 1 + a - d, 1 + a - e, 1 + a + n], 1, Terminating(n))
    assert is_well_poised(s) and is_very_well_poised(s)
    t = spec([a, b, -n], [1 + a - b, 2 + a + n], 1, Terminating(n))
    assert not is_well_poised(t)


def test_json_round_trip_and_errors():
    s = spec([-2, F(1, 3)], [F(7, 2)], F(-1, 3), Terminating(2), up=[(1, F(1, 4))], lp=[(2, 3)])
    data = s.to_json()
    assert data["arg"] == "-1/3" and data["mode"] == {"terminating": 2}
    assert SeriesSpec.from_json(data) == s
    f = spec([1], [2], X, Formal(4))
    assert SeriesSpec.from_json(f.to_json()) == f
    for bad in ({}, {"mode": {"bogus": 1}}, {"upper": ["x/y"], "mode": {"partial": 2}}):
        with pytest.raises(HyperError):
            SeriesSpec.from_json(bad)


small = rationals(-6, 6)


@given(st.lists(small, max_size=3), st.lists(small, max_size=3), small, st.integers(0, 6))
def test_reverse_summation(upper, lower, z, n):
    s = spec([*upper, -n], lower, z, Terminating(n))
    if s.degeneracy() is not None:
        return
    backward = sum((term(s, k) for k in range(n, -1, -1)), F(0))
    assert backward == eval_terminating(s)


@given(st.lists(small, max_size=3), st.lists(small, max_size=3), small, st.integers(0, 6))
def test_partial_matches_terminating(upper, lower, z, n):
    s = spec([*upper, -n], lower, z, Terminating(n))
    if s.degeneracy() is not None:
        return
    assert eval_partial(s, n + 1)[0] == eval_terminating(s)


@given(small, rationals(0, 4), small, small, st.integers(0, 5))
def test_pairs_match_split_parameters(c, t, u, l, n):
    paired = spec([u, -n], [l], 1, Terminating(n), up=[(c, t * t)], lp=[(c + 1, t * t)])
    split = spec([u, c - t, c + t, -n], [l, c + 1 - t, c + 1 + t], 1, Terminating(n))
    if split.degeneracy() is not None:
        return
    assert eval_terminating(paired) == eval_terminating(split)


@given(st.lists(small, max_size=3), st.lists(small, max_size=2), small, st.integers(0, 5))
def test_formal_substitution_matches_terminating(upper, lower, z, n):
    s = spec([*upper, -n], lower, z, Terminating(n))
    if s.degeneracy() is not None:
        return
    poly = eval_formal(spec([*upper, -n], lower, X, Formal(n)))
    assert poly.evaluate(z) == eval_terminating(s)
