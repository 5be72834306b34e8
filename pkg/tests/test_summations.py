from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from conftest import rationals
from hyperxf import summations as S
from hyperxf.errors import DegenerateError
from hyperxf.series import eval_terminating, excess, is_very_well_poised

n_small = st.integers(0, 6)


def _checked(closed, series, *args):
    try:
        value = closed(*args).value
        lhs = series(*args)
        if lhs.degeneracy() is not None:
            return None
    except DegenerateError:
        return None
    return value, eval_terminating(lhs)


def test_ext_chu_vandermonde_examples():
    assert S.sum_ext_chu_vandermonde(F(2, 3), F(1, 5), F(7, 2), 0).value == 1
    cf = S.sum_ext_chu_vandermonde(1, 3, 2, 1)
    assert cf.aux["q"] == 2
    # direct summation of 3F2(1,3,-1;3,2;1)
    assert cf.value == 1 - F(1, 2) == F(1, 2)


def test_ext_chu_vandermonde_b_equals_a_plus_one():
    # q = 0 here, so the closed form is 0/0; the series itself is not zero
    a, b, p = F(1, 3), F(4, 3), F(5, 7)
    with pytest.raises(DegenerateError) as info:
        S.sum_ext_chu_vandermonde(a, b, p, 1)
    assert info.value.predicate == "degenerate-closed-form"
    assert eval_terminating(S.ext_chu_vandermonde_series(a, b, p, 1)) == F(2, 5)


def test_ext_chu_vandermonde_p_equals_a():
    with pytest.raises(DegenerateError) as info:
        S.sum_ext_chu_vandermonde(2, 5, 2, 3)
    assert info.value.predicate == "aux-denominator-zero"


def test_rakha_rathie_example():
    cf = S.sum_rakha_rathie(F(1, 2), 1, 3, F(1, 3), 1)
    assert cf.aux["q"] == F(3, 4)
    assert cf.value == 1 + F(4, 3) == F(7, 3)
    assert eval_terminating(S.rakha_rathie_series(F(1, 2), 1, 3, F(1, 3), 1)) == F(7, 3)
    assert S.sum_rakha_rathie(F(1, 2), 1, 3, F(1, 3), 0).value == 1


def test_gamma2_equals_q():
    args = (F(1, 2), F(2, 3), F(7, 4), F(-3, 5))
    assert S.sum_rr_formB(*args, 2).aux["gamma2"] == S.sum_rakha_rathie(*args, 2).aux["q"]


def test_zero_length_sums_are_one():
    a, b, c, d, p = F(1, 3), F(2, 5), F(-7, 4), F(5, 2), F(1, 7)
    for cf in (S.sum_rr_formA(a, b, c, p, 0), S.sum_rr_formB(a, b, c, p, 0),
               S.sum_svf_9f8(a, b, c, d, p, 0), S.sum_svf_formB(a, b, c, d, p, 0)):
        assert cf.value == 1


def test_classical_examples():
    # 2F1(a,-n;b;1) at n=1: 1 - a/b
    a, b = F(2, 3), F(5, 7)
    assert S.chu_vandermonde(a, b, 1).value == 1 - a / b
    assert eval_terminating(S.chu_vandermonde_series(a, b, 3)) == S.chu_vandermonde(a, b, 3).value


@given(rationals(), rationals(), rationals(), n_small)
def test_ext_chu_vandermonde_direct(a, b, p, n):
    r = _checked(S.sum_ext_chu_vandermonde, S.ext_chu_vandermonde_series, a, b, p, n)
    assume(r is not None)
    assert r[0] == r[1]


@pytest.mark.parametrize("closed,series", [
    (S.sum_rakha_rathie, S.rakha_rathie_series),
    (S.sum_rr_formA, S.rr_formA_series),
    (S.sum_rr_formB, S.rr_formB_series),
    (S.pfaff_saalschutz, S.pfaff_saalschutz_series),
])
@given(a=rationals(), b=rationals(), c=rationals(), p=rationals(), n=n_small)
def test_four_parameter_sums(closed, series, a, b, c, p, n):
    args = (a, b, c, n) if closed is S.pfaff_saalschutz else (a, b, c, p, n)
    r = _checked(closed, series, *args)
    assume(r is not None)
    assert r[0] == r[1]


@pytest.mark.parametrize("closed,series", [
    (S.sum_svf_9f8, S.svf_9f8_series),
    (S.sum_svf_formB, S.svf_formB_series),
])
@given(a=rationals(), b=rationals(), c=rationals(), d=rationals(), p=rationals(), n=n_small)
def test_nine_f_eight_sums(closed, series, a, b, c, d, p, n):
    r = _checked(closed, series, a, b, c, d, p, n)
    assume(r is not None)
    assert r[0] == r[1]
    assert is_very_well_poised(series(a, b, c, d, p, n))


@given(rationals(), rationals(), rationals(), rationals(), n_small)
def test_dougall_direct(a, b, c, d, n):
    r = _checked(S.dougall, S.dougall_series, a, b, c, d, n)
    assume(r is not None)
    assert r[0] == r[1]


@given(rationals(), rationals(), rationals(), n_small)
def test_rakha_rathie_at_p_equals_b(a, b, c, n):
    try:
        lhs = S.sum_rakha_rathie(a, b, c, b, n).value
        rhs = S.pfaff_saalschutz(a, b + 1, c, n).value
    except DegenerateError:
        assume(False)
    assert lhs == rhs


@given(rationals(), rationals(), rationals(), rationals(), n_small)
def test_svf_at_p_equals_b(a, b, c, d, n):
    try:
        lhs = S.sum_svf_9f8(a, b, c, d, b, n).value
        rhs = S.dougall(a, b + 1, c, d, n).value
    except DegenerateError:
        assume(False)
    assert lhs == rhs


@given(rationals(), rationals(), rationals(), rationals(), n_small)
def test_rr_sums_are_saalschutzian(a, b, c, p, n):
    try:
        specs = [S.rakha_rathie_series(a, b, c, p, n), S.rr_formA_series(a, b, c, p, n),
                 S.rr_formB_series(a, b, c, p, n)]
    except DegenerateError:
        assume(False)
    assert all(excess(s) == 1 for s in specs)


@given(rationals(0, 6, (1,)), rationals(0, 6, (1, 2)), n_small)
def test_svf_formB_pair_splitting(t, half, n):
    # choose p so that gamma_sq is t^2: solve for nothing, just compare paired vs split
    a, b, c, d = F(7, 2) + half, F(1, 3), F(1, 4), F(2, 5)
    for p in (F(1, 5), F(3, 7), F(-2, 9)):
        try:
            cf = S.sum_svf_formB(a, b, c, d, p, n)
            s = S.svf_formB_series(a, b, c, d, p, n)
        except DegenerateError:
            continue
        g2 = cf.aux["gamma_sq"]
        root = _rational_sqrt(g2)
        if root is None or s.degeneracy() is not None:
            continue
        from hyperxf.series import SeriesSpec
        (cu, _), = s.upper_pairs
        (cl, _), = s.lower_pairs
        split = SeriesSpec([*s.upper, cu - root, cu + root], [*s.lower, cl - root, cl + root],
                           (), (), s.arg, s.mode)
        assert eval_terminating(split) == eval_terminating(s)


def _rational_sqrt(q):
    from math import isqrt
    if q < 0:
        return None
    rn, rd = isqrt(q.numerator), isqrt(q.denominator)
    return F(rn, rd) if rn * rn == q.numerator and rd * rd == q.denominator else None
