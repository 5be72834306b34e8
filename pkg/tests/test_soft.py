"""Fixed-point soft summation, and the x = -1 identities it is used for."""

import math
from fractions import Fraction as F

import pytest

from hyperxf.catalog import get_entry, instantiate, residual
from hyperxf.errors import DegenerateError
from hyperxf.series import SeriesSpec
from hyperxf.sides import Const, Side
from hyperxf.soft import soft_residual
from hyperxf.verifier import VerifyConfig, sample_env


def _open(upper, lower, z):
    return SeriesSpec(upper, lower, (), (), F(z), None)


def test_alternating_log_two():
    # 2F1(1,1;2;-1) = ln 2, checked against a zero right side offset by Const
    lhs = Side(body=_open([1, 1], [2], -1))
    rhs = Side((Const(F(0)),), _open([1], [], F(1, 2)))
    _, diag = soft_residual(lhs, rhs, 64000, F(1, 100))
    assert abs(float(diag["lhs_estimate"]) - math.log(2)) < 1e-6


def test_unit_argument_tail_correction():
    # Gauss: 2F1(1/2,1/2;3/2;1) = pi/2, excess 1/2
    rhs = Side(body=_open([F(1, 2), F(1, 2)], [F(3, 2)], 1))
    lhs = Side((Const(F(0)),), _open([1], [], F(1, 2)))
    _, diag = soft_residual(lhs, rhs, 200000, F(1, 100))
    assert abs(float(diag["rhs_estimate"]) - math.pi / 2) < 1e-4


def test_terminating_sides_are_exact():
    lhs = Side(body=_open([-3, F(1, 2)], [F(5, 2)], -1))
    rhs = Side(body=_open([-3, F(1, 2)], [F(5, 2)], -1))
    value, diag = soft_residual(lhs, rhs)
    assert value == 0 and diag["pass"] and diag["terms"] == [4, 4]


def test_divergent_unit_side_rejected():
    with pytest.raises(DegenerateError):
        soft_residual(Side(body=_open([1], [], -1)), Side(body=_open([1, 1], [1], 1)))


def test_whipple_minus_one_passes():
    cfg = VerifyConfig(seed=3)
    entry = get_entry("eq-3e6")
    for i in range(5):
        env = sample_env(entry, i, cfg)
        assert env["a"].denominator == 1
        _, diag = residual(instantiate("eq-3e6", env))
        assert diag["pass"], env


def _rgamma(x):
    x = float(x)
    return 0.0 if x <= 0 and x == int(x) else 1 / math.gamma(x)


def test_cor_3C6P1_needs_boundary_term():
    """The x -> -1 limit drops a term; adding it back closes the gap.

    As x -> -1 the x-dependent parameter tends to infinity, but the
    4F3(1) has excess 1/2, so sum k c_k Z^k grows like 1/(1+x) and the
    product with 1/delta keeps a finite piece:
    G(1+a-b) G(1+a-c) / (2 q gamma G(a) G(a-b-c)).
    """
    cfg = VerifyConfig(seed=7)
    entry = get_entry("cor-3C6P1")
    gaps = []
    for i in range(8):
        env = sample_env(entry, i, cfg)
        inst = instantiate("cor-3C6P1", env)
        _, diag = residual(inst)
        v = inst.values
        extra = (math.gamma(float(1 + v.a - v.b)) * math.gamma(float(1 + v.a - v.c))
                 * _rgamma(v.a) * _rgamma(v.a - v.b - v.c) / (2 * float(v.q) * float(v.gamma)))
        lhs, rhs = float(diag["lhs_estimate"]), float(diag["rhs_estimate"])
        assert abs(lhs - rhs - extra) <= 1e-2 * max(abs(lhs), abs(rhs + extra))
        gaps.append(abs(extra))
    assert max(gaps) > 1e-2
