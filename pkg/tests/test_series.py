"""Truncated power series over exact rationals."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhyper.series import (
    TruncSeries,
    cauchy_ratio_series,
    euler_inverse_series,
    euler_product_series,
    max_abs_deviation,
    qpoch_poly_series,
)

coeff = st.fractions(min_value=-3, max_value=3, max_denominator=16)


def test_constant_and_one():
    s = TruncSeries.one(4)
    assert s.coeffs == [F(1), F(0), F(0), F(0), F(0)]
    assert s.order == 4
    assert TruncSeries.constant(F(2, 3), 2).coeffs == [F(2, 3), F(0), F(0)]


def test_empty_series_rejected():
    with pytest.raises(ValueError):
        TruncSeries([])


def test_mul_truncates_to_common_order():
    a = TruncSeries([F(1), F(1)])
    b = TruncSeries([F(1), F(2), F(3), F(4)])
    assert (a * b).order == 1
    assert (a * b).coeffs == [F(1), F(3)]


def test_shift_pads_and_drops():
    s = TruncSeries([F(1), F(2), F(3)])
    assert s.shift(1).coeffs == [F(0), F(1), F(2)]
    assert s.shift(5).coeffs == [F(0), F(0), F(0)]
    assert s.shift(0) is s


def test_eval_horner():
    s = TruncSeries([F(1), F(2), F(3)])
    assert s.eval_horner(F(1, 2)) == 1 + 1 + F(3, 4)


@given(st.lists(coeff, min_size=1, max_size=13))
@settings(max_examples=60, deadline=None)
def test_inverse_is_right_inverse(coeffs):
    if coeffs[0] == 0:
        coeffs[0] = F(1)
    s = TruncSeries(coeffs)
    prod = s * s.inverse()
    assert prod == TruncSeries.one(s.order)


def test_inverse_needs_unit():
    with pytest.raises(ZeroDivisionError):
        TruncSeries([F(0), F(1)]).inverse()


@given(a=st.lists(coeff, min_size=1, max_size=8), b=st.lists(coeff, min_size=1, max_size=8))
@settings(max_examples=60, deadline=None)
def test_mul_commutes(a, b):
    assert TruncSeries(a) * TruncSeries(b) == TruncSeries(b) * TruncSeries(a)


def test_euler_pair_reciprocal():
    q, c, N = F(1, 3), F(2, 5), 12
    prod = euler_product_series(c, q, N) * euler_inverse_series(c, q, N)
    assert prod == TruncSeries.one(N)


def test_euler_at_zero_argument():
    s = euler_product_series(F(0), F(1, 2), 4)
    assert s.coeffs == [F(1), F(0), F(0), F(0), F(0)]


def test_cauchy_ratio_equals_product_form():
    # (yt;q)_inf / (xt;q)_inf assembled two ways
    x, y, q, N = F(1, 2), F(-1, 3), F(1, 4), 10
    direct = cauchy_ratio_series(x, y, q, N)
    assembled = euler_product_series(y, q, N) * euler_inverse_series(x, q, N)
    assert max_abs_deviation(direct, assembled) == 0


def test_qpoch_poly_series_telescopes():
    # (at;q)_{j+1} = (at;q)_j * (1 - a q^j t)
    a, q, N = F(3, 7), F(1, 2), 8
    for j in range(4):
        lhs = qpoch_poly_series(a, q, j + 1, N)
        step = TruncSeries([F(1), -a * q**j] + [F(0)] * (N - 1))
        assert lhs == qpoch_poly_series(a, q, j, N) * step


def test_max_abs_deviation_picks_largest():
    f = TruncSeries([F(0), F(1), F(5)])
    g = TruncSeries([F(0), F(2), F(3)])
    assert max_abs_deviation(f, g) == 2
