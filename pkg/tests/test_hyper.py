"""Basic hypergeometric series: terminating, formal, numeric regimes."""

from fractions import Fraction as F

import pytest

from qhyper.families import ParamVector
from qhyper.hyper import (
    DivergentSeriesError,
    phi_term,
    rphis_numeric,
    rphis_series_in_t,
    rphis_terminating,
    terminating_index,
)
from qhyper.scalars import qpoch, qpow


def test_phi_term_k0_is_one():
    pv = ParamVector((F(1, 2),), (F(1, 3),))
    assert phi_term(0, pv, F(1, 2), F(7)) == 1


def test_phi_term_sign_bracket():
    # r = s: exponent 1, term 1 carries a factor -z
    pv = ParamVector((F(0),), (F(0),))
    q = F(1, 2)
    assert phi_term(1, pv, q, F(1, 3)) == -F(1, 3) / qpoch(q, q, 1)


def test_terminating_index():
    q = F(1, 2)
    pv = ParamVector((qpow(q, -3), F(1, 5)), (F(1, 7),))
    assert terminating_index(pv, q) == 3
    assert terminating_index(ParamVector((F(1, 5),), ()), q) is None
    # a = 1 terminates immediately (n = 0)
    assert terminating_index(ParamVector((F(1),), ()), q) == 0


def test_rphis_terminating_needs_terminating_parameter():
    with pytest.raises(ValueError):
        rphis_terminating(ParamVector((F(1, 3),), ()), F(1, 2), F(1))


def test_chu_vandermonde_closed_forms():
    # 2Phi1[q^-n, a; c; q; q] = (c/a;q)_n a^n / (c;q)_n
    q, a, c = F(1, 2), F(3), F(1, 5)
    for n in range(8):
        pv = ParamVector((qpow(q, -n), a), (c,))
        lhs = rphis_terminating(pv, q, q)
        assert lhs == qpoch(c / a, q, n) * a**n / qpoch(c, q, n)
        # the companion evaluation at argument c q^n / a
        lhs2 = rphis_terminating(pv, q, c * q**n / a)
        assert lhs2 == qpoch(c / a, q, n) / qpoch(c, q, n)


def test_series_in_t_matches_numeric_at_point():
    pv = ParamVector((F(1, 3),), (F(1, 7),))
    q, c, t0 = F(1, 2), F(2, 5), F(1, 4)
    eps = F(1, 1 << 120)
    series = rphis_series_in_t(pv, q, c, 40)
    horner = series.eval_horner(t0)
    numeric = rphis_numeric(pv, q, c * t0, eps)
    assert abs(horner - numeric) < F(1, 1 << 60)


def test_numeric_terminating_shortcut():
    q = F(1, 2)
    pv = ParamVector((qpow(q, -2), F(5)), (F(1, 3),))
    z = F(9, 7)  # |z| > 1 is fine when the series terminates
    assert rphis_numeric(pv, q, z, F(1, 1 << 40)) == rphis_terminating(pv, q, z)


def test_numeric_divergence_guards():
    q, eps = F(1, 2), F(1, 1 << 40)
    with pytest.raises(DivergentSeriesError):
        rphis_numeric(ParamVector((F(1, 3), F(1, 5)), ()), q, F(1, 2), eps)
    with pytest.raises(DivergentSeriesError):
        rphis_numeric(ParamVector((F(1, 3),), ()), q, F(3, 2), eps)


def test_numeric_q_binomial_theorem():
    # 1Phi0[a;;q;z] = (az;q)_inf / (z;q)_inf
    from qhyper.scalars import qpoch_inf

    q, a, z = F(1, 2), F(1, 3), F(2, 5)
    eps = F(1, 1 << 120)
    lhs = rphis_numeric(ParamVector((a,), ()), q, z, eps)
    rhs = qpoch_inf(a * z, q, eps) / qpoch_inf(z, q, eps)
    assert abs(lhs - rhs) < F(1, 1 << 80)


def test_stability_under_smaller_eps():
    pv = ParamVector((F(1, 3),), (F(1, 7),))
    q, z = F(1, 2), F(1, 4)
    v1 = rphis_numeric(pv, q, z, F(1, 1 << 80))
    v2 = rphis_numeric(pv, q, z, F(1, 1 << 160))
    assert abs(v1 - v2) < F(1, 1 << 78)
