"""The homogeneous q-difference operator and its hypergeometric series.

The operator is represented intrinsically on the Cauchy basis P_m(y,x), where
it acts by degree-lowering; the pointwise divided-difference definition is
kept as an independent cross-check oracle.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable

from .families import ParamVector, W_coeff, bracket_factor, cauchy_P
from .scalars import Rat, qpoch
from .series import TruncSeries


class CauchyPoly:
    """Finite linear combination sum_m c_m P_m(y,x) with exact coefficients.

    Supports the linear operations the operator calculus needs.  A general
    product of two basis elements is not itself a basis element, and nothing
    in this library requires re-expanding one, so multiplication is only
    defined against scalars.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict[int, Rat] | None = None):
        self.coeffs = {m: c for m, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def basis(cls, m: int, coeff: Rat = Fraction(1)) -> "CauchyPoly":
        return cls({m: coeff})

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def __add__(self, other):
        if not isinstance(other, CauchyPoly):
            return NotImplemented
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out.get(m, Fraction(0)) + c
        return CauchyPoly(out)

    def __sub__(self, other):
        if not isinstance(other, CauchyPoly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return CauchyPoly({m: -c for m, c in self.coeffs.items()})

    def __mul__(self, scalar):
        if isinstance(scalar, CauchyPoly):
            raise TypeError(
                "product of two Cauchy-basis polynomials is not basis-closed"
            )
        if scalar == 0:
            return CauchyPoly()
        return CauchyPoly({m: c * scalar for m, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, CauchyPoly):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def evaluate(self, x0: Rat, y0: Rat, q: Rat) -> Rat:
        """Evaluate at rational (x0, y0); basis element m is P_m(y0, x0)."""
        return sum(
            (c * cauchy_P(m, y0, x0, q) for m, c in self.coeffs.items()),
            Fraction(0),
        )

    def __repr__(self):
        return f"CauchyPoly({self.coeffs!r})"


def theta_basis(f: CauchyPoly, k: int, q: Rat) -> CauchyPoly:
    """k-fold operator action on the basis:
    Theta^k P_n(y,x) = (-1)^k (q;q)_n/(q;q)_{n-k} P_{n-k}(y,x);
    basis terms of degree < k are annihilated."""
    out: dict[int, Rat] = {}
    for m, c in f.coeffs.items():
        if m < k:
            continue
        factor = (-1) ** k * qpoch(q, q, m) / qpoch(q, q, m - k)
        out[m - k] = out.get(m - k, Fraction(0)) + c * factor
    return CauchyPoly(out)


def theta_pointwise(
    f: Callable[[Rat, Rat], Rat], x0: Rat, y0: Rat, q: Rat
) -> Rat:
    """Divided difference [f(x/q, y) - f(x, qy)] / (x/q - y) at a point."""
    den = x0 / q - y0
    if den == 0:
        raise ZeroDivisionError(f"singular point: x0/q = y0 = {y0}")
    return (f(x0 / q, y0) - f(x0, q * y0)) / den


def theta_pointwise_power(
    f: Callable[[Rat, Rat], Rat], k: int, q: Rat
) -> Callable[[Rat, Rat], Rat]:
    """k-fold nesting of the pointwise divided difference."""
    g = f
    for _ in range(k):
        g = (lambda h: lambda x, y: theta_pointwise(h, x, y, q))(g)
    return g


def op_apply_poly(pv: ParamVector, z: Rat, f: CauchyPoly, q: Rat) -> CauchyPoly:
    """Apply the hypergeometric operator series
    sum_k W_k (-z Theta)^k / (q;q)_k [(-1)^k q^{binom(k,2)}]^{1+s-r}
    to f.  Theta is nilpotent on each basis element, so the sum is finite."""
    e = pv.bracket_exponent
    result = CauchyPoly()
    for k in range(f.degree + 1):
        coeff = W_coeff(k, pv, q) * (-z) ** k / qpoch(q, q, k) * bracket_factor(k, q, e)
        if coeff != 0:
            result = result + theta_basis(f, k, q) * coeff
    return result


def op_apply_series(pv: ParamVector, z: Rat, F: TruncSeries, q: Rat) -> TruncSeries:
    """Termwise operator application to a series with CauchyPoly coefficients."""
    return TruncSeries([op_apply_poly(pv, z, c, q) for c in F.coeffs])


def cauchy_basis_series(order: int, q: Rat) -> TruncSeries:
    """(xt;q)_inf/(yt;q)_inf in the Cauchy basis: coefficient of t^n is
    P_n(y,x)/(q;q)_n."""
    return TruncSeries(
        [CauchyPoly.basis(n, Fraction(1) / qpoch(q, q, n)) for n in range(order + 1)]
    )


def shifted_cauchy_series(k: int, order: int, q: Rat) -> TruncSeries:
    """Series with t-coefficient n equal to P_{n+k}(y,x)/(q;q)_n: the
    index-shifted product P_k(y,x)(xt;q)_inf / ((xt;q)_k (yt;q)_inf)."""
    return TruncSeries(
        [
            CauchyPoly.basis(n + k, Fraction(1) / qpoch(q, q, n))
            for n in range(order + 1)
        ]
    )


def evaluate_series(F: TruncSeries, x0: Rat, y0: Rat, q: Rat) -> TruncSeries:
    """Evaluate every CauchyPoly coefficient at (x0, y0)."""
    return TruncSeries([c.evaluate(x0, y0, q) for c in F.coeffs])
