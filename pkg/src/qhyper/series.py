"""Truncated formal power series in one variable over an exact coefficient ring.

Coefficients are either Fraction scalars or CauchyPoly values (see operators).
Multiplication is the naive O(N^2) convolution, which is ample at the orders
used here (N <= 32).
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import Rat, binom2, check_magnitude, qpoch


class TruncSeries:
    """Power series truncated at t^N: coeffs[n] is the coefficient of t^n."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = list(coeffs)
        if not self.coeffs:
            raise ValueError("series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, value, order: int) -> "TruncSeries":
        zero = value * 0
        return cls([value] + [zero] * order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls.constant(Fraction(1), order)

    def _common(self, other: "TruncSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._common(other)
        return TruncSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._common(other)
        return TruncSeries([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __neg__(self) -> "TruncSeries":
        return TruncSeries([-c for c in self.coeffs])

    def scale(self, factor) -> "TruncSeries":
        return TruncSeries([c * factor for c in self.coeffs])

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for i in range(n + 1):
            acc = a[0] * b[i]
            for j in range(1, i + 1):
                acc += a[j] * b[i - j]
            if isinstance(acc, Fraction):
                check_magnitude(acc)
            out.append(acc)
        return TruncSeries(out)

    def shift(self, k: int) -> "TruncSeries":
        """Multiply by t^k, keeping the truncation order."""
        if k == 0:
            return self
        zero = self.coeffs[0] * 0
        kept = self.coeffs[: max(self.order + 1 - k, 0)]
        return TruncSeries([zero] * min(k, self.order + 1) + kept)

    def truncate(self, order: int) -> "TruncSeries":
        if order >= self.order:
            return self
        return TruncSeries(self.coeffs[: order + 1])

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse mod t^{N+1}; needs a nonzero constant term."""
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series has zero constant term")
        inv0 = Fraction(1) / c0
        out = [inv0]
        for n in range(1, self.order + 1):
            acc = Fraction(0)
            for j in range(1, n + 1):
                acc += self.coeffs[j] * out[n - j]
            out.append(-inv0 * acc)
        return TruncSeries(out)

    def eval_horner(self, t0: Rat) -> Rat:
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * t0 + c
        return acc

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = self._common(other)
        return all(self.coeffs[i] == other.coeffs[i] for i in range(n + 1))

    def __repr__(self) -> str:
        return f"TruncSeries({self.coeffs!r})"


def max_abs_deviation(f: TruncSeries, g: TruncSeries) -> Rat:
    """Largest |coefficient difference| over the common truncation order."""
    n = min(f.order, g.order)
    dev = Fraction(0)
    for i in range(n + 1):
        d = abs(f.coeffs[i] - g.coeffs[i])
        if d > dev:
            dev = d
    return dev


def euler_product_series(c: Rat, q: Rat, order: int) -> TruncSeries:
    """(ct;q)_inf as a series in t: coefficient of t^k is
    (-1)^k q^{binom(k,2)} c^k / (q;q)_k."""
    coeffs = []
    for k in range(order + 1):
        coeffs.append((-1) ** k * q ** binom2(k) * c**k / qpoch(q, q, k))
    return TruncSeries(coeffs)


def euler_inverse_series(c: Rat, q: Rat, order: int) -> TruncSeries:
    """1/(ct;q)_inf as a series in t: coefficient of t^k is c^k / (q;q)_k."""
    return TruncSeries([c**k / qpoch(q, q, k) for k in range(order + 1)])


def cauchy_ratio_series(x: Rat, y: Rat, q: Rat, order: int) -> TruncSeries:
    """(yt;q)_inf / (xt;q)_inf: coefficient of t^n is P_n(x,y)/(q;q)_n."""
    from .families import cauchy_P

    return TruncSeries(
        [cauchy_P(n, x, y, q) / qpoch(q, q, n) for n in range(order + 1)]
    )


def qpoch_poly_series(a: Rat, q: Rat, j: int, order: int) -> TruncSeries:
    """(at;q)_j as a polynomial in t, embedded as a truncated series."""
    s = TruncSeries.one(order)
    aq = a
    for _ in range(j):
        factor = TruncSeries([Fraction(1), -aq] + [Fraction(0)] * max(order - 1, 0))
        s = s * factor.truncate(order)
        aq *= q
    return s
