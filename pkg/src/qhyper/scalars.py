"""Exact rational scalars, q-Pochhammer symbols and q-binomial coefficients.

All arithmetic is over `fractions.Fraction`; nothing here ever rounds.  The
only "tolerance" in this module is the truncation-stopping threshold of the
infinite q-Pochhammer product, which still returns an exact rational (the
partial product).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction

#: Default bit-length cap on numerators/denominators.  Exact rational
#: pipelines can blow up instead of thrash; fail loudly when they do.
MAX_SCALAR_BITS = 1 << 16

_max_bits = MAX_SCALAR_BITS


class ScalarOverflowError(ArithmeticError):
    """Numerator or denominator exceeded the configured bit-length cap."""


class RootOfUnityError(ValueError):
    """q is (too close to) a root of unity: some (q;q)_k would vanish."""


def get_max_bits() -> int:
    return _max_bits


def set_max_bits(limit: int) -> int:
    """Set the scalar bit-length cap; returns the previous value.

    Tighter truncation thresholds legitimately need deeper exact partial sums
    (a (q;q)_k partial product carries O(k^2) bits), so the verification
    engine raises the cap in proportion to the requested precision.
    """
    global _max_bits
    if limit < 64:
        raise ValueError("cap below 64 bits would reject ordinary samples")
    previous = _max_bits
    _max_bits = limit
    return previous


def check_magnitude(x: Rat, limit: int | None = None) -> Rat:
    if limit is None:
        limit = _max_bits
    if x.numerator.bit_length() > limit or x.denominator.bit_length() > limit:
        raise ScalarOverflowError(
            f"rational exceeds {limit} bits "
            f"(num {x.numerator.bit_length()}b / den {x.denominator.bit_length()}b)"
        )
    return x


def as_rat(value) -> Rat:
    """Coerce ints, strings like '3/4' or '-2', and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


def binom2(n: int) -> int:
    """n choose 2, the ubiquitous q-exponent."""
    return n * (n - 1) // 2


def qpow(q: Rat, e: int) -> Rat:
    """q**e for a possibly negative integer exponent."""
    if e >= 0:
        return q**e
    return Fraction(1) / q ** (-e)


@dataclass(frozen=True)
class QContext:
    """Fixed base q plus the truncation policy.

    mode "formal": coefficientwise comparisons, q any nonzero rational that is
    not a root of unity.  mode "numeric": partial-sum comparisons, requires
    0 < |q| < 1.
    """

    q: Rat
    mode: str = "formal"
    default_order: int = 12
    term_threshold: Rat = field(default=Fraction(1, 1 << 80))

    def __post_init__(self):
        q = self.q
        if q == 0:
            raise ValueError("q must be nonzero")
        if self.mode not in ("formal", "numeric"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "numeric" and not (0 < abs(q) < 1):
            raise ValueError("numeric mode requires 0 < |q| < 1")
        if self.default_order < 1:
            raise ValueError("default_order must be positive")
        # (q;q)_k appears in every denominator; refuse q^k = 1 for k <= 2N.
        p = q
        for k in range(1, 2 * self.default_order + 1):
            if p == 1:
                raise RootOfUnityError(f"q^{k} = 1 with q = {q}")
            p *= q


def qpoch(a: Rat, q: Rat, n: int) -> Rat:
    """Finite q-shifted factorial (a;q)_n = prod_{k<n} (1 - a q^k)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = Fraction(1)
    aq = a
    for _ in range(n):
        result *= 1 - aq
        aq *= q
    return check_magnitude(result)


def qpoch_multi(params: Iterable[Rat], q: Rat, n: int) -> Rat:
    """(a1,...,ar;q)_n, the product of the individual symbols; empty -> 1."""
    result = Fraction(1)
    for a in params:
        result *= qpoch(a, q, n)
    return result


def qpoch_inf(a: Rat, q: Rat, eps: Rat) -> Rat:
    """Partial product for (a;q)_inf, truncated once |a q^K| < eps.

    Exact rational partial product; the dropped tail is O(|a| |q|^K / (1-|q|)).
    """
    if not 0 < abs(q) < 1:
        raise ValueError("qpoch_inf requires 0 < |q| < 1")
    if eps <= 0:
        raise ValueError("eps must be positive")
    result = Fraction(1)
    aq = a
    while abs(aq) >= eps:
        result *= 1 - aq
        aq *= q
        check_magnitude(result)
    return result


def qbinom(n: int, k: int, q: Rat) -> Rat:
    """Gaussian binomial [n k]_q; 0 when k is out of 0..n."""
    if k < 0 or k > n:
        return Fraction(0)
    den = qpoch(q, q, k) * qpoch(q, q, n - k)
    if den == 0:
        raise RootOfUnityError(f"(q;q)_k vanished for q = {q}")
    return qpoch(q, q, n) / den


def qpoch_shift(a: Rat, q: Rat, n: int) -> tuple[Rat, Rat]:
    """Both sides of the shift identity for (a q^{-n}; q)_n.

    Returns (lhs, rhs) where lhs = (a q^{-n};q)_n and
    rhs = (q/a;q)_n (-a)^n q^{-n - binom(n,2)}; the two are equal.
    """
    if a == 0:
        raise ValueError("a must be nonzero (q/a appears on the right side)")
    lhs = qpoch(a * qpow(q, -n), q, n)
    rhs = qpoch(q / a, q, n) * (-a) ** n * qpow(q, -n - binom2(n))
    return lhs, rhs
