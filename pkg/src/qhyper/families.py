"""All polynomial families, evaluated exactly at rational arguments.

Each family is implemented directly from its own defining sum, never derived
from the general polynomial, so that reduction tests compare independent
implementations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .scalars import Rat, binom2, qbinom, qpoch, qpoch_multi, qpow


class VanishingPochhammerError(ZeroDivisionError):
    """A lower-parameter Pochhammer symbol vanished inside a denominator."""


@dataclass(frozen=True)
class ParamVector:
    """Upper parameters (a_1..a_r) and lower parameters (b_1..b_s)."""

    upper: tuple = ()
    lower: tuple = ()

    def __init__(self, upper: Sequence[Rat] = (), lower: Sequence[Rat] = ()):
        object.__setattr__(self, "upper", tuple(upper))
        object.__setattr__(self, "lower", tuple(lower))

    @property
    def r(self) -> int:
        return len(self.upper)

    @property
    def s(self) -> int:
        return len(self.lower)

    @property
    def bracket_exponent(self) -> int:
        return 1 + self.s - self.r


@dataclass(frozen=True)
class FamilyPoint:
    x: Rat
    y: Rat
    z: Rat
    n: int


def cauchy_P(n: int, x: Rat, y: Rat, q: Rat) -> Rat:
    """Cauchy polynomial P_n(x,y) = (x-y)(x-qy)...(x-q^{n-1}y)."""
    result = Fraction(1)
    yq = y
    for _ in range(n):
        result *= x - yq
        yq *= q
    return result


def W_coeff(k: int, pv: ParamVector, q: Rat) -> Rat:
    """W_k = (a_1..a_r;q)_k / (b_1..b_s;q)_k."""
    den = Fraction(1)
    for b in pv.lower:
        p = qpoch(b, q, k)
        if p == 0:
            raise VanishingPochhammerError(
                f"lower parameter {b} gives ({b};q)_{k} = 0"
            )
        den *= p
    return qpoch_multi(pv.upper, q, k) / den


def bracket_factor(k: int, q: Rat, exponent: int) -> Rat:
    """[(-1)^k q^{binom(k,2)}]^exponent; exponent may be negative."""
    sign = -1 if (k % 2 == 1 and exponent % 2 == 1) else 1
    return sign * qpow(q, binom2(k) * exponent)


def psi_general(
    pt: FamilyPoint,
    pv: ParamVector,
    q: Rat,
    bracket_exponent: int | None = None,
) -> Rat:
    """The generalized q-hypergeometric polynomial.

    Value of (-1)^n q^{-binom(n,2)} sum_k [n k]_q bracket^{1+s-r} W_k
    P_{n-k}(y,x) z^k.  `bracket_exponent` overrides 1+s-r; that hook exists
    only for the reduction prober, which must test readings where the stated
    (r,s) disagrees with the parameter-list lengths.
    """
    n, x, y, z = pt.n, pt.x, pt.y, pt.z
    e = pv.bracket_exponent if bracket_exponent is None else bracket_exponent
    acc = Fraction(0)
    for k in range(n + 1):
        acc += (
            qbinom(n, k, q)
            * bracket_factor(k, q, e)
            * W_coeff(k, pv, q)
            * cauchy_P(n - k, y, x, q)
            * z**k
        )
    return (-1) ** n * qpow(q, -binom2(n)) * acc


def asc_phi(n: int, a: Rat, x: Rat, q: Rat) -> Rat:
    """Hahn / Al-Salam-Carlitz phi_n^{(a)}(x|q)."""
    return sum(
        (qbinom(n, k, q) * qpoch(a, q, k) * x**k for k in range(n + 1)),
        Fraction(0),
    )


def asc_psi(n: int, a: Rat, x: Rat, q: Rat) -> Rat:
    """Hahn / Al-Salam-Carlitz psi_n^{(a)}(x|q)."""
    acc = Fraction(0)
    for k in range(n + 1):
        acc += (
            qbinom(n, k, q)
            * qpow(q, k * (k - n))
            * qpoch(a * qpow(q, 1 - k), q, k)
            * x**k
        )
    return acc


def cao_phi3(n: int, a: Rat, b: Rat, c: Rat, x: Rat, y: Rat, q: Rat) -> Rat:
    """Three-parameter generalized Al-Salam-Carlitz phi_n^{(a,b,c)}(x,y|q)."""
    acc = Fraction(0)
    for k in range(n + 1):
        ck = qpoch(c, q, k)
        if ck == 0:
            raise VanishingPochhammerError(f"(c;q)_{k} = 0 for c = {c}")
        acc += qbinom(n, k, q) * qpoch(a, q, k) * qpoch(b, q, k) / ck * x**k * y ** (n - k)
    return acc


def cao_psi3(n: int, a: Rat, b: Rat, c: Rat, x: Rat, y: Rat, q: Rat) -> Rat:
    """Three-parameter generalized Al-Salam-Carlitz psi_n^{(a,b,c)}(x,y|q)."""
    acc = Fraction(0)
    for k in range(n + 1):
        ck = qpoch(c, q, k)
        if ck == 0:
            raise VanishingPochhammerError(f"(c;q)_{k} = 0 for c = {c}")
        acc += (
            qbinom(n, k, q)
            * (-1) ** k
            * qpow(q, binom2(k + 1) - n * k)
            * qpoch(a, q, k)
            * qpoch(b, q, k)
            / ck
            * x**k
            * y ** (n - k)
        )
    return acc


def ext_phi5(n, a, b, c, d, e, x, y, q) -> Rat:
    """Five-parameter extension phi_n with upper (a,b,c) and lower (d,e)."""
    acc = Fraction(0)
    for k in range(n + 1):
        den = qpoch(d, q, k) * qpoch(e, q, k)
        if den == 0:
            raise VanishingPochhammerError(f"(d,e;q)_{k} = 0")
        acc += (
            qbinom(n, k, q)
            * qpoch_multi((a, b, c), q, k)
            / den
            * x ** (n - k)
            * y**k
        )
    return acc


def ext_psi5(n, a, b, c, d, e, x, y, q) -> Rat:
    """Five-parameter extension psi_n, carrying (-1)^k q^{k(k-n)}."""
    acc = Fraction(0)
    for k in range(n + 1):
        den = qpoch(d, q, k) * qpoch(e, q, k)
        if den == 0:
            raise VanishingPochhammerError(f"(d,e;q)_{k} = 0")
        acc += (
            qbinom(n, k, q)
            * (-1) ** k
            * qpow(q, k * (k - n))
            * qpoch_multi((a, b, c), q, k)
            / den
            * x ** (n - k)
            * y**k
        )
    return acc


def _require_sa_arity(pv: ParamVector) -> None:
    if pv.r != pv.s + 1:
        raise ValueError(
            f"family needs |upper| = |lower| + 1, got {pv.r} and {pv.s}"
        )


def sa_phi(n: int, pv: ParamVector, x: Rat, y: Rat, q: Rat) -> Rat:
    """Multi-parameter phi_n^{(a,b)}(x,y|q) with r+1 upper / r lower."""
    _require_sa_arity(pv)
    acc = Fraction(0)
    for k in range(n + 1):
        acc += qbinom(n, k, q) * W_coeff(k, pv, q) * x**k * y ** (n - k)
    return acc


def sa_psi(n: int, pv: ParamVector, x: Rat, y: Rat, q: Rat) -> Rat:
    """Multi-parameter psi_n^{(a,b)}(x,y|q), carrying q^{binom(k+1,2)-nk}."""
    _require_sa_arity(pv)
    acc = Fraction(0)
    for k in range(n + 1):
        acc += (
            qbinom(n, k, q)
            * W_coeff(k, pv, q)
            * qpow(q, binom2(k + 1) - n * k)
            * x**k
            * y ** (n - k)
        )
    return acc


def v_poly(n: int, pv: ParamVector, x: Rat, y: Rat, z: Rat, q: Rat) -> Rat:
    """V_n^{(a,c)}(x,y,z|q) = sum_k [n k]_q W_k P_{n-k}(x,y) z^k."""
    acc = Fraction(0)
    for k in range(n + 1):
        acc += qbinom(n, k, q) * W_coeff(k, pv, q) * cauchy_P(n - k, x, y, q) * z**k
    return acc


def gen_hahn(n: int, x: Rat, y: Rat, a: Rat, b: Rat, q: Rat) -> Rat:
    """Generalized Hahn polynomial h_n(x,y,a,b|q) =
    sum_k [n k]_q (a;q)_k P_{n-k}(x,y) b^k."""
    acc = Fraction(0)
    for k in range(n + 1):
        acc += qbinom(n, k, q) * qpoch(a, q, k) * cauchy_P(n - k, x, y, q) * b**k
    return acc


def hahn2_phi(n: int, a: Rat, x: Rat, y: Rat, q: Rat) -> Rat:
    """Bivariate (second) Hahn phi_n^{(a)}(x,y|q) = sum [n k]_q (a;q)_k x^k y^{n-k}."""
    acc = Fraction(0)
    for k in range(n + 1):
        acc += qbinom(n, k, q) * qpoch(a, q, k) * x**k * y ** (n - k)
    return acc


def hahn2_psi(n: int, a: Rat, x: Rat, y: Rat, q: Rat) -> Rat:
    """Bivariate (second) Hahn psi_n^{(a)}(x,y|q), homogenizing the
    one-variable psi with y-powers."""
    acc = Fraction(0)
    for k in range(n + 1):
        acc += (
            qbinom(n, k, q)
            * qpow(q, k * (k - n))
            * qpoch(a * qpow(q, 1 - k), q, k)
            * x**k
            * y ** (n - k)
        )
    return acc
