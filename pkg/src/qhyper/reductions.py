"""The eleven reduction claims for the generalized polynomial family.

Each item evaluates both sides exactly for n = 0..n_max and reports equality
or the exact discrepancy.  Several printed claims carry internally
inconsistent parameter settings; for those the prober also tries a small set
of corrected readings and records which one holds.  Nothing is silently
corrected: every report states what was checked.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .families import (
    FamilyPoint,
    ParamVector,
    asc_phi,
    asc_psi,
    cauchy_P,
    ext_phi5,
    ext_psi5,
    gen_hahn,
    hahn2_phi,
    hahn2_psi,
    psi_general,
    sa_phi,
    sa_psi,
    v_poly,
)
from .report import IdentityReport
from .scalars import Rat, binom2, qbinom, qpow

N_MAX = 8


def _prefactor(n: int, q: Rat) -> Rat:
    return (-1) ** n * qpow(q, -binom2(n))


def _max_dev(pairs) -> Fraction:
    dev = Fraction(0)
    for lhs, rhs in pairs:
        d = abs(lhs - rhs)
        if d > dev:
            dev = d
    return dev


def _trivariate_F(n: int, x: Rat, y: Rat, z: Rat, q: Rat) -> Rat:
    """The classical trivariate polynomial, from its own display."""
    acc = Fraction(0)
    for k in range(n + 1):
        acc += (
            qbinom(n, k, q)
            * (-1) ** k
            * q ** binom2(k)
            * z**k
            * cauchy_P(n - k, y, x, q)
        )
    return _prefactor(n, q) * acc


def check_item(item: int, sample: dict, q: Rat, n_max: int = N_MAX) -> IdentityReport:
    """Evaluate reduction item 1..11 over n = 0..n_max at one sample."""
    x, y, z = sample["x"], sample["y"], sample["z"]
    a, b, c, d, e = sample["a"], sample["b"], sample["c"], sample["d"], sample["e"]
    ns = range(n_max + 1)

    if item == 1:
        pv = ParamVector((a, b), (c,))
        dev = _max_dev(
            (
                psi_general(FamilyPoint(y, x, z, n), pv, q),
                _prefactor(n, q) * v_poly(n, pv, x, y, z, q),
            )
            for n in ns
        )
        return _report(item, dev == 0, dev, "upper/lower arity r = u+1 as stated")

    if item == 2:
        pv = ParamVector((a, b), (c,))
        dev = _max_dev(
            (
                psi_general(FamilyPoint(Fraction(0), y, x, n), pv, q),
                _prefactor(n, q) * sa_phi(n, pv, x, y, q),
            )
            for n in ns
        )
        return _report(item, dev == 0, dev, "first argument 0, z carries x")

    if item == 3:
        pv = ParamVector((a, b), (c,))
        # The substitution list (y=0, z=-x, x=y) yields arguments (y, 0, -x);
        # the printed left side shows (0, y, -x), which does not hold.
        dev = _max_dev(
            (
                psi_general(FamilyPoint(y, Fraction(0), -x, n), pv, q),
                sa_psi(n, pv, x, y, q),
            )
            for n in ns
        )
        printed_dev = _max_dev(
            (
                psi_general(FamilyPoint(Fraction(0), y, -x, n), pv, q),
                sa_psi(n, pv, x, y, q),
            )
            for n in ns
        )
        notes = "substitution-list reading (y,0,-x) checked"
        if printed_dev != 0:
            notes += f"; printed argument order (0,y,-x) fails, residual {printed_dev}"
        return _report(item, dev == 0, dev, notes)

    if item == 4:
        pv = ParamVector((a, Fraction(0), Fraction(0)), (Fraction(0), Fraction(0)))
        dev = _max_dev(
            (
                psi_general(FamilyPoint(y, x, b, n), pv, q),
                _prefactor(n, q) * gen_hahn(n, x, y, a, b, q),
            )
            for n in ns
        )
        return _report(
            item,
            dev == 0,
            dev,
            "generalized Hahn target taken as sum_k [n k] (a;q)_k P_{n-k}(x,y) b^k"
            " (definition is an external citation)",
        )

    if item == 5:
        pv = ParamVector()
        dev = _max_dev(
            (
                psi_general(FamilyPoint(x, y, z, n), pv, q),
                _trivariate_F(n, x, y, z, q),
            )
            for n in ns
        )
        return _report(item, dev == 0, dev, "empty parameter vectors, r = s")

    if item == 6:
        pv = ParamVector((a, b, c), (d, e))
        dev = _max_dev(
            (
                psi_general(FamilyPoint(Fraction(0), x, y, n), pv, q),
                _prefactor(n, q) * ext_phi5(n, a, b, c, d, e, x, y, q),
            )
            for n in ns
        )
        return _report(
            item,
            dev == 0,
            dev,
            "printed argument tuple is garbled; corrected reading: "
            "arguments (0, x, y)",
        )

    if item == 7:
        pv = ParamVector((a, b, c), (d, e))
        stated_dev = _max_dev(
            (
                psi_general(FamilyPoint(Fraction(0), x, y, n), pv, q),
                _prefactor(n, q) * ext_psi5(n, a, b, c, d, e, x, y, q),
            )
            for n in ns
        )
        # The stated "r = s = 2" conflicts with three upper parameters; the
        # consistent reading forces the sign-bracket exponent to 1 and flips
        # the sign of the last argument.
        corrected_dev = _max_dev(
            (
                psi_general(FamilyPoint(x, Fraction(0), -y, n), pv, q, bracket_exponent=1),
                ext_psi5(n, a, b, c, d, e, x, y, q),
            )
            for n in ns
        )
        passed = corrected_dev == 0
        notes = (
            f"as-stated reading fails, residual {stated_dev}; "
            "corrected reading (arguments (x,0,-y), bracket exponent forced to"
            f" 1, no prefactor) residual {corrected_dev}"
        )
        return _report(item, passed, corrected_dev if passed else stated_dev, notes)

    if item == 8:
        stated_dev = _max_dev(
            (
                psi_general(FamilyPoint(x, a * x, y, n), ParamVector(), q),
                _prefactor(n, q) * hahn2_phi(n, a, x, y, q),
            )
            for n in ns
        )
        pv = ParamVector((a, Fraction(0)), (Fraction(0),))
        corrected_dev = _max_dev(
            (
                psi_general(FamilyPoint(Fraction(0), y, x, n), pv, q),
                _prefactor(n, q) * hahn2_phi(n, a, x, y, q),
            )
            for n in ns
        )
        passed = corrected_dev == 0
        notes = (
            f"printed left side drops the parameter, residual {stated_dev}; "
            "corrected substitution: upper (a,0), lower (0), arguments (0,y,x),"
            f" residual {corrected_dev}"
        )
        return _report(item, passed, corrected_dev if passed else stated_dev, notes)

    if item == 9:
        stated_dev = _max_dev(
            (
                psi_general(
                    FamilyPoint(x, a * x, y, n),
                    ParamVector((Fraction(0), Fraction(0)), (Fraction(0),)),
                    q,
                ),
                hahn2_psi(n, a, x, y, q),
            )
            for n in ns
        )
        corrected_dev = _max_dev(
            (
                psi_general(FamilyPoint(x, a * x, y, n), ParamVector(), q),
                hahn2_psi(n, a, x, y, q),
            )
            for n in ns
        )
        passed = corrected_dev == 0
        notes = (
            f"stated (r,s)=(2,1) zero-parameter reading fails, residual {stated_dev}; "
            "empty-parameter reading (r = s) with the y-homogenized bivariate "
            f"target passes, residual {corrected_dev}"
        )
        return _report(item, passed, corrected_dev if passed else stated_dev, notes)

    if item == 10:
        stated_dev = _max_dev(
            (
                psi_general(
                    FamilyPoint(Fraction(0), Fraction(0), x, n),
                    ParamVector((Fraction(0), Fraction(0)), (Fraction(0),)),
                    q,
                ),
                _prefactor(n, q) * asc_phi(n, a, x, q),
            )
            for n in ns
        )
        pv = ParamVector((a, Fraction(0)), (Fraction(0),))
        corrected_dev = _max_dev(
            (
                psi_general(FamilyPoint(Fraction(0), Fraction(1), x, n), pv, q),
                _prefactor(n, q) * asc_phi(n, a, x, q),
            )
            for n in ns
        )
        passed = corrected_dev == 0
        notes = (
            f"printed left side drops the parameter, residual {stated_dev}; "
            "corrected substitution: upper (a,0), lower (0), arguments (0,1,x),"
            f" residual {corrected_dev}"
        )
        return _report(item, passed, corrected_dev if passed else stated_dev, notes)

    if item == 11:
        dev = _max_dev(
            (
                psi_general(FamilyPoint(x, a * x, 1, n), ParamVector(), q),
                asc_psi(n, a, x, q),
            )
            for n in ns
        )
        return _report(item, dev == 0, dev, "empty parameter vectors, r = s")

    raise ValueError(f"unknown reduction item {item}")


def _report(item: int, passed: bool, dev: Fraction, notes: str) -> IdentityReport:
    return IdentityReport(
        id=f"remark2:item{item:02d}",
        mode="exact",
        seed=0,
        trial=0,
        passed=passed,
        deviation=dev,
        notes=notes,
    )


def sample_reduction_params(rng: random.Random) -> tuple[dict, Rat]:
    """Generic rational parameters for the reduction checks."""
    from .verify import rand_rat, rand_q

    q = rand_q(rng)
    while True:
        sample = {name: rand_rat(rng) for name in "abcdexyz"}
        sample["x"], sample["y"], sample["z"] = (
            sample.pop("x"),
            sample.pop("y"),
            sample.pop("z"),
        )
        if sample["x"] == 0 or sample["a"] == 0:
            continue
        if sample["x"] == sample["y"]:
            continue
        # lower-parameter symbols must stay clear of 1 (and of q^{-j}, which
        # cannot occur for draws inside (-1, 1))
        if any(sample[k] == 1 for k in "cde"):
            continue
        return sample, q
