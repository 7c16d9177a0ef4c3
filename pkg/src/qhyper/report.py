"""Outcome records for identity checks and their serialization."""

from __future__ import annotations

import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .scalars import Rat, MAX_SCALAR_BITS

# exact deviations carry denominators up to MAX_SCALAR_BITS bits; lift the
# int-to-decimal guard so they serialize
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(max(sys.get_int_max_str_digits(), MAX_SCALAR_BITS))


@dataclass
class IdentityReport:
    """Result of checking one identity against one sample.

    Formal mode passes only with deviation exactly 0.  Numeric mode passes
    when deviation <= 2^-40 * scale with scale = max(1, |lhs|).
    """

    id: str
    mode: str
    seed: int
    trial: int
    passed: bool
    deviation: Rat = Fraction(0)
    notes: str = ""
    sample: dict = field(default_factory=dict)

    def to_json_dict(self) -> dict:
        return {
            "id": self.id,
            "mode": self.mode,
            "seed": self.seed,
            "trial": self.trial,
            "pass": self.passed,
            "deviation_num": str(self.deviation.numerator),
            "deviation_den": str(self.deviation.denominator),
            "notes": self.notes,
        }


TSV_FIELDS = ("id", "mode", "seed", "trial", "pass", "deviation_num", "deviation_den", "notes")


def sort_reports(reports: list[IdentityReport]) -> list[IdentityReport]:
    """Order-normalize so parallel execution cannot change the output."""
    return sorted(reports, key=lambda r: (r.id, r.trial))
