"""Uniform check outcome record shared by every verifier family.

Statuses:

* PASS         - the claim holds exactly on the checked instance.
* FAIL         - the claim is violated; ``witness`` localizes the breakage.
* ILL_POSED    - the instance cannot be evaluated (for congruence families,
                 a denominator is not invertible modulo the prime power);
                 never silently skipped.
* INCONCLUSIVE - a witness search exhausted its candidate budget without a
                 verdict either way (only one-sided searches use this).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Optional

__all__ = ["CheckResult", "PASS", "FAIL", "ILL_POSED", "INCONCLUSIVE", "summarize"]

PASS = "PASS"
FAIL = "FAIL"
ILL_POSED = "ILL_POSED"
INCONCLUSIVE = "INCONCLUSIVE"

_STATUSES = (PASS, FAIL, ILL_POSED, INCONCLUSIVE)


@dataclass
class CheckResult:
    """One verified instance: what was checked, against what modulus, outcome."""

    family: str
    params: dict[str, Any]
    status: str
    lhs: str = ""
    rhs: str = ""
    modulus: str = ""
    witness: Optional[dict[str, Any]] = None
    note: str = ""

    def __post_init__(self) -> None:
        if self.status not in _STATUSES:
            raise ValueError("unknown status %r" % (self.status,))

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "family": self.family,
            "params": self.params,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "modulus": self.modulus,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if self.note:
            out["note"] = self.note
        return out


def summarize(results: list[CheckResult]) -> dict[str, int]:
    counts = {"pass": 0, "fail": 0, "ill_posed": 0, "inconclusive": 0}
    for r in results:
        if r.status == PASS:
            counts["pass"] += 1
        elif r.status == FAIL:
            counts["fail"] += 1
        elif r.status == ILL_POSED:
            counts["ill_posed"] += 1
        else:
            counts["inconclusive"] += 1
    return counts


def clip(value: Any, limit: int = 80) -> str:
    """Deterministic bounded rendering for potentially huge exact values.

    Integers beyond roughly 4000 digits are summarized from the bit length
    alone so the interpreter's int-to-str guard is never tripped.
    """
    if isinstance(value, int) and value.bit_length() > 13000:
        digits = value.bit_length() * 30103 // 100000 + 1
        return "%sbig integer, ~%d digits" % ("-" if value < 0 else "", digits)
    if isinstance(value, Fraction) and (
        value.numerator.bit_length() > 13000
        or value.denominator.bit_length() > 13000
    ):
        return "%s / %s" % (clip(value.numerator), clip(value.denominator))
    s = str(value)
    if len(s) <= limit:
        return s
    return "%s...(%d digits)" % (s[:12], len(s))
