"""Honesty wrapper for bounded homological checks.

Every bounded decision returns a TriState: certified-yes, certified-no,
or unknown (bound exhausted).  Certified verdicts carry a witness or a
named finite criterion in `reason`.
"""

from __future__ import annotations

from dataclasses import dataclass


YES = "certified-yes"
NO = "certified-no"
UNKNOWN = "unknown"


@dataclass
class TriState:
    verdict: str
    bound: int | None = None
    witness: object = None
    reason: str = ""
    value: object = None  # optional payload (e.g. a dimension)

    @property
    def is_yes(self):
        return self.verdict == YES

    @property
    def is_no(self):
        return self.verdict == NO

    @property
    def is_unknown(self):
        return self.verdict == UNKNOWN

    def __bool__(self):
        raise TypeError("TriState is three-valued; test .is_yes / .is_no")

    def as_dict(self):
        return {
            "verdict": self.verdict,
            "bound": self.bound,
            "reason": self.reason,
            "value": None if self.value is None else str(self.value),
            "witness": None if self.witness is None else str(self.witness),
        }


def yes(reason="", bound=None, witness=None, value=None):
    return TriState(YES, bound=bound, witness=witness, reason=reason, value=value)


def no(reason="", bound=None, witness=None, value=None):
    return TriState(NO, bound=bound, witness=witness, reason=reason, value=value)


def unknown(reason="", bound=None, value=None):
    return TriState(UNKNOWN, bound=bound, reason=reason, value=value)


def agree(a: TriState, b: TriState) -> bool:
    """Two TriStates are consistent unless both certified and opposite."""
    if a.is_unknown or b.is_unknown:
        return True
    return a.verdict == b.verdict
