"""Verdict lattice and report value objects.

Condition checks answer Satisfied / Violated / Inapplicable.  Deciders and
sufficient conditions answer Realizable / NotRealizable / Undetermined /
Inapplicable.  The asymmetry matters: a violated necessary condition proves
non-realizability, while a sufficient condition that fails to fire proves
nothing, so its non-answer is Undetermined and must never be read as
NotRealizable.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any


class ConditionVerdict(str, enum.Enum):
    SATISFIED = "Satisfied"
    VIOLATED = "Violated"
    INAPPLICABLE = "Inapplicable"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


class DecisionVerdict(str, enum.Enum):
    REALIZABLE = "Realizable"
    NOT_REALIZABLE = "NotRealizable"
    UNDETERMINED = "Undetermined"
    UNDECIDED = "Undecided"
    INAPPLICABLE = "Inapplicable"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


@dataclass(frozen=True)
class Witness:
    """Numeric record of one inequality: the first violated one for a
    Violated report, or the informative value for some Satisfied reports.

    ``indices`` identifies which inequality inside the condition family,
    e.g. ``(k, m)`` for a power-sum inequality.  The orientation is always
    the required ``lhs <= rhs``; a violation means ``lhs > rhs`` beyond
    tolerance.
    """

    indices: tuple[int, ...]
    lhs: float
    rhs: float

    def to_json(self) -> dict[str, Any]:
        return {"indices": list(self.indices), "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class ConditionReport:
    condition: str
    verdict: ConditionVerdict
    witness: Witness | None = None
    detail: str | None = None
    scope: dict[str, Any] | None = None

    @property
    def violated(self) -> bool:
        return self.verdict is ConditionVerdict.VIOLATED

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "condition": self.condition,
            "verdict": self.verdict.value,
            "witness": self.witness.to_json() if self.witness else None,
        }
        if self.detail is not None:
            out["detail"] = self.detail
        if self.scope is not None:
            out["scope"] = self.scope
        return out


@dataclass(frozen=True)
class Decision:
    verdict: DecisionVerdict
    reason: str | None = None
    witness: Witness | None = None
    flags: dict[str, Any] = field(default_factory=dict)

    @property
    def realizable(self) -> bool:
        return self.verdict is DecisionVerdict.REALIZABLE

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "verdict": self.verdict.value,
            "reason": self.reason,
            "witness": self.witness.to_json() if self.witness else None,
        }
        if self.flags:
            out["flags"] = dict(sorted(self.flags.items()))
        return out


def satisfied(condition: str, witness: Witness | None = None, **kw) -> ConditionReport:
    return ConditionReport(condition, ConditionVerdict.SATISFIED, witness, **kw)


def violated(condition: str, witness: Witness, **kw) -> ConditionReport:
    return ConditionReport(condition, ConditionVerdict.VIOLATED, witness, **kw)


def inapplicable(condition: str, detail: str | None = None, **kw) -> ConditionReport:
    return ConditionReport(condition, ConditionVerdict.INAPPLICABLE, detail=detail, **kw)
