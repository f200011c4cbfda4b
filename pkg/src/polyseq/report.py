"""Structured outcomes of identity checks and conjecture runs."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterable, Optional

PASS = "pass"
FAIL = "fail"
VERIFIED = "verified"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, str, float, bool)) or v is None:
        return v
    return str(v)  # Fraction, Poly


@dataclass
class IdentityCheck:
    id: str
    n_range: tuple[int, int]
    k_range: Optional[tuple[int, int]] = None
    status: str = PASS
    counterexample: Optional[dict] = None
    cases: int = 0
    note: str = ""

    def __post_init__(self):
        if self.status == PASS and self.counterexample is not None:
            raise ValueError("a passing check cannot carry a counterexample")

    @property
    def ok(self) -> bool:
        return self.status == PASS

    def record(self) -> dict:
        return {
            "kind": "identity",
            "id": self.id,
            "n_range": list(self.n_range),
            "k_range": list(self.k_range) if self.k_range else None,
            "status": self.status,
            "cases": self.cases,
            "counterexample": _jsonable(self.counterexample),
            "note": self.note,
        }


class Tally:
    """Accumulates cases for one identity; keeps only the first failure."""

    def __init__(self, id: str, n_range, k_range=None, note: str = ""):
        self.id, self.n_range, self.k_range, self.note = id, tuple(n_range), k_range, note
        self.cases = 0
        self.counterexample: Optional[dict] = None

    def check(self, ok: bool, **where: Any) -> bool:
        self.cases += 1
        if not ok and self.counterexample is None:
            self.counterexample = where
        return ok

    def eq(self, lhs, rhs, **where: Any) -> bool:
        return self.check(lhs == rhs, lhs=lhs, rhs=rhs, **where)

    def result(self) -> IdentityCheck:
        return IdentityCheck(
            id=self.id,
            n_range=self.n_range,
            k_range=tuple(self.k_range) if self.k_range else None,
            status=PASS if self.counterexample is None else FAIL,
            counterexample=self.counterexample,
            cases=self.cases,
            note=self.note,
        )


@dataclass
class ConjectureReport:
    conjecture_id: int
    n_range: tuple[int, int]
    status: str = VERIFIED
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status == REFUTED and not self.details.get("counterexample"):
            raise ValueError("a refutation needs a concrete counterexample")
        if self.status == INCONCLUSIVE and self.conjecture_id != 4:
            raise ValueError("only the conjecture-4 root search may be inconclusive")

    @property
    def ok(self) -> bool:
        return self.status != REFUTED

    def record(self) -> dict:
        return {
            "kind": "conjecture",
            "id": str(self.conjecture_id),
            "n_range": list(self.n_range),
            "status": self.status,
            "details": _jsonable(self.details),
        }


def summarize(reports: Iterable) -> dict:
    counts = {PASS: 0, FAIL: 0, VERIFIED: 0, REFUTED: 0, INCONCLUSIVE: 0}
    for r in reports:
        counts[r.status] += 1
    counts["refuted_total"] = counts[FAIL] + counts[REFUTED]
    return counts


def exit_code(reports: Iterable) -> int:
    """0 unless something failed or was refuted; inconclusive does not count."""
    return 1 if summarize(reports)["refuted_total"] else 0
