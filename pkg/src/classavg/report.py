"""Verification reports: one record per checked identity instance."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .exact_algebra import Laurent, rat_str

STATUSES = ("pass", "fail", "expected-fail", "error")


def render(value) -> str | None:
    """Exact text for a side value: rationals as p/q, polynomials in
    canonical term order."""
    if value is None:
        return None
    if isinstance(value, Laurent):
        return value.to_text()
    if isinstance(value, (int, Fraction)):
        return rat_str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


@dataclass
class Case:
    identity: str
    params: dict
    status: str
    lhs: str | None = None
    rhs: str | None = None
    elapsed: float = 0.0
    note: str | None = None

    def to_record(self) -> dict:
        out = {
            "identity": self.identity,
            "params": self.params,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "elapsed": round(self.elapsed, 6),
        }
        if self.note:
            out["note"] = self.note
        return out


@dataclass
class Report:
    suite: str
    cases: list[Case] = field(default_factory=list)
    settings: dict = field(default_factory=dict)

    def add(self, case: Case) -> Case:
        if case.status not in STATUSES:
            raise ValueError(f"unknown status {case.status!r}")
        self.cases.append(case)
        return case

    def extend(self, other: "Report"):
        for c in other.cases:
            self.add(c)

    @property
    def summary(self) -> dict[str, int]:
        counts = {s: 0 for s in STATUSES}
        for c in self.cases:
            counts[c.status] += 1
        counts["total"] = len(self.cases)
        return counts

    @property
    def ok(self) -> bool:
        """True iff nothing failed other than documented counterexamples."""
        s = self.summary
        return s["fail"] == 0 and s["error"] == 0

    def failures(self) -> list[Case]:
        return [c for c in self.cases if c.status in ("fail", "error")]

    def to_record(self, timings: bool = True) -> dict:
        cases = [c.to_record() for c in self.cases]
        if not timings:
            for c in cases:
                c.pop("elapsed")
        return {"suite": self.suite, "settings": self.settings, "summary": self.summary, "cases": cases}

    def to_json(self, timings: bool = True) -> str:
        return json.dumps(self.to_record(timings), indent=2, ensure_ascii=False)


def compare(identity: str, params: dict, lhs, rhs, *, expect_fail: bool = False, tol: float | None = None, elapsed: float = 0.0, note: str | None = None) -> Case:
    """Build a case from two side values; exact equality unless a tolerance
    is given. A documented counterexample that fails is 'expected-fail'."""
    if tol is None:
        same = lhs == rhs
    else:
        same = abs(float(lhs) - float(rhs)) <= tol
    if same:
        status = "pass"
    else:
        status = "expected-fail" if expect_fail else "fail"
    return Case(identity, params, status, render(lhs), render(rhs), elapsed, note)
