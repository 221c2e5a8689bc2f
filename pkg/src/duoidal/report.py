"""Structured validation reports.

A report aggregates checks keyed by ``(id, axiom)``.  Each check counts the
instances it evaluated and keeps the first few counterexamples, with their
coordinates rendered as JSON-friendly values.
"""
from __future__ import annotations

from dataclasses import dataclass, field

MAX_COUNTEREXAMPLES = 5


def describe(x):
    """JSON-friendly rendering of an object label, arrow or coordinate."""
    if hasattr(x, "to_json"):
        return x.to_json()
    if isinstance(x, (list, tuple)):
        return [describe(v) for v in x]
    if isinstance(x, dict):
        return {str(k): describe(v) for k, v in x.items()}
    if isinstance(x, (int, str, bool)) or x is None:
        return x
    if hasattr(x, "item"):
        return x.item()
    return repr(x)


@dataclass
class Check:
    id: str
    axiom: str
    instances: int = 0
    failures: int = 0
    counterexamples: list = field(default_factory=list)
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self):
        out = {"id": self.id, "axiom": self.axiom, "instances": self.instances,
               "failures": self.failures, "status": "pass" if self.passed else "fail"}
        if self.counterexamples:
            out["counterexample"] = self.counterexamples[0]
            out["counterexamples"] = self.counterexamples
        if self.note:
            out["note"] = self.note
        return out


class Report:
    def __init__(self, subject: str = ""):
        self.subject = subject
        self._checks: dict[tuple[str, str], Check] = {}
        self.errors: list[str] = []

    def check(self, id: str, axiom: str, ok: bool, **coords) -> bool:
        key = (id, axiom)
        c = self._checks.get(key)
        if c is None:
            c = self._checks[key] = Check(id, axiom)
        c.instances += 1
        if not ok:
            c.failures += 1
            if len(c.counterexamples) < MAX_COUNTEREXAMPLES:
                c.counterexamples.append({k: describe(v) for k, v in sorted(coords.items())})
        return ok

    def note(self, id: str, axiom: str, text: str) -> None:
        key = (id, axiom)
        c = self._checks.setdefault(key, Check(id, axiom))
        c.note = text

    def error(self, message: str) -> None:
        self.errors.append(message)

    def merge(self, other: "Report", prefix: str = "") -> "Report":
        for (id, axiom), c in other._checks.items():
            key = (prefix + id, axiom)
            mine = self._checks.get(key)
            if mine is None:
                mine = self._checks[key] = Check(key[0], axiom, note=c.note)
            mine.instances += c.instances
            mine.failures += c.failures
            room = MAX_COUNTEREXAMPLES - len(mine.counterexamples)
            mine.counterexamples.extend(c.counterexamples[:max(room, 0)])
        self.errors.extend(other.errors)
        return self

    @property
    def checks(self) -> list[Check]:
        return list(self._checks.values())

    @property
    def ok(self) -> bool:
        return not self.errors and all(c.passed for c in self._checks.values())

    @property
    def status(self) -> str:
        if self.errors:
            return "error"
        return "pass" if self.ok else "fail"

    def __bool__(self):
        return self.ok

    def failed(self) -> list[Check]:
        return [c for c in self._checks.values() if not c.passed]

    def failed_axioms(self) -> set[str]:
        return {c.axiom for c in self.failed()}

    def get(self, id: str, axiom: str | None = None) -> Check | None:
        for (cid, ax), c in self._checks.items():
            if cid == id and (axiom is None or ax == axiom):
                return c
        return None

    def to_json(self):
        out = {"status": self.status,
               "checks": [c.to_json() for c in self._checks.values()]}
        if self.subject:
            out["subject"] = self.subject
        if self.errors:
            out["errors"] = list(self.errors)
        return out

    def summary(self) -> str:
        lines = ["%s: %s" % (self.subject or "report", self.status)]
        for c in self._checks.values():
            mark = "ok  " if c.passed else "FAIL"
            lines.append("  %s %-28s %-8s %d/%d" % (mark, c.id, c.axiom,
                                                    c.instances - c.failures, c.instances))
            if c.counterexamples:
                lines.append("       at %s" % c.counterexamples[0])
        for e in self.errors:
            lines.append("  error: %s" % e)
        return "\n".join(lines)

    def __repr__(self):
        return "<Report %s %s (%d checks)>" % (self.subject, self.status, len(self._checks))
