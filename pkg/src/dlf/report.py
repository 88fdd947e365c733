"""Axiom check reports: named pass/fail entries with basis witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .linalg import LinMap


@dataclass(frozen=True)
class AxiomCheck:
    name: str
    passed: bool
    witness: tuple[str, ...] | None = None

    def line(self) -> str:
        if self.passed:
            return f"pass {self.name}"
        where = f" at {'*'.join(self.witness)}" if self.witness else ""
        return f"FAIL {self.name}{where}"


@dataclass
class Report:
    subject: str
    checks: list[AxiomCheck] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness=None):
        self.checks.append(AxiomCheck(name, passed, witness))

    def extend(self, other: "Report"):
        for check in other.checks:
            self.checks.append(
                AxiomCheck(f"{other.subject}.{check.name}", check.passed, check.witness)
            )

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[AxiomCheck]:
        return [c for c in self.checks if not c.passed]

    def lines(self) -> list[str]:
        return [f"{self.subject}: {c.line()}" for c in self.checks]

    def raise_if_failed(self):
        for check in self.checks:
            if not check.passed:
                raise ValidationError(
                    f"{self.subject}: axiom {check.name} failed"
                    + (f" at {'*'.join(check.witness)}" if check.witness else ""),
                    axiom=check.name,
                    witness=check.witness,
                )


def first_difference(a: LinMap, b: LinMap) -> tuple[int, int] | None:
    """First (row, col) where two same-shaped maps differ, scanning columns."""
    for c in range(a.domain.dim):
        ca, cb = a.cols[c], b.cols[c]
        if ca != cb:
            rows = sorted(set(ca) | set(cb))
            for r in rows:
                if ca.get(r) != cb.get(r):
                    return r, c
    return None


def check_equal(report: Report, name: str, lhs: LinMap, rhs: LinMap):
    """Record an exact matrix equation; the witness is the domain basis
    label (tensor tuple) of the first failing column."""
    diff = first_difference(lhs, rhs)
    if diff is None:
        report.add(name, True)
    else:
        _, c = diff
        label = lhs.domain.labels[c] if c < len(lhs.domain.labels) else str(c)
        report.add(name, False, tuple(label.split("*")))
