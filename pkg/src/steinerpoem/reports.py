"""Findings and reports shared by the system verifier and the poem checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional

ERROR = "error"
WARNING = "warning"


@dataclass(frozen=True)
class Finding:
    """One violated (or advisory) rule, with a human message and a location.

    ``rule`` is a stable machine-readable identifier; ``location`` pins the
    finding to a stanza/line or a pair of points where that makes sense.
    """

    rule: str
    severity: str
    message: str
    location: Optional[dict[str, Any]] = None

    def to_json(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "rule": self.rule,
            "severity": self.severity,
            "message": self.message,
        }
        if self.location is not None:
            doc["location"] = self.location
        return doc


@dataclass(frozen=True)
class Report:
    """Outcome of a verification pass: a sequence of findings."""

    findings: tuple[Finding, ...] = field(default_factory=tuple)

    @property
    def errors(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == ERROR)

    @property
    def warnings(self) -> tuple[Finding, ...]:
        return tuple(f for f in self.findings if f.severity == WARNING)

    @property
    def ok(self) -> bool:
        """True when no finding is an error (warnings do not fail a report)."""
        return not self.errors

    @property
    def verdict(self) -> str:
        return "pass" if self.ok else "fail"

    def to_json(self) -> dict[str, Any]:
        return {
            "verdict": self.verdict,
            "findings": [f.to_json() for f in self.findings],
        }

    def summary(self) -> str:
        if self.ok and not self.warnings:
            return "pass"
        parts = [self.verdict]
        if self.errors:
            parts.append(f"{len(self.errors)} error(s)")
        if self.warnings:
            parts.append(f"{len(self.warnings)} warning(s)")
        return ", ".join(parts)
