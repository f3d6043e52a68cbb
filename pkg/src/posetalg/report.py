from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Verdict:
    """Outcome of checking one identity; truthy iff it holds."""

    holds: bool
    witness: Optional[object] = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass
class AxiomVerdict:
    label: str
    statement: str
    passed: bool
    witness: Optional[dict[str, str]] = None


@dataclass
class AxiomReport:
    """Per-axiom verdicts; a failed axiom carries its first counterexample."""

    title: str
    verdicts: list[AxiomVerdict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def __bool__(self) -> bool:
        return self.ok

    def __getitem__(self, label: str) -> AxiomVerdict:
        for v in self.verdicts:
            if v.label == label:
                return v
        raise KeyError(label)

    def failed_labels(self) -> list[str]:
        return [v.label for v in self.verdicts if not v.passed]

    def render(self) -> str:
        lines = [self.title]
        for v in self.verdicts:
            status = "pass" if v.passed else "FAIL"
            lines.append(f"  ({v.label}) {status}  {v.statement}")
            if v.witness:
                lines.append("        witness: " + ", ".join(f"{k}={val}" for k, val in v.witness.items()))
        for note in self.notes:
            lines.append(f"  note: {note}")
        return "\n".join(lines)


class Checker:
    """Collects the first violation of each axiom while a checker loops over tuples."""

    def __init__(self, report: AxiomReport, label: str, statement: str):
        self.verdict = AxiomVerdict(label, statement, True)
        report.verdicts.append(self.verdict)

    def fail(self, **witness: str) -> None:
        if self.verdict.passed:
            self.verdict.passed = False
            self.verdict.witness = witness

    @property
    def done(self) -> bool:
        return not self.verdict.passed
