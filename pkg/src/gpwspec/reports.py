"""Small result containers shared by the checkers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """A boolean answer that carries a counterexample when it is false.

    Truthiness follows ``holds`` so a verdict can be used directly in ``if``.
    """

    holds: bool
    witness: Any = None
    note: str = ""
    applicable: bool = True

    def __bool__(self) -> bool:
        return self.holds


def not_applicable(reason: str) -> Verdict:
    return Verdict(True, None, reason, applicable=False)


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: Any = None


@dataclass(frozen=True)
class AxiomReport:
    subject: str
    results: tuple[AxiomResult, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> tuple[AxiomResult, ...]:
        return tuple(r for r in self.results if not r.passed)

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        lines = [f"{self.subject}: {'ok' if self.ok else 'FAILED'}"]
        for r in self.results:
            mark = "pass" if r.passed else f"FAIL witness={r.witness!r}"
            lines.append(f"  {r.name}: {mark}")
        return "\n".join(lines)


class AxiomError(ValueError):
    """Raised when a constructed structure fails its axiom scan."""

    def __init__(self, report: AxiomReport):
        super().__init__(str(report))
        self.report = report


class InconsistencyError(RuntimeError):
    """Two independent computations of the same quantity disagree."""
