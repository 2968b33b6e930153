"""Structured verdicts shared by the certifiers, the family checks and the CLI."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .poly import Poly


@dataclass
class Clause:
    name: str
    passed: bool
    witness: Optional[str] = None

    def to_dict(self) -> dict:
        d = {"clause": self.name, "pass": self.passed}
        if self.witness is not None:
            d["witness"] = self.witness
        return d


@dataclass
class CheckReport:
    """Hypothesis verdicts, conclusion verdicts and the constructed polynomials of one check.

    When a hypothesis fails the conclusion is still evaluated, but it is no
    longer backed by the theorem; ``supported`` reports that distinction.
    """

    name: str
    hypotheses: list = field(default_factory=list)
    conclusions: list = field(default_factory=list)
    constructed: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def hyp(self, name: str, passed: bool, witness: Optional[str] = None) -> bool:
        self.hypotheses.append(Clause(name, bool(passed), None if passed else witness))
        return bool(passed)

    def concl(self, name: str, passed: bool, witness: Optional[str] = None) -> bool:
        self.conclusions.append(Clause(name, bool(passed), None if passed else witness))
        return bool(passed)

    @property
    def supported(self) -> bool:
        return all(c.passed for c in self.hypotheses)

    @property
    def conclusion_verdict(self) -> bool:
        return all(c.passed for c in self.conclusions)

    @property
    def soundness_violation(self) -> bool:
        return self.supported and not self.conclusion_verdict

    def failures(self) -> list:
        return [c for c in self.hypotheses + self.conclusions if not c.passed]

    def to_dict(self, var: str = "x") -> dict:
        return {
            "check": self.name,
            "hypotheses": [c.to_dict() for c in self.hypotheses],
            "hypotheses_pass": self.supported,
            "conclusions": [c.to_dict() for c in self.conclusions],
            "conclusion_pass": self.conclusion_verdict,
            "supported_by_theorem": self.supported,
            "constructed": {k: _show(v, var) for k, v in self.constructed.items()},
            "notes": list(self.notes),
        }


def _show(v, var):
    if isinstance(v, Poly):
        return v.to_text(var)
    if isinstance(v, (list, tuple)):
        return [_show(u, var) for u in v]
    return v
