"""Machine-readable verdicts.

Every bounded check in this package returns a Report: a claim, the
dimension bound it was verified to, a verdict, and (for failures) a
concrete counterexample.  Verdicts are three-valued: bounded searches that
were cut off report "inconclusive", never "holds".
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

HOLDS = "holds"
FAILS = "fails"
INCONCLUSIVE = "inconclusive"


@dataclass
class Report:
    claim: str
    bound: int
    verdict: str
    counterexample: dict | None = None
    witness: dict | None = None
    notes: list[str] = field(default_factory=list)

    def __post_init__(self):
        if self.verdict not in (HOLDS, FAILS, INCONCLUSIVE):
            raise ValueError(f"bad verdict {self.verdict!r}")

    @property
    def holds(self) -> bool:
        return self.verdict == HOLDS

    def to_json(self) -> dict:
        out = {
            "claim": self.claim,
            "bound": self.bound,
            "verdict": self.verdict,
        }
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.witness is not None:
            out["witness"] = self.witness
        if self.notes:
            out["notes"] = list(self.notes)
        return out

    def dumps(self) -> str:
        return canonical_json(self.to_json())


def canonical_json(data) -> str:
    """Deterministic serialization: sorted keys, fixed separators."""
    return json.dumps(data, sort_keys=True, separators=(",", ":"))
