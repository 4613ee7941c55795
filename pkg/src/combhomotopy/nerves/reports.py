from __future__ import annotations

from dataclasses import dataclass, field

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of comparing two computations of the same structure."""

    case: str
    side_a: dict
    side_b: dict
    invariants: dict
    verdict: str
    mismatches: tuple[str, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict:
        return {"case": self.case, "side_a": self.side_a, "side_b": self.side_b,
                "invariants": self.invariants, "verdict": self.verdict,
                "mismatches": list(self.mismatches)}


def verdict_of(mismatches, undecided) -> str:
    if mismatches:
        return FAIL
    return INCONCLUSIVE if undecided else PASS
