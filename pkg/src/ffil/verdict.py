from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decidable check: truthy iff the property holds.

    ``witness`` holds the first counterexample in canonical enumeration
    order when the property fails, and is empty otherwise.
    """

    holds: bool
    witness: dict[str, Any] = field(default_factory=dict)
    detail: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def to_json(self) -> dict[str, Any]:
        out: dict[str, Any] = {"holds": self.holds}
        if self.witness:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        return out
