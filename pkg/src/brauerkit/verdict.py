"""Three-valued answers for questions that bounded search cannot always settle."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any


class Outcome(enum.Enum):
    PROVED = "proved"
    REFUTED = "refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Verdict:
    """Result of a decision procedure.

    ``payload`` holds the witness (PROVED) or certificate (REFUTED); ``kind``
    names it, e.g. ``"norm witness"`` or ``"sign certificate"``.  ``bound`` is
    the search bound that was exhausted when the outcome is UNKNOWN.
    """

    outcome: Outcome
    payload: Any = None
    kind: str = ""
    bound: int | None = None

    @classmethod
    def proved(cls, payload: Any, kind: str = "witness") -> "Verdict":
        return cls(Outcome.PROVED, payload, kind)

    @classmethod
    def refuted(cls, payload: Any, kind: str) -> "Verdict":
        return cls(Outcome.REFUTED, payload, kind)

    @classmethod
    def unknown(cls, bound: int | None, payload: Any = None) -> "Verdict":
        return cls(Outcome.UNKNOWN, payload, "search exhausted", bound)

    @property
    def is_proved(self) -> bool:
        return self.outcome is Outcome.PROVED

    @property
    def is_refuted(self) -> bool:
        return self.outcome is Outcome.REFUTED

    @property
    def is_unknown(self) -> bool:
        return self.outcome is Outcome.UNKNOWN

    @property
    def decisive(self) -> bool:
        return self.outcome is not Outcome.UNKNOWN

    def negate(self) -> "Verdict":
        """Swap PROVED and REFUTED, keeping the payload."""
        if self.outcome is Outcome.PROVED:
            return Verdict(Outcome.REFUTED, self.payload, self.kind)
        if self.outcome is Outcome.REFUTED:
            return Verdict(Outcome.PROVED, self.payload, self.kind)
        return self

    def __str__(self) -> str:
        if self.is_unknown:
            return f"unknown (bound {self.bound})"
        return f"{self.outcome.value} ({self.kind})"
