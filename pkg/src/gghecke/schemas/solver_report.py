"""Solver report schema for the functional equation (*)."""

from dataclasses import dataclass, field
from typing import List, Optional, Tuple


@dataclass
class SolutionEntry:
    """One solution found by the oracle.

    Attributes:
        polynomial: Canonical text of the solution in X
        family: Catalogue label, or None if identification failed
    """

    polynomial: str
    family: Optional[str] = None

    def to_dict(self) -> dict:
        return {"polynomial": self.polynomial, "family": self.family}

    @classmethod
    def from_dict(cls, data: dict) -> "SolutionEntry":
        return cls(polynomial=data["polynomial"], family=data.get("family"))


@dataclass
class VariantEvidence:
    """Whether the catalogue entry with q^t in place of q^r still solves (*).

    Attributes:
        family: Catalogue label
        polynomial: Text of the q^t variant
        holds: Result of substituting it into (*)
    """

    family: str
    polynomial: str
    holds: bool

    def to_dict(self) -> dict:
        return {"family": self.family, "polynomial": self.polynomial, "holds": self.holds}

    @classmethod
    def from_dict(cls, data: dict) -> "VariantEvidence":
        return cls(family=data["family"], polynomial=data["polynomial"], holds=bool(data["holds"]))


@dataclass
class SolverReport:
    """Output of solve-star.

    Attributes:
        params: (t, r, s) and derived constants b, c as text
        window: (mindeg, maxdeg)
        solutions: Oracle solutions in deterministic order
        excluded_shapes: Number of (mindeg, maxdeg) shapes ruled out by the top-degree comparison
        variant_evidence: q^t substitution checks
        notes: Free-form remarks
    """

    params: dict
    window: Tuple[int, int]
    solutions: List[SolutionEntry] = field(default_factory=list)
    excluded_shapes: int = 0
    variant_evidence: List[VariantEvidence] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        low, high = self.window
        if low > high:
            raise ValueError(f"Invalid window: [{low}, {high}]")
        self.window = (int(low), int(high))

    @property
    def count(self) -> int:
        return len(self.solutions)

    @property
    def all_identified(self) -> bool:
        return all(entry.family is not None for entry in self.solutions)

    @property
    def families(self) -> List[str]:
        return [entry.family for entry in self.solutions if entry.family is not None]

    def to_dict(self) -> dict:
        return {
            "params": dict(self.params),
            "window": list(self.window),
            "count": self.count,
            "solutions": [entry.to_dict() for entry in self.solutions],
            "excluded_shapes": self.excluded_shapes,
            "variant_evidence": [item.to_dict() for item in self.variant_evidence],
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SolverReport":
        return cls(
            params=dict(data["params"]),
            window=tuple(data["window"]),
            solutions=[SolutionEntry.from_dict(item) for item in data.get("solutions", [])],
            excluded_shapes=int(data.get("excluded_shapes", 0)),
            variant_evidence=[VariantEvidence.from_dict(item) for item in data.get("variant_evidence", [])],
            notes=list(data.get("notes", [])),
        )


__all__ = ["SolutionEntry", "VariantEvidence", "SolverReport"]
