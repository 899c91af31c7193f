"""Relation report schema."""

from dataclasses import dataclass, field
from typing import List, Optional

from ..constants import RelationKind, RelationStatus


@dataclass
class RelationCheck:
    """Outcome of one defining relation checked as an exact identity.

    Attributes:
        name: Relation name, e.g. ``quadratic_T2`` or ``braid_T1_T2``
        kind: Relation kind
        status: pass / fail
        difference: Canonical text of lhs - rhs when the check failed
    """

    name: str
    kind: RelationKind
    status: RelationStatus
    difference: Optional[str] = None

    def __post_init__(self):
        if self.status == RelationStatus.PASS and self.difference is not None:
            raise ValueError(f"Passing relation {self.name} cannot carry a difference")

    @property
    def passed(self) -> bool:
        return self.status == RelationStatus.PASS

    def to_dict(self) -> dict:
        data = {"name": self.name, "kind": self.kind.name.lower(), "status": self.status.value}
        if self.difference is not None:
            data["difference"] = self.difference
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "RelationCheck":
        return cls(
            name=data["name"],
            kind=RelationKind[data["kind"].upper()],
            status=RelationStatus(data["status"]),
            difference=data.get("difference"),
        )


@dataclass
class RelationReport:
    """Result of verify_relations for one parameter set.

    Attributes:
        params: Parameter record (case, n, t, r, s)
        t0_exponent: Spelling of the T_0 prefactor in use
        checks: Individual relation outcomes, in a fixed order
        notes: Free-form remarks
    """

    params: dict
    t0_exponent: str
    checks: List[RelationCheck] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failures(self) -> List[RelationCheck]:
        return [check for check in self.checks if not check.passed]

    def get(self, name: str) -> RelationCheck:
        for check in self.checks:
            if check.name == name:
                return check
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "params": dict(self.params),
            "t0_exponent": self.t0_exponent,
            "all_passed": self.all_passed,
            "checks": [check.to_dict() for check in self.checks],
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RelationReport":
        return cls(
            params=dict(data["params"]),
            t0_exponent=data["t0_exponent"],
            checks=[RelationCheck.from_dict(item) for item in data.get("checks", [])],
            notes=list(data.get("notes", [])),
        )


__all__ = ["RelationCheck", "RelationReport"]
