"""Gelfand-Graev report schema."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..algebra.coeffring import Coefficient
from .character import CharacterSpec
from .gg_input import GGInput
from .one_dim_rep import InducedModuleDescriptor

ScalarTable = Dict[int, Coefficient]


def table_to_dict(table: Optional[ScalarTable]) -> Optional[Dict[str, str]]:
    if table is None:
        return None
    return {f"T{i}": value.to_text() for i, value in sorted(table.items())}


def table_from_dict(data: Optional[Dict[str, str]]) -> Optional[ScalarTable]:
    if data is None:
        return None
    return {int(name[1:]): Coefficient.parse(text) for name, text in data.items()}


@dataclass
class CaseIIAnnotation:
    """Decision under the renormalization T_n' = (-1)^e X_n^f T_n.

    Attributes:
        e: 0 or 1
        f_parity: parity of f, 0 or 1
        table_pi: Scalars on pi
        table_pi_minus: Scalars on pi^-
        decision: Module picked by the decision logic
    """

    e: int
    f_parity: int
    table_pi: ScalarTable
    table_pi_minus: ScalarTable
    decision: InducedModuleDescriptor

    def to_dict(self) -> dict:
        return {
            "e": self.e,
            "f_parity": self.f_parity,
            "table_pi": table_to_dict(self.table_pi),
            "table_pi_minus": table_to_dict(self.table_pi_minus),
            "decision": self.decision.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CaseIIAnnotation":
        return cls(
            e=int(data["e"]),
            f_parity=int(data["f_parity"]),
            table_pi=table_from_dict(data["table_pi"]),
            table_pi_minus=table_from_dict(data["table_pi_minus"]),
            decision=InducedModuleDescriptor.from_dict(data["decision"]),
        )


@dataclass
class GGReport:
    """Scalar tables on the generic modules and the resulting module Pi.

    Attributes:
        gg_input: The determination input
        chi_pi: Character of A on pi
        chi_pi_minus: Character on pi^- (cases II, III)
        table_pi: Generator index -> scalar on pi
        table_pi_minus: Same on pi^-
        decision: Pi as an induced module
        annotations: Case II renormalization table, when requested
        notes: Free-form remarks
    """

    gg_input: GGInput
    chi_pi: CharacterSpec
    table_pi: ScalarTable
    decision: InducedModuleDescriptor
    chi_pi_minus: Optional[CharacterSpec] = None
    table_pi_minus: Optional[ScalarTable] = None
    annotations: List[CaseIIAnnotation] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if (self.chi_pi_minus is None) != (self.table_pi_minus is None):
            raise ValueError("chi_pi_minus and table_pi_minus must be given together")

    def to_dict(self) -> dict:
        return {
            "input": self.gg_input.to_dict(),
            "chi_pi": self.chi_pi.to_dict(),
            "chi_pi_minus": None if self.chi_pi_minus is None else self.chi_pi_minus.to_dict(),
            "table_pi": table_to_dict(self.table_pi),
            "table_pi_minus": table_to_dict(self.table_pi_minus),
            "decision": self.decision.to_dict(),
            "annotations": [item.to_dict() for item in self.annotations],
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "GGReport":
        chi_minus = data.get("chi_pi_minus")
        return cls(
            gg_input=GGInput.from_dict(data["input"]),
            chi_pi=CharacterSpec.from_dict(data["chi_pi"]),
            table_pi=table_from_dict(data["table_pi"]),
            decision=InducedModuleDescriptor.from_dict(data["decision"]),
            chi_pi_minus=None if chi_minus is None else CharacterSpec.from_dict(chi_minus),
            table_pi_minus=table_from_dict(data.get("table_pi_minus")),
            annotations=[CaseIIAnnotation.from_dict(item) for item in data.get("annotations", [])],
            notes=list(data.get("notes", [])),
        )


__all__ = ["ScalarTable", "CaseIIAnnotation", "GGReport", "table_to_dict", "table_from_dict"]
