"""Classification report schema."""

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .one_dim_rep import OneDimRep


@dataclass
class ClassificationReport:
    """H-structure on A determined by a solution f of (*).

    Attributes:
        polynomial: Input solution f (text in X)
        family: Catalogue label of f
        params: Hecke parameter record
        rep: Resulting one-dimensional character
        shift: Exponent of g1 = (X_1 ... X_n)^shift
        g1: Text of the common eigenvector
        eigenvalues: Generator name -> scalar text on g1
        mu: T_0 eigenvalue for Hn-type structures
        notes: Free-form remarks
    """

    polynomial: str
    family: str
    params: dict
    rep: OneDimRep
    shift: int
    g1: str
    eigenvalues: Dict[str, str] = field(default_factory=dict)
    mu: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    @property
    def subalgebra(self) -> str:
        return self.rep.subalgebra.value

    def to_dict(self) -> dict:
        return {
            "polynomial": self.polynomial,
            "family": self.family,
            "params": dict(self.params),
            "subalgebra": self.subalgebra,
            "rep": self.rep.to_dict(),
            "shift": self.shift,
            "g1": self.g1,
            "eigenvalues": dict(self.eigenvalues),
            "mu": self.mu,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ClassificationReport":
        return cls(
            polynomial=data["polynomial"],
            family=data["family"],
            params=dict(data["params"]),
            rep=OneDimRep.from_dict(data["rep"]),
            shift=int(data["shift"]),
            g1=data["g1"],
            eigenvalues=dict(data.get("eigenvalues", {})),
            mu=data.get("mu"),
            notes=list(data.get("notes", [])),
        )


__all__ = ["ClassificationReport"]
