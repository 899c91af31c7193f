"""One-dimensional representations of the finite-type subalgebras of H."""

from dataclasses import dataclass
from typing import List, Optional

from ..algebra.coeffring import Coefficient
from ..constants import Subalgebra


@dataclass(frozen=True)
class OneDimRep:
    """Character epsilon of H_Sn, H0 or Hn.

    Attributes:
        subalgebra: Inducing subalgebra
        lambda_A: Common scalar of T_1..T_{n-1} (-1 or q^t); None when n = 1
        lambda_end: Scalar of T_n (H0, -1 or q^r) or of T_0 (Hn, -1 or q^s); None for H_Sn
    """

    subalgebra: Subalgebra
    lambda_A: Optional[Coefficient] = None
    lambda_end: Optional[Coefficient] = None

    def __post_init__(self):
        if self.subalgebra == Subalgebra.H_SN:
            if self.lambda_end is not None:
                raise ValueError("H_Sn characters have no end-node scalar")
            if self.lambda_A is None:
                raise ValueError("H_Sn characters need lambda_A")
        elif self.lambda_end is None:
            raise ValueError(f"{self.subalgebra.value} characters need lambda_end")

    @property
    def label(self) -> str:
        parts = []
        if self.lambda_A is not None:
            parts.append(f"T_i={self.lambda_A.to_text()}")
        if self.subalgebra == Subalgebra.H0:
            parts.append(f"T_n={self.lambda_end.to_text()}")
        elif self.subalgebra == Subalgebra.HN:
            parts.append(f"T_0={self.lambda_end.to_text()}")
        return f"{self.subalgebra.value}[{', '.join(parts)}]"

    def scalars(self, n: int) -> dict:
        """Generator index -> scalar on the inducing subalgebra."""
        table = {}
        if self.lambda_A is not None:
            for i in range(1, n):
                table[i] = self.lambda_A
        if self.subalgebra == Subalgebra.H0:
            table[n] = self.lambda_end
        elif self.subalgebra == Subalgebra.HN:
            table[0] = self.lambda_end
        return table

    @classmethod
    def candidates(cls, params) -> List["OneDimRep"]:
        """All characters of H_Sn (case A) or of H0 and Hn (case C).

        Args:
            params: HeckeParams
        """
        consts = params.constants
        lambdas: List[Optional[Coefficient]] = [Coefficient.constant(-1), consts.qt] if params.n > 1 else [None]
        if not params.is_type_c:
            # H_Sn is trivial for n = 1; its character is recorded with lambda_A = q^t
            return [cls(Subalgebra.H_SN, lam) for lam in (lambdas if params.n > 1 else [consts.qt])]
        reps = []
        for lam in lambdas:
            for end in (Coefficient.constant(-1), consts.qr):
                reps.append(cls(Subalgebra.H0, lam, end))
        for lam in lambdas:
            for end in (Coefficient.constant(-1), consts.qs):
                reps.append(cls(Subalgebra.HN, lam, end))
        return reps

    def to_dict(self) -> dict:
        return {
            "subalgebra": self.subalgebra.value,
            "lambda_A": None if self.lambda_A is None else self.lambda_A.to_text(),
            "lambda_end": None if self.lambda_end is None else self.lambda_end.to_text(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "OneDimRep":
        def coefficient(text):
            return None if text is None else Coefficient.parse(text)

        return cls(
            subalgebra=Subalgebra(data["subalgebra"]),
            lambda_A=coefficient(data.get("lambda_A")),
            lambda_end=coefficient(data.get("lambda_end")),
        )


@dataclass(frozen=True)
class InducedModuleDescriptor:
    """Names the module H (x)_{H'} epsilon, rendered as ``H (x)_H0 eps[v^2, v^4]``.

    Attributes:
        rep: The inducing character
    """

    rep: OneDimRep

    @property
    def notation(self) -> str:
        scalars = []
        if self.rep.lambda_A is not None:
            scalars.append(self.rep.lambda_A.to_text())
        if self.rep.lambda_end is not None:
            scalars.append(self.rep.lambda_end.to_text())
        return f"H (x)_{self.rep.subalgebra.value} eps[{', '.join(scalars)}]"

    def to_dict(self) -> dict:
        return {"notation": self.notation, "rep": self.rep.to_dict()}

    @classmethod
    def from_dict(cls, data: dict) -> "InducedModuleDescriptor":
        return cls(rep=OneDimRep.from_dict(data["rep"]))


__all__ = ["OneDimRep", "InducedModuleDescriptor"]
