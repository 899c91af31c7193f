"""Catalogue entries for solutions of the functional equation (*)."""

from dataclasses import dataclass
from typing import Tuple

from ..constants import FamilyKind

_CONSTANTS = (FamilyKind.CONST_MINUS_ONE, FamilyKind.CONST_QR)
_SIGNED = (FamilyKind.FAM_III, FamilyKind.FAM_IV)
_NEGATIVE_SIDE = (FamilyKind.FAM_I, FamilyKind.FAM_II, FamilyKind.FAM_III)


@dataclass(frozen=True)
class SolutionFamily:
    """One member of the solution catalogue.

    Attributes:
        kind: Family kind
        d: Family parameter (0 for the constants; >= 1 for I, II, V, VI; >= 0 for III, IV)
        sign: +1 or -1 for families III and IV, 0 otherwise
    """

    kind: FamilyKind
    d: int = 0
    sign: int = 0

    def __post_init__(self):
        if self.kind in _CONSTANTS:
            if self.d or self.sign:
                raise ValueError(f"{self.kind.value} takes no parameters, got d={self.d}, sign={self.sign}")
            return
        if self.kind in _SIGNED:
            if self.d < 0:
                raise ValueError(f"{self.kind.value} needs d >= 0, got {self.d}")
            if self.sign not in (1, -1):
                raise ValueError(f"{self.kind.value} needs sign +1 or -1, got {self.sign}")
            return
        if self.d < 1:
            raise ValueError(f"{self.kind.value} needs d >= 1, got {self.d}")
        if self.sign:
            raise ValueError(f"{self.kind.value} takes no sign, got {self.sign}")

    @property
    def is_constant(self) -> bool:
        return self.kind in _CONSTANTS

    @property
    def is_signed(self) -> bool:
        return self.kind in _SIGNED

    @property
    def support(self) -> Tuple[int, int]:
        """(mindeg, maxdeg) of the family polynomial for generic parameters."""
        d = self.d
        if self.is_constant:
            return 0, 0
        if self.kind in (FamilyKind.FAM_I, FamilyKind.FAM_II):
            return -2 * d, 0
        if self.kind == FamilyKind.FAM_III:
            return -2 * d - 1, 0
        if self.kind == FamilyKind.FAM_IV:
            return 1, 2 * d + 1
        return 1, 2 * d

    @property
    def extreme_degree(self) -> int:
        """The degree of the coefficient that pins the family down."""
        low, high = self.support
        return low if self.kind in _NEGATIVE_SIDE else high

    @property
    def label(self) -> str:
        if self.is_constant:
            return self.kind.value
        if self.is_signed:
            return f"{self.kind.value}({self.d},{'+' if self.sign > 0 else '-'})"
        return f"{self.kind.value}({self.d})"

    def sort_key(self) -> Tuple[int, int, int]:
        order = list(FamilyKind).index(self.kind)
        return order, self.d, -self.sign

    def __str__(self) -> str:
        return self.label

    def to_dict(self) -> dict:
        data = {"kind": self.kind.value, "d": self.d}
        if self.is_signed:
            data["sign"] = "+" if self.sign > 0 else "-"
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "SolutionFamily":
        sign = data.get("sign", 0)
        if isinstance(sign, str):
            sign = 1 if sign == "+" else -1
        return cls(kind=FamilyKind(data["kind"]), d=int(data.get("d", 0)), sign=sign)

    @classmethod
    def parse(cls, label: str) -> "SolutionFamily":
        """Inverse of ``label``: ``FamIII(0,+)``, ``FamI(2)``, ``ConstQr``."""
        label = label.strip()
        if "(" not in label:
            return cls(FamilyKind(label))
        name, _, rest = label.partition("(")
        args = [part.strip() for part in rest.rstrip(")").split(",")]
        kind = FamilyKind(name)
        if len(args) == 2:
            return cls(kind, int(args[0]), 1 if args[1] == "+" else -1)
        return cls(kind, int(args[0]))


__all__ = ["SolutionFamily"]
