"""Characters of the Laurent algebra A.

A character sends each X_i to zeta_i * v^{m_i} with zeta_i = +-1.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class CharacterSpec:
    """Character X_i -> signs[i] * v^{v_exponents[i]}.

    Attributes:
        signs: zeta_1..zeta_n, each +1 or -1
        v_exponents: m_1..m_n, integer powers of v
    """

    signs: Tuple[int, ...]
    v_exponents: Tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) != len(self.v_exponents):
            raise ValueError(
                f"Character has {len(self.signs)} signs but {len(self.v_exponents)} exponents"
            )
        if not self.signs:
            raise ValueError("Character needs at least one variable")
        for zeta in self.signs:
            if zeta not in (1, -1):
                raise ValueError(f"Character signs must be +1 or -1, got {zeta}")
        for m in self.v_exponents:
            if int(m) != m:
                raise ValueError(f"Character exponents must be integers, got {m}")
        object.__setattr__(self, "signs", tuple(int(z) for z in self.signs))
        object.__setattr__(self, "v_exponents", tuple(int(m) for m in self.v_exponents))

    @property
    def n(self) -> int:
        return len(self.signs)

    @classmethod
    def from_q_powers(cls, signs: Sequence[int], q_powers: Sequence[Fraction]) -> "CharacterSpec":
        """Build from q-exponents a_i (X_i -> zeta_i q^{a_i}), requiring 2 a_i integral."""
        exponents: List[int] = []
        for a in q_powers:
            doubled = 2 * Fraction(a)
            if doubled.denominator != 1:
                raise ValueError(f"q^{a} is not an integral power of v")
            exponents.append(int(doubled))
        return cls(tuple(signs), tuple(exponents))

    def to_dict(self) -> dict:
        return {"signs": list(self.signs), "v_exponents": list(self.v_exponents)}

    @classmethod
    def from_dict(cls, data: dict) -> "CharacterSpec":
        return cls(tuple(data["signs"]), tuple(data["v_exponents"]))


__all__ = ["CharacterSpec"]
