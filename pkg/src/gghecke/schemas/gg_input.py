"""Input of the Gelfand-Graev determination."""

from dataclasses import dataclass
from fractions import Fraction

from ..constants import GGCase
from ..errors import ParameterError


@dataclass(frozen=True)
class GGInput:
    """Case, rank and reducibility points.

    Attributes:
        case_tag: GGCase.I, II or III
        n: rank
        t: interior parameter
        alpha: reducibility point of rho (case III)
        beta: reducibility point of rho^- (case III), beta <= alpha
    """

    case_tag: GGCase
    n: int
    t: int
    alpha: Fraction = Fraction(0)
    beta: Fraction = Fraction(0)

    def __post_init__(self):
        if isinstance(self.case_tag, str):
            object.__setattr__(self, "case_tag", GGCase(self.case_tag.upper()))
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))

        if self.n < 1:
            raise ParameterError(f"n must be positive, got {self.n}")
        if self.t < 1:
            raise ParameterError(f"t must be positive, got {self.t}")

        if self.case_tag == GGCase.I:
            if self.alpha or self.beta:
                raise ParameterError("case I takes no alpha, beta")
            return
        if self.case_tag == GGCase.II:
            if self.alpha or self.beta:
                raise ParameterError(f"case II needs alpha = beta = 0, got {self.alpha}, {self.beta}")
            return

        if not self.alpha > 0:
            raise ParameterError(f"case III needs alpha > 0, got {self.alpha}")
        if not self.alpha >= self.beta >= 0:
            raise ParameterError(f"case III needs alpha >= beta >= 0, got {self.alpha}, {self.beta}")
        for name, value in (("alpha", self.alpha), ("beta", self.beta)):
            if (2 * self.t * value).denominator != 1:
                raise ParameterError(f"2t*{name} must be an integer, got {2 * self.t * value}")
        for name, value in (("r", self.t * (self.alpha + self.beta)), ("s", self.t * (self.alpha - self.beta))):
            if value.denominator != 1:
                raise ParameterError(f"{name} = {value} is not an integer")

    @property
    def r(self) -> int:
        return int(self.t * (self.alpha + self.beta))

    @property
    def s(self) -> int:
        return int(self.t * (self.alpha - self.beta))

    def to_dict(self) -> dict:
        data = {"case": self.case_tag.value, "n": self.n, "t": self.t}
        if self.case_tag == GGCase.III:
            data.update({"alpha": str(self.alpha), "beta": str(self.beta), "r": self.r, "s": self.s})
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "GGInput":
        return cls(
            case_tag=GGCase(data["case"]),
            n=int(data["n"]),
            t=int(data["t"]),
            alpha=Fraction(data.get("alpha", 0)),
            beta=Fraction(data.get("beta", 0)),
        )


__all__ = ["GGInput"]
