"""Exact coefficient ring Q[v, v^-1], v a formal square root of q.

Every parameter of the Hecke algebra (q^t, q^r, q^s, the constants b and c,
the half powers v^(r+s), v^(r-s)) is a Laurent polynomial in v with rational
coefficients, so all arithmetic here is exact.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from ..constants import ERROR_INEXACT_DIVISION, ERROR_NOT_INVERTIBLE
from ..errors import InexactDivisionError, NotInvertibleError, ParameterError, ParseError
from .parsing import ExpressionParser, format_power, format_rational, join_signed_terms

Scalar = Union[int, Fraction]


class Coefficient:
    """Sparse Laurent polynomial in v over Q.

    ``terms`` maps a v-exponent to a nonzero rational. Instances are
    immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[int, Scalar]] = None):
        clean: Dict[int, Fraction] = {}
        if terms:
            for exp, value in terms.items():
                value = Fraction(value)
                if value:
                    clean[int(exp)] = value
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms: Dict[int, Fraction]) -> "Coefficient":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # ----- constructors -----

    @classmethod
    def constant(cls, value: Scalar) -> "Coefficient":
        return cls({0: value})

    @classmethod
    def v_pow(cls, k: int, value: Scalar = 1) -> "Coefficient":
        return cls({k: value})

    @classmethod
    def q_pow(cls, k: int, value: Scalar = 1) -> "Coefficient":
        return cls({2 * k: value})

    @classmethod
    def parse(cls, text: str) -> "Coefficient":
        """Parse ``a_k*v^k + ...`` text (``q`` is accepted for v^2)."""
        parser = ExpressionParser(cls.constant, _coefficient_symbol)
        return parser.parse(text)

    # ----- accessors -----

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        """Terms in decreasing exponent order."""
        return iter(sorted(self._terms.items(), reverse=True))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_unit(self) -> bool:
        """Units of Q[v, v^-1] are the nonzero monomials."""
        return len(self._terms) == 1

    @property
    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def constant_term(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero coefficient has no degree")
        return max(self._terms)

    def low_degree(self) -> int:
        if not self._terms:
            raise ValueError("zero coefficient has no degree")
        return min(self._terms)

    def leading(self) -> Tuple[int, Fraction]:
        exp = self.degree()
        return exp, self._terms[exp]

    def sort_key(self) -> Tuple[Tuple[int, Fraction], ...]:
        return tuple(self.items())

    # ----- ring operations -----

    @staticmethod
    def _coerce(other) -> Optional["Coefficient"]:
        if isinstance(other, Coefficient):
            return other
        if isinstance(other, (int, Fraction)):
            return Coefficient.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        result = dict(self._terms)
        for exp, value in other._terms.items():
            total = result.get(exp, 0) + value
            if total:
                result[exp] = total
            else:
                result.pop(exp, None)
        return Coefficient._trusted(result)

    __radd__ = __add__

    def __neg__(self):
        return Coefficient._trusted({exp: -value for exp, value in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return ZERO
        result: Dict[int, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = e1 + e2
                result[exp] = result.get(exp, 0) + c1 * c2
        return Coefficient._trusted({e: c for e, c in result.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "Coefficient":
        if not self.is_unit:
            raise NotInvertibleError(ERROR_NOT_INVERTIBLE.format(value=self.to_text()))
        (exp, value), = self._terms.items()
        return Coefficient._trusted({-exp: 1 / value})

    def exact_div(self, other: "Coefficient") -> Optional["Coefficient"]:
        """Quotient self/other in Q[v, v^-1], or None when it does not exist.

        Raises:
            ZeroDivisionError: other is zero
        """
        other = self._coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero coefficient")
        if not self._terms:
            return ZERO
        if other.is_unit:
            return self * other.inverse()

        # Strip powers of v so both operands have a nonzero constant term;
        # v is coprime to the shifted divisor.
        shift = self.low_degree() - other.low_degree()
        remainder = {e - self.low_degree(): c for e, c in self._terms.items()}
        divisor = {e - other.low_degree(): c for e, c in other._terms.items()}
        top = max(divisor)
        top_coeff = divisor[top]
        quotient: Dict[int, Fraction] = {}
        while remainder and max(remainder) >= top:
            exp = max(remainder)
            factor = remainder[exp] / top_coeff
            quotient[exp - top] = factor
            for d_exp, d_coeff in divisor.items():
                key = exp - top + d_exp
                value = remainder.get(key, 0) - factor * d_coeff
                if value:
                    remainder[key] = value
                else:
                    remainder.pop(key, None)
        if remainder:
            return None
        return Coefficient._trusted({e + shift: c for e, c in quotient.items()})

    def divide(self, other: "Coefficient") -> "Coefficient":
        """Exact quotient; raises InexactDivisionError if none exists."""
        quotient = self.exact_div(other)
        if quotient is None:
            raise InexactDivisionError(ERROR_INEXACT_DIVISION.format(divisor=other))
        return quotient

    def sqrt(self) -> Optional["Coefficient"]:
        """Square root with positive leading coefficient, or None."""
        if not self._terms:
            return ZERO
        top, top_coeff = self.leading()
        low = self.low_degree()
        if top % 2 or low % 2:
            return None
        root_top = _rational_sqrt(top_coeff)
        if root_top is None:
            return None

        half_top = top // 2
        root: Dict[int, Fraction] = {half_top: root_top}
        remainder = self - Coefficient._trusted(dict(root)) ** 2
        while remainder:
            exp, value = remainder.leading()
            next_exp = exp - half_top
            if next_exp < low // 2:
                return None
            root[next_exp] = value / (2 * root_top)
            remainder = self - Coefficient._trusted(dict(root)) ** 2
        return Coefficient._trusted(root)

    # ----- comparison / hashing -----

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # ----- evaluation / rendering -----

    def evaluate(self, v0: Scalar) -> Fraction:
        """Substitute v <- v0 (a positive rational) exactly."""
        v0 = Fraction(v0)
        if v0 <= 0:
            raise ParameterError(f"v0 must be positive, got {v0}")
        return sum((c * v0 ** e for e, c in self._terms.items()), Fraction(0))

    def to_text(self) -> str:
        rendered = []
        for exp, value in self.items():
            if exp == 0:
                rendered.append(format_rational(value))
            elif value == 1:
                rendered.append(format_power("v", exp))
            elif value == -1:
                rendered.append("-" + format_power("v", exp))
            else:
                rendered.append(f"{format_rational(value)}*{format_power('v', exp)}")
        return join_signed_terms(rendered)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Coefficient({self.to_text()!r})"


ZERO = Coefficient()
ONE = Coefficient.constant(1)


def _coefficient_symbol(name: str) -> Coefficient:
    if name == "v":
        return Coefficient.v_pow(1)
    if name == "q":
        return Coefficient.v_pow(2)
    raise ParseError(name, 0, f"unknown symbol {name!r} in a coefficient")


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    num = math.isqrt(value.numerator)
    den = math.isqrt(value.denominator)
    if num * num != value.numerator or den * den != value.denominator:
        return None
    return Fraction(num, den)


def v_pow(k: int) -> Coefficient:
    return Coefficient.v_pow(k)


def q_pow(k: int) -> Coefficient:
    return Coefficient.q_pow(k)


@dataclass(frozen=True)
class ParamConstants:
    """Derived constants of a parameter triple (t, r, s).

    Attributes:
        qt, qr, qs: q^t, q^r, q^s
        b: q^r - 1
        c: v^(r+s) - v^(r-s)
        half_rs_plus: v^(r+s)
        half_rs_minus: v^(r-s)
    """

    t: int
    r: int
    s: int
    qt: Coefficient
    qr: Coefficient
    qs: Coefficient
    b: Coefficient
    c: Coefficient
    half_rs_plus: Coefficient
    half_rs_minus: Coefficient

    def to_dict(self) -> Dict[str, str]:
        return {
            "qt": self.qt.to_text(),
            "qr": self.qr.to_text(),
            "qs": self.qs.to_text(),
            "b": self.b.to_text(),
            "c": self.c.to_text(),
            "half_rs_plus": self.half_rs_plus.to_text(),
            "half_rs_minus": self.half_rs_minus.to_text(),
        }


def param_constants(t: int, r: int, s: int) -> ParamConstants:
    """Compute q^t, q^r, q^s, b and c.

    Raises:
        ParameterError: if t < 1, s < 0 or r < s
    """
    if t < 1:
        raise ParameterError(f"t must be positive, got t={t}")
    if s < 0 or r < s:
        raise ParameterError(f"expected r >= s >= 0, got r={r}, s={s}")

    qr = q_pow(r)
    plus = v_pow(r + s)
    minus = v_pow(r - s)
    return ParamConstants(
        t=t,
        r=r,
        s=s,
        qt=q_pow(t),
        qr=qr,
        qs=q_pow(s),
        b=qr - 1,
        c=plus - minus,
        half_rs_plus=plus,
        half_rs_minus=minus,
    )


__all__ = [
    "Coefficient",
    "ZERO",
    "ONE",
    "v_pow",
    "q_pow",
    "ParamConstants",
    "param_constants",
]
