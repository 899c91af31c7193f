"""The algebra A = Q[v^+-][X_1^+-, ..., X_n^+-].

Sparse multivariate Laurent polynomials with Coefficient entries, the
signed-permutation action (``f^{s_i}`` and ``f^v``), exact divided
differences and character evaluation.
"""

from fractions import Fraction
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from ..constants import ERROR_INEXACT_DIVISION
from ..errors import InexactDivisionError, NotInvertibleError, ParameterError, ParseError
from ..schemas.character import CharacterSpec
from .coeffring import ONE, ZERO, Coefficient
from .parsing import ExpressionParser, format_power, join_signed_terms
from .weyl import SignedPermutation, iter_simple_reflections

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction, Coefficient]


class LaurentPoly:
    """Laurent polynomial in n variables with Coefficient entries.

    Attributes:
        n: number of variables
        terms: exponent vector (length n) -> nonzero Coefficient
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Optional[Mapping[Exponents, Scalar]] = None):
        if n < 1:
            raise ParameterError(f"a Laurent polynomial needs n >= 1 variables, got {n}")
        clean: Dict[Exponents, Coefficient] = {}
        for exps, value in (terms or {}).items():
            exps = tuple(int(a) for a in exps)
            if len(exps) != n:
                raise ParameterError(f"exponent vector {exps} does not have length {n}")
            value = value if isinstance(value, Coefficient) else Coefficient.constant(value)
            if value:
                clean[exps] = clean.get(exps, ZERO) + value
                if not clean[exps]:
                    del clean[exps]
        self.n = n
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, n: int, terms: Dict[Exponents, Coefficient]) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # ----- constructors -----

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls._trusted(n, {})

    @classmethod
    def constant(cls, n: int, value: Scalar) -> "LaurentPoly":
        return cls(n, {(0,) * n: value})

    @classmethod
    def one(cls, n: int) -> "LaurentPoly":
        return cls._trusted(n, {(0,) * n: ONE})

    @classmethod
    def monomial(cls, n: int, exponents: Exponents, value: Scalar = 1) -> "LaurentPoly":
        return cls(n, {tuple(exponents): value})

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> "LaurentPoly":
        """X_i^power."""
        if not 1 <= i <= n:
            raise ParameterError(f"variable X{i} does not exist for n={n}")
        exps = [0] * n
        exps[i - 1] = power
        return cls._trusted(n, {tuple(exps): ONE})

    @classmethod
    def univariate(cls, coefficients: Mapping[int, Scalar]) -> "LaurentPoly":
        """One-variable polynomial from a degree -> coefficient map."""
        return cls(1, {(d,): c for d, c in coefficients.items()})

    @classmethod
    def parse(cls, text: str, n: int) -> "LaurentPoly":
        """Parse polynomial text in X1..Xn (``X`` when n == 1), v and q."""

        def symbol(name: str) -> "LaurentPoly":
            if name == "v":
                return cls.constant(n, Coefficient.v_pow(1))
            if name == "q":
                return cls.constant(n, Coefficient.v_pow(2))
            if name == "X" and n == 1:
                return cls.variable(1, 1)
            if name.startswith("X") and name[1:].isdigit() and 1 <= int(name[1:]) <= n:
                return cls.variable(n, int(name[1:]))
            raise ParseError(text, text.find(name), f"unknown symbol {name!r} for n={n}")

        return ExpressionParser(lambda value: cls.constant(n, value), symbol).parse(text)

    # ----- accessors -----

    @property
    def terms(self) -> Dict[Exponents, Coefficient]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponents, Coefficient]]:
        """Terms in decreasing graded-lexicographic order of exponents."""
        return iter(sorted(self._terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True))

    def coefficient(self, exponents: Exponents) -> Coefficient:
        return self._terms.get(tuple(exponents), ZERO)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_constant(self) -> bool:
        return not self._terms or set(self._terms) == {(0,) * self.n}

    def constant_value(self) -> Coefficient:
        """The coefficient of the constant monomial."""
        return self._terms.get((0,) * self.n, ZERO)

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def degree_bounds(self, var: int = 1) -> Tuple[int, int]:
        """(min, max) exponent of X_var over the support."""
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        exps = [e[var - 1] for e in self._terms]
        return min(exps), max(exps)

    def univariate_coefficients(self) -> Dict[int, Coefficient]:
        if self.n != 1:
            raise ParameterError(f"expected a one-variable polynomial, got n={self.n}")
        return {e[0]: c for e, c in self._terms.items()}

    # ----- ring operations -----

    def _coerce(self, other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise ParameterError(f"cannot combine polynomials in {self.n} and {other.n} variables")
            return other
        if isinstance(other, (int, Fraction, Coefficient)):
            return LaurentPoly.constant(self.n, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other._terms:
            return self
        result = dict(self._terms)
        for exps, value in other._terms.items():
            total = result.get(exps, ZERO) + value
            if total:
                result[exps] = total
            else:
                result.pop(exps, None)
        return LaurentPoly._trusted(self.n, result)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._trusted(self.n, {e: -c for e, c in self._terms.items()})

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
        if isinstance(other, (int, Fraction, Coefficient)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentPoly.zero(self.n)
        result: Dict[Exponents, Coefficient] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                total = result.get(exps, ZERO) + c1 * c2
                if total:
                    result[exps] = total
                else:
                    result.pop(exps, None)
        return LaurentPoly._trusted(self.n, result)

    __rmul__ = __mul__

    def scale(self, value: Scalar) -> "LaurentPoly":
        if not isinstance(value, Coefficient):
            value = Coefficient.constant(value)
        if not value:
            return LaurentPoly.zero(self.n)
        return LaurentPoly._trusted(self.n, {e: c * value for e, c in self._terms.items()})

    def shift(self, exponents: Exponents) -> "LaurentPoly":
        """Multiply by the monomial X^exponents."""
        return LaurentPoly._trusted(
            self.n,
            {tuple(a + b for a, b in zip(e, exponents)): c for e, c in self._terms.items()},
        )

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = LaurentPoly.one(self.n)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        """Inverse of a unit, i.e. a monomial with a unit coefficient."""
        if not self.is_monomial:
            raise NotInvertibleError(f"{self.to_text()} is not a unit of the Laurent ring")
        (exps, value), = self._terms.items()
        return LaurentPoly._trusted(self.n, {tuple(-a for a in exps): value.inverse()})

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Coefficient)):
            other = LaurentPoly.constant(self.n, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    # ----- Weyl group action -----

    def swap(self, i: int) -> "LaurentPoly":
        """f^{s_i}: exchange X_i and X_{i+1}."""
        if not 1 <= i < self.n:
            raise ParameterError(f"swap index {i} out of range 1..{self.n - 1}")
        result = {}
        for exps, value in self._terms.items():
            e = list(exps)
            e[i - 1], e[i] = e[i], e[i - 1]
            result[tuple(e)] = value
        return LaurentPoly._trusted(self.n, result)

    def invert_last(self) -> "LaurentPoly":
        """f^v: substitute X_n -> 1/X_n."""
        return LaurentPoly._trusted(
            self.n, {exps[:-1] + (-exps[-1],): value for exps, value in self._terms.items()}
        )

    def act(self, w: SignedPermutation) -> "LaurentPoly":
        if w.n != self.n:
            raise ParameterError(f"{w} does not act on polynomials in {self.n} variables")
        return LaurentPoly._trusted(
            self.n, {w.act_on_exponents(exps): value for exps, value in self._terms.items()}
        )

    def lift(self, n: int, var: int) -> "LaurentPoly":
        """Embed a one-variable polynomial into n variables as a polynomial in X_var."""
        if self.n != 1:
            raise ParameterError("only one-variable polynomials can be lifted")
        result = {}
        for (d,), value in self._terms.items():
            exps = [0] * n
            exps[var - 1] = d
            result[tuple(exps)] = value
        return LaurentPoly._trusted(n, result)

    # ----- rendering -----

    def _monomial_text(self, exps: Exponents) -> str:
        if self.n == 1:
            return format_power("X", exps[0]) if exps[0] else ""
        return "*".join(format_power(f"X{i}", a) for i, a in enumerate(exps, start=1) if a)

    def to_text(self) -> str:
        rendered = []
        for exps, value in self.items():
            mono = self._monomial_text(exps)
            coeff_text = value.to_text()
            if not mono:
                rendered.append(coeff_text)
            elif value == 1:
                rendered.append(mono)
            elif value == -1:
                rendered.append("-" + mono)
            elif value.is_unit:
                rendered.append(f"{coeff_text}*{mono}")
            else:
                rendered.append(f"({coeff_text})*{mono}")
        return join_signed_terms(rendered)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"LaurentPoly({self.n}, {self.to_text()!r})"


# ----- operations on A -----

def poly_swap(f: LaurentPoly, i: int) -> LaurentPoly:
    return f.swap(i)


def poly_invert_last(f: LaurentPoly) -> LaurentPoly:
    return f.invert_last()


def weyl_act(w: SignedPermutation, f: LaurentPoly) -> LaurentPoly:
    return f.act(w)


def _divide_by_linear(numerator: LaurentPoly, var: int, root: LaurentPoly) -> LaurentPoly:
    """Exact quotient numerator / (X_var - root), root free of X_var.

    Synthetic division on the coefficients of X_var; a nonzero remainder
    raises InexactDivisionError.
    """
    n = numerator.n
    if not numerator:
        return numerator

    groups: Dict[int, Dict[Exponents, Coefficient]] = {}
    for exps, value in numerator.terms.items():
        rest = exps[:var - 1] + (0,) + exps[var:]
        groups.setdefault(exps[var - 1], {})[rest] = value
    low, high = min(groups), max(groups)

    quotient: Dict[Exponents, Coefficient] = {}
    carry = LaurentPoly.zero(n)
    for k in range(high, low, -1):
        carry = LaurentPoly._trusted(n, groups.get(k, {})) + root * carry
        for exps, value in carry.terms.items():
            quotient[exps[:var - 1] + (k - 1,) + exps[var:]] = value
    remainder = LaurentPoly._trusted(n, groups[low]) + root * carry
    if remainder:
        raise InexactDivisionError(ERROR_INEXACT_DIVISION.format(divisor=f"X{var} - ({root.to_text()})"))
    return LaurentPoly._trusted(n, quotient)


def divided_diff_A(f: LaurentPoly, i: int) -> LaurentPoly:
    """(f - f^{s_i}) / (1 - X_{i+1}/X_i), computed exactly."""
    numerator = (f - f.swap(i)) * LaurentPoly.variable(f.n, i)
    return _divide_by_linear(numerator, i, LaurentPoly.variable(f.n, i + 1))


def divided_diff_C(f: LaurentPoly) -> LaurentPoly:
    """(f - f^v) / (1 - X_n^-2), computed exactly."""
    n = f.n
    numerator = (f - f.invert_last()) * LaurentPoly.variable(n, n, 2)
    once = _divide_by_linear(numerator, n, LaurentPoly.one(n))
    return _divide_by_linear(once, n, -LaurentPoly.one(n))


def build_R_d(d: int, b: Coefficient, c: Coefficient) -> LaurentPoly:
    """b X^{2d} + c X^{2d-1} + ... + b X^2 + c X."""
    if d < 1:
        raise ParameterError(f"R_d needs d >= 1, got {d}")
    coefficients = {}
    for j in range(1, d + 1):
        coefficients[2 * j] = b
        coefficients[2 * j - 1] = c
    return LaurentPoly.univariate(coefficients)


def is_W_invariant(f: LaurentPoly, signed: bool = True) -> bool:
    """Fixed by every simple reflection of W(C_n) (signed) or S_n."""
    for i in iter_simple_reflections(f.n, signed):
        image = f.swap(i) if i < f.n else f.invert_last()
        if image != f:
            return False
    return True


def eval_character(f: LaurentPoly, chi: CharacterSpec) -> Coefficient:
    """Evaluate f at X_i -> zeta_i v^{m_i}."""
    if chi.n != f.n:
        raise ParameterError(f"character of rank {chi.n} cannot evaluate a polynomial in {f.n} variables")
    total = ZERO
    for exps, value in f.terms.items():
        sign = 1
        v_exp = 0
        for a, zeta, m in zip(exps, chi.signs, chi.v_exponents):
            if zeta < 0 and a % 2:
                sign = -sign
            v_exp += m * a
        total = total + value * Coefficient.v_pow(v_exp, sign)
    return total


__all__ = [
    "Exponents",
    "LaurentPoly",
    "poly_swap",
    "poly_invert_last",
    "weyl_act",
    "divided_diff_A",
    "divided_diff_C",
    "build_R_d",
    "is_W_invariant",
    "eval_character",
]
