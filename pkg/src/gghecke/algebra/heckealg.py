"""Affine Hecke algebra H = A (x) H_0 in the Bernstein presentation.

Case A is the algebra of type A~_{n-1} with parameter q^t on T_1..T_{n-1}.
Case C is type C~_n with q^t on T_1..T_{n-1}, q^r on T_n and q^s on the
affine generator T_0, which is not part of the basis but the computed element

    T_0 = v^e X_1 T_1^-1 ... T_{n-1}^-1 T_n^-1 T_{n-1}^-1 ... T_1^-1,

with e = s + 2t(n-1) + r (``standard``) or s + t(n-1) + r (``halved``).

Every element is stored as sum_w p_w T_w over the finite Weyl group.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from ..constants import (
    ERROR_INDEX_OUT_OF_RANGE,
    ERROR_PARAMS_MISMATCH,
    CaseTag,
    RelationKind,
    RelationStatus,
    T0Exponent,
)
from ..errors import ParameterError
from ..infrastructure.logger import log_relation_event, logger
from ..schemas.relation_report import RelationCheck, RelationReport
from .coeffring import ONE, Coefficient, ParamConstants, param_constants
from .laurent import LaurentPoly, divided_diff_A, divided_diff_C
from .parsing import join_signed_terms
from .weyl import SignedPermutation

Terms = Dict[SignedPermutation, LaurentPoly]


@dataclass(frozen=True)
class HeckeParams:
    """Parameters of one affine Hecke algebra.

    Attributes:
        case_tag: CaseTag.A or CaseTag.C
        n: rank (number of variables X_1..X_n)
        t: parameter of T_1..T_{n-1}
        r: parameter of T_n (case C; 0 in case A)
        s: parameter of T_0 (case C; 0 in case A)
        t0_exponent: spelling of the T_0 prefactor
    """

    case_tag: CaseTag
    n: int
    t: int
    r: int = 0
    s: int = 0
    t0_exponent: T0Exponent = T0Exponent.STANDARD

    def __post_init__(self):
        if isinstance(self.case_tag, str):
            object.__setattr__(self, "case_tag", CaseTag(self.case_tag.upper()))
        if isinstance(self.t0_exponent, str):
            object.__setattr__(self, "t0_exponent", T0Exponent(self.t0_exponent))
        if self.n < 1:
            raise ParameterError(f"n must be positive, got n={self.n}")
        if self.case_tag == CaseTag.A and (self.r or self.s):
            raise ParameterError(f"case A has no r, s parameters, got r={self.r}, s={self.s}")
        # validates t >= 1 and r >= s >= 0
        param_constants(self.t, self.r, self.s)

    @property
    def is_type_c(self) -> bool:
        return self.case_tag == CaseTag.C

    @property
    def is_degenerate(self) -> bool:
        """Case (ii): type C with r = s = 0."""
        return self.is_type_c and self.r == 0 and self.s == 0

    @cached_property
    def constants(self) -> ParamConstants:
        return param_constants(self.t, self.r, self.s)

    @property
    def finite_indices(self) -> Tuple[int, ...]:
        """Generators of H_0: 1..n-1, plus n in case C."""
        top = self.n if self.is_type_c else self.n - 1
        return tuple(range(1, top + 1))

    @property
    def generator_indices(self) -> Tuple[int, ...]:
        if self.is_type_c:
            return (0,) + self.finite_indices
        return self.finite_indices

    def check_index(self, i: int, affine: bool = True) -> None:
        allowed = self.generator_indices if affine else self.finite_indices
        if i not in allowed:
            raise ParameterError(
                ERROR_INDEX_OUT_OF_RANGE.format(index=i, case=self.case_tag.value, n=self.n)
            )

    def quadratic_parameter(self, i: int) -> Coefficient:
        """q_i with (T_i + 1)(T_i - q_i) = 0."""
        self.check_index(i)
        if i == 0:
            return self.constants.qs
        if i == self.n:
            return self.constants.qr
        return self.constants.qt

    @property
    def t0_v_exponent(self) -> int:
        if self.t0_exponent == T0Exponent.HALVED:
            return self.s + self.t * (self.n - 1) + self.r
        return self.s + 2 * self.t * (self.n - 1) + self.r

    def to_dict(self) -> dict:
        data = {"case": self.case_tag.value, "n": self.n, "t": self.t}
        if self.is_type_c:
            data.update({"r": self.r, "s": self.s, "t0_exponent": self.t0_exponent.value})
        return data

    def __str__(self) -> str:
        if self.is_type_c:
            return f"C(n={self.n}, t={self.t}, r={self.r}, s={self.s})"
        return f"A(n={self.n}, t={self.t})"


class HeckeElement:
    """Element sum_w p_w T_w of H, p_w in A, w in the finite Weyl group."""

    __slots__ = ("params", "_terms")

    def __init__(self, params: HeckeParams, terms: Optional[Mapping[SignedPermutation, LaurentPoly]] = None):
        clean: Terms = {}
        for w, poly in (terms or {}).items():
            if w.n != params.n or (w.is_signed and not params.is_type_c):
                raise ParameterError(f"{w!r} is not in the finite Weyl group of {params}")
            if poly.n != params.n:
                raise ParameterError(f"coefficient {poly} is not a polynomial in {params.n} variables")
            if poly:
                _accumulate(clean, w, poly)
        self.params = params
        self._terms = clean

    @classmethod
    def _trusted(cls, params: HeckeParams, terms: Terms) -> "HeckeElement":
        obj = cls.__new__(cls)
        obj.params = params
        obj._terms = terms
        return obj

    # ----- constructors -----

    @classmethod
    def zero(cls, params: HeckeParams) -> "HeckeElement":
        return cls._trusted(params, {})

    @classmethod
    def one(cls, params: HeckeParams) -> "HeckeElement":
        return cls.from_poly(params, LaurentPoly.one(params.n))

    @classmethod
    def from_poly(cls, params: HeckeParams, f: LaurentPoly) -> "HeckeElement":
        if not f:
            return cls.zero(params)
        return cls(params, {SignedPermutation.identity(params.n): f})

    @classmethod
    def basis(cls, params: HeckeParams, w: SignedPermutation) -> "HeckeElement":
        """T_w."""
        return cls(params, {w: LaurentPoly.one(params.n)})

    # ----- accessors -----

    @property
    def terms(self) -> Terms:
        return dict(self._terms)

    def items(self) -> List[Tuple[SignedPermutation, LaurentPoly]]:
        """Terms ordered by (length, reduced word)."""
        return sorted(self._terms.items(), key=lambda item: item[0].sort_key())

    def coefficient(self, w: SignedPermutation) -> LaurentPoly:
        return self._terms.get(w, LaurentPoly.zero(self.params.n))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # ----- arithmetic -----

    def _coerce(self, other) -> Optional["HeckeElement"]:
        if isinstance(other, HeckeElement):
            if other.params != self.params:
                raise ParameterError(ERROR_PARAMS_MISMATCH.format(left=self.params, right=other.params))
            return other
        if isinstance(other, LaurentPoly):
            return HeckeElement.from_poly(self.params, other)
        if isinstance(other, (int, Fraction, Coefficient)):
            return HeckeElement.from_poly(self.params, LaurentPoly.constant(self.params.n, other))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        result = dict(self._terms)
        for w, poly in other._terms.items():
            _accumulate(result, w, poly)
        return HeckeElement._trusted(self.params, result)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement._trusted(self.params, {w: -p for w, p in self._terms.items()})

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
        return mul(self, other)

    def __rmul__(self, other):
        # f * h with f in A or a scalar: left multiplication is coefficientwise
        if isinstance(other, (int, Fraction, Coefficient)):
            return self.scale(other)
        if isinstance(other, LaurentPoly):
            return self.left_multiply(other)
        return NotImplemented

    def scale(self, value: Union[int, Fraction, Coefficient]) -> "HeckeElement":
        if not value:
            return HeckeElement.zero(self.params)
        return HeckeElement._trusted(self.params, {w: p.scale(value) for w, p in self._terms.items()})

    def left_multiply(self, f: LaurentPoly) -> "HeckeElement":
        """f * self for f in A."""
        result: Terms = {}
        for w, p in self._terms.items():
            _accumulate(result, w, f * p)
        return HeckeElement._trusted(self.params, result)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = HeckeElement.one(self.params)
        for _ in range(k):
            result = mul(result, self)
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction, Coefficient, LaurentPoly)):
            other = self._coerce(other)
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.params == other.params and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.params, frozenset(self._terms.items())))

    # ----- rendering -----

    def to_text(self) -> str:
        rendered = []
        for w, poly in self.items():
            word = w.to_text()
            if w.is_identity:
                rendered.append(poly.to_text())
            elif poly == 1:
                rendered.append(word)
            elif poly == -1:
                rendered.append("-" + word)
            elif poly.is_monomial:
                rendered.append(f"{poly.to_text()}*{word}")
            else:
                rendered.append(f"({poly.to_text()})*{word}")
        return join_signed_terms(rendered)

    def to_dict(self) -> dict:
        return {
            "params": self.params.to_dict(),
            "terms": [
                {"word": list(w.reduced_word()), "coefficient": poly.to_text()}
                for w, poly in self.items()
            ],
        }

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"HeckeElement({self.params}, {self.to_text()!r})"


def _accumulate(terms: Terms, w: SignedPermutation, poly: LaurentPoly) -> None:
    total = terms[w] + poly if w in terms else poly
    if total:
        terms[w] = total
    else:
        terms.pop(w, None)


class _Multiplier:
    """Rewriting engine for one parameter set.

    Caches T_i T_w in the T-basis and the element T_0.
    """

    def __init__(self, params: HeckeParams):
        self.params = params
        self._basis_products: Dict[Tuple[int, SignedPermutation], Dict[SignedPermutation, Coefficient]] = {}
        self._simple = {i: SignedPermutation.simple(params.n, i) for i in params.finite_indices}
        consts = params.constants
        self._qt_minus_one = consts.qt - 1
        n = params.n
        if params.is_type_c:
            self._end_factor = (
                LaurentPoly.constant(n, consts.b) + LaurentPoly.variable(n, n, -1).scale(consts.c)
            )
        self._t0: Optional[HeckeElement] = None

    def basis_product(self, i: int, w: SignedPermutation) -> Dict[SignedPermutation, Coefficient]:
        key = (i, w)
        cached = self._basis_products.get(key)
        if cached is not None:
            return cached
        sw = self._simple[i] * w
        if sw.length() > w.length():
            product = {sw: ONE}
        else:
            q_i = self.params.quadratic_parameter(i)
            product = {sw: q_i}
            if q_i != 1:
                product[w] = q_i - 1
        self._basis_products[key] = product
        return product

    def correction(self, i: int, f: LaurentPoly) -> LaurentPoly:
        """T_i f - f^{s_i} T_i, which lies in A."""
        if i < self.params.n:
            if not self._qt_minus_one:
                return LaurentPoly.zero(f.n)
            return divided_diff_A(f, i).scale(self._qt_minus_one)
        return self._end_factor * divided_diff_C(f)

    def twist(self, i: int, f: LaurentPoly) -> LaurentPoly:
        return f.swap(i) if i < self.params.n else f.invert_last()

    def left_generator(self, i: int, terms: Terms) -> Terms:
        """T_i * (sum_w p_w T_w)."""
        result: Terms = {}
        for w, poly in terms.items():
            twisted = self.twist(i, poly)
            for target, coeff in self.basis_product(i, w).items():
                _accumulate(result, target, twisted.scale(coeff))
            correction = self.correction(i, poly)
            if correction:
                _accumulate(result, w, correction)
        return result

    def multiply(self, a: HeckeElement, b: HeckeElement) -> HeckeElement:
        result: Terms = {}
        for u, p in a._terms.items():
            current = b._terms
            for i in reversed(u.reduced_word()):
                current = self.left_generator(i, current)
            for w, poly in current.items():
                _accumulate(result, w, p * poly)
        return HeckeElement._trusted(self.params, result)

    def t0(self) -> HeckeElement:
        if self._t0 is None:
            params = self.params
            n = params.n
            word = list(range(1, n)) + [n] + list(range(n - 1, 0, -1))
            product = HeckeElement.one(params)
            for i in word:
                product = self.multiply(product, gen_inverse(params, i))
            prefactor = LaurentPoly.variable(n, 1).scale(Coefficient.v_pow(params.t0_v_exponent))
            self._t0 = product.left_multiply(prefactor)
            logger.debug(f"T0 expanded for {params}: {len(self._t0)} basis terms")
        return self._t0


@lru_cache(maxsize=64)
def _multiplier(params: HeckeParams) -> _Multiplier:
    logger.debug(f"Hecke multiplier initialized: {params}")
    return _Multiplier(params)


# ----- operations -----

def gen(params: HeckeParams, i: int) -> HeckeElement:
    """The generator T_i; T_0 is the computed element of t0_element."""
    params.check_index(i)
    if i == 0:
        return t0_element(params)
    return HeckeElement.basis(params, SignedPermutation.simple(params.n, i))


def mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    """Product in the Bernstein presentation."""
    if a.params != b.params:
        raise ParameterError(ERROR_PARAMS_MISMATCH.format(left=a.params, right=b.params))
    return _multiplier(a.params).multiply(a, b)


def gen_inverse(params: HeckeParams, i: int) -> HeckeElement:
    """T_i^-1 = q_i^-1 (T_i - (q_i - 1)), from the quadratic relation."""
    params.check_index(i)
    q_i = params.quadratic_parameter(i)
    return (gen(params, i) - (q_i - 1)).scale(q_i.inverse())


def t0_element(params: HeckeParams) -> HeckeElement:
    """T_0 expanded in the basis {f T_w}."""
    if not params.is_type_c:
        raise ParameterError(f"T0 is only defined in case C, got {params}")
    return _multiplier(params).t0()


def product(elements: Iterable[HeckeElement]) -> HeckeElement:
    elements = list(elements)
    if not elements:
        raise ValueError("empty product")
    result = elements[0]
    for element in elements[1:]:
        result = mul(result, element)
    return result


def _diagram_edges(params: HeckeParams) -> Dict[Tuple[int, int], int]:
    """Coxeter diagram: (i, j) -> braid length m_ij for adjacent nodes."""
    n = params.n
    edges: Dict[Tuple[int, int], int] = {}
    for i in range(1, n - 1):
        edges[(i, i + 1)] = 3
    if params.is_type_c and n >= 2:
        edges[(n - 1, n)] = 4
        edges[(0, 1)] = 4
    if params.is_type_c and n == 1:
        # T_0 and T_1 generate an infinite dihedral group
        edges[(0, 1)] = 0
    return edges


def _check(name: str, kind: RelationKind, lhs: HeckeElement, rhs: HeckeElement) -> RelationCheck:
    difference = lhs - rhs
    passed = difference.is_zero
    log_relation_event(name, passed)
    if passed:
        return RelationCheck(name, kind, RelationStatus.PASS)
    return RelationCheck(name, kind, RelationStatus.FAIL, difference.to_text())


def verify_relations(params: HeckeParams) -> RelationReport:
    """Check the quadratic, braid, commutation and inverse relations exactly."""
    logger.info(f"verify_relations started: {params}")
    generators = {i: gen(params, i) for i in params.generator_indices}
    one = HeckeElement.one(params)
    checks: List[RelationCheck] = []

    # Step 1: quadratic relations
    for i, T in generators.items():
        q_i = params.quadratic_parameter(i)
        checks.append(
            _check(f"quadratic_T{i}", RelationKind.QUADRATIC, mul(T + 1, T - q_i), HeckeElement.zero(params))
        )

    # Step 2: braid and commutation relations
    edges = _diagram_edges(params)
    indices = sorted(generators)
    for a_pos, i in enumerate(indices):
        for j in indices[a_pos + 1:]:
            m = edges.get((i, j))
            if m == 0:
                continue
            Ti, Tj = generators[i], generators[j]
            if m is None:
                checks.append(
                    _check(f"commute_T{i}_T{j}", RelationKind.COMMUTATION, mul(Ti, Tj), mul(Tj, Ti))
                )
                continue
            lhs = product([Ti, Tj] * (m // 2) + [Ti] * (m % 2))
            rhs = product([Tj, Ti] * (m // 2) + [Tj] * (m % 2))
            checks.append(_check(f"braid_T{i}_T{j}", RelationKind.BRAID, lhs, rhs))

    # Step 3: inverses
    for i, T in generators.items():
        checks.append(_check(f"inverse_T{i}", RelationKind.INVERSE, mul(T, gen_inverse(params, i)), one))

    notes: List[str] = []
    if params.is_type_c:
        notes.append(f"T0 prefactor v^{params.t0_v_exponent} ({params.t0_exponent.value} spelling)")
    report = RelationReport(
        params=params.to_dict(),
        t0_exponent=params.t0_exponent.value,
        checks=checks,
        notes=notes,
    )
    if not report.all_passed:
        failed = ", ".join(check.name for check in report.failures)
        report.notes.append(f"failing relations: {failed}")
        logger.warning(f"verify_relations: {len(report.failures)} relation(s) failed for {params}")
    else:
        logger.info(f"verify_relations: all {len(checks)} relations hold for {params}")
    return report


__all__ = [
    "HeckeParams",
    "HeckeElement",
    "gen",
    "mul",
    "gen_inverse",
    "t0_element",
    "product",
    "verify_relations",
]
