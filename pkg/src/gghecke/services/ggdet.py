"""Gelfand-Graev determination by scalar evaluation.

On the generic modules pi and pi^- the commutative algebra A acts through a
character chi, the finite generators act by the values of their normalized
intertwining operators at chi, and T_0 acts through its word
v^e X_1 T_1^-1 ... T_n^-1 ... T_1^-1. Comparing the tables on pi and pi^-
identifies the Gelfand-Graev module among the induced one-dimensional modules.
"""

from typing import Dict, List, NamedTuple, Optional

from ..algebra.coeffring import Coefficient
from ..algebra.heckealg import HeckeParams
from ..algebra.laurent import LaurentPoly, eval_character
from ..constants import CaseTag, GGCase, Subalgebra
from ..errors import InconsistentTableError, ParameterError, PoleError
from ..infrastructure.logger import logger
from ..schemas.character import CharacterSpec
from ..schemas.gg_input import GGInput
from ..schemas.gg_report import CaseIIAnnotation, GGReport, ScalarTable
from ..schemas.one_dim_rep import InducedModuleDescriptor, OneDimRep


class GenericCharacters(NamedTuple):
    chi_pi: CharacterSpec
    chi_pi_minus: Optional[CharacterSpec]


def hecke_params(inp: GGInput) -> HeckeParams:
    if inp.case_tag == GGCase.I:
        return HeckeParams(CaseTag.A, inp.n, inp.t)
    return HeckeParams(CaseTag.C, inp.n, inp.t, inp.r, inp.s)


def generic_characters(inp: GGInput) -> GenericCharacters:
    """Characters of A on pi and pi^-.

    Case I uses X_i -> v^{t(n+1-2i)}, one choice with ratio q^t between
    consecutive variables; only the ratio enters the tables.
    """
    n, t = inp.n, inp.t
    if inp.case_tag == GGCase.I:
        exponents = tuple(t * (n + 1 - 2 * i) for i in range(1, n + 1))
        return GenericCharacters(CharacterSpec((1,) * n, exponents), None)

    def character_at(point, sign: int) -> CharacterSpec:
        exponents = []
        for i in range(1, n + 1):
            m = 2 * t * (point + n - i)
            if m.denominator != 1:
                raise ParameterError(f"v-exponent {m} of X{i} is not an integer")
            exponents.append(int(m))
        return CharacterSpec((sign,) * n, tuple(exponents))

    return GenericCharacters(character_at(inp.alpha, 1), character_at(inp.beta, -1))


def _ratio(n: int, i: int) -> LaurentPoly:
    exps = [0] * n
    exps[i - 1], exps[i] = 1, -1
    return LaurentPoly.monomial(n, tuple(exps))


def _quotient(numerator: Coefficient, denominator: Coefficient, what: str) -> Coefficient:
    if not denominator:
        raise PoleError(f"{what}: the character sits on a pole of the formula")
    value = numerator.exact_div(denominator)
    if value is None:
        raise InconsistentTableError(f"{what}: {numerator} / {denominator} is not a Laurent polynomial in v")
    return value


def _t0_scalar(params: HeckeParams, chi: CharacterSpec, table: ScalarTable) -> Coefficient:
    """v^e chi(X_1) tau_1^-2 ... tau_{n-1}^-2 tau_n^-1."""
    n = params.n
    value = Coefficient.v_pow(params.t0_v_exponent) * eval_character(LaurentPoly.variable(n, 1), chi)
    for i in range(1, n):
        value = value * table[i] ** -2
    return value * table[n] ** -1


def scalar_table(inp: GGInput, chi: CharacterSpec) -> ScalarTable:
    """Generator index -> scalar on the generic module with character chi.

    Raises:
        PoleError: chi(X_i/X_{i+1}) = 1, or chi(X_n)^2 = 1 in case III
    """
    params = hecke_params(inp)
    consts = params.constants
    n = inp.n
    table: ScalarTable = {}

    for i in range(1, n):
        x = eval_character(_ratio(n, i), chi)
        table[i] = _quotient((consts.qt - 1) * x, x - 1, f"T{i}")

    if inp.case_tag == GGCase.I:
        return table

    if inp.case_tag == GGCase.II:
        table[n] = Coefficient.constant(1)
    else:
        y = eval_character(LaurentPoly.variable(n, n), chi)
        q_alpha = Coefficient.v_pow(int(2 * inp.t * inp.alpha))
        q_beta = Coefficient.v_pow(int(2 * inp.t * inp.beta))
        table[n] = _quotient(y * (consts.b * y - q_beta + q_alpha), y * y - 1, f"T{n}")

    table[0] = _t0_scalar(params, chi, table)
    return table


def _check_roots(params: HeckeParams, table: ScalarTable, label: str) -> None:
    for i, value in table.items():
        q_i = params.quadratic_parameter(i)
        if (value + 1) * (value - q_i):
            raise InconsistentTableError(f"{label}: T{i} -> {value} is not a root of (x + 1)(x - {q_i})")


def _common_lambda(params: HeckeParams, table: ScalarTable) -> Optional[Coefficient]:
    values = {table[i] for i in range(1, params.n)}
    if len(values) > 1:
        raise InconsistentTableError(f"T_1..T_(n-1) act by different scalars: {sorted(map(str, values))}")
    return values.pop() if values else None


def decide(params: HeckeParams, table_pi: ScalarTable, table_pi_minus: Optional[ScalarTable]) -> InducedModuleDescriptor:
    """Pick the induced module from the two scalar tables.

    Raises:
        InconsistentTableError: the tables fit neither H0 nor Hn
    """
    lam = _common_lambda(params, table_pi)
    if not params.is_type_c:
        return InducedModuleDescriptor(OneDimRep(Subalgebra.H_SN, lam if lam is not None else params.constants.qt))

    if table_pi_minus is None:
        raise InconsistentTableError("case C needs tables on both pi and pi^-")
    if _common_lambda(params, table_pi_minus) != lam:
        raise InconsistentTableError("T_i scalars differ between pi and pi^-")

    n = params.n
    t0_differs = table_pi[0] != table_pi_minus[0]
    tn_differs = table_pi[n] != table_pi_minus[n]
    if t0_differs and not tn_differs:
        return InducedModuleDescriptor(OneDimRep(Subalgebra.H0, lam, table_pi[n]))
    if tn_differs and not t0_differs:
        return InducedModuleDescriptor(OneDimRep(Subalgebra.HN, lam, table_pi[0]))
    raise InconsistentTableError(
        f"T0 and T{n} must separate pi from pi^- exactly once (T0 differs: {t0_differs}, T{n} differs: {tn_differs})"
    )


def case_ii_annotation(inp: GGInput) -> List[CaseIIAnnotation]:
    """Decision for T_n' = (-1)^e X_n^f T_n over e and the parity of f."""
    if inp.case_tag != GGCase.II:
        raise ParameterError("the T_n renormalization table applies to case II only")
    params = hecke_params(inp)
    chars = generic_characters(inp)
    n = inp.n
    base_pi = scalar_table(inp, chars.chi_pi)
    base_minus = scalar_table(inp, chars.chi_pi_minus)

    annotations = []
    for e in (0, 1):
        for f_parity in (0, 1):
            tables: Dict[str, ScalarTable] = {}
            for name, chi, base in (("pi", chars.chi_pi, base_pi), ("pi_minus", chars.chi_pi_minus, base_minus)):
                table = {i: base[i] for i in range(1, n)}
                x_power = eval_character(LaurentPoly.variable(n, n, f_parity), chi)
                table[n] = x_power * (-1) ** e * base[n]
                table[0] = _t0_scalar(params, chi, table)
                tables[name] = table
            annotations.append(
                CaseIIAnnotation(
                    e=e,
                    f_parity=f_parity,
                    table_pi=tables["pi"],
                    table_pi_minus=tables["pi_minus"],
                    decision=decide(params, tables["pi"], tables["pi_minus"]),
                )
            )
    return annotations


def determine(inp: GGInput, annotate: bool = False) -> GGReport:
    """Identify the Gelfand-Graev module for one input."""
    params = hecke_params(inp)
    logger.info(f"GG determination started: {inp.to_dict()}")

    logger.debug("Step 1: generic characters")
    chars = generic_characters(inp)

    logger.debug("Step 2: scalar tables")
    table_pi = scalar_table(inp, chars.chi_pi)
    _check_roots(params, table_pi, "pi")
    table_minus = None
    if chars.chi_pi_minus is not None:
        table_minus = scalar_table(inp, chars.chi_pi_minus)
        _check_roots(params, table_minus, "pi^-")

    logger.debug("Step 3: decision")
    decision = decide(params, table_pi, table_minus)

    notes: List[str] = []
    if inp.case_tag == GGCase.I:
        notes.append("absolute exponents of chi(X_i) are presentation-dependent; only the ratio q^t is used")
    if inp.case_tag == GGCase.II:
        notes.append("T_n acts by 1 on pi and pi^- under the chosen normalization (e = 0, f = 0)")
    annotations = case_ii_annotation(inp) if annotate and inp.case_tag == GGCase.II else []

    logger.info(f"GG determination: {decision.notation}")
    return GGReport(
        gg_input=inp,
        chi_pi=chars.chi_pi,
        table_pi=table_pi,
        decision=decision,
        chi_pi_minus=chars.chi_pi_minus,
        table_pi_minus=table_minus,
        annotations=annotations,
        notes=notes,
    )


__all__ = [
    "GenericCharacters",
    "hecke_params",
    "generic_characters",
    "scalar_table",
    "decide",
    "case_ii_annotation",
    "determine",
]
