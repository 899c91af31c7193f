"""H-module structures on the Laurent algebra A.

Every structure considered here is free of rank one over A with generator
1. It is fixed by the scalar lambda_A of T_1..T_{n-1} on 1 and, in case C,
by the element h = T_n . 1 of A; then

    T_i . f = lambda_A f^{s_i} + (q^t - 1) dA_i(f)          (i < n)
    T_n . f = f^v h + (b + c X_n^-1) dC(f)

and T_0 acts through its expansion in the basis {p T_w}.
"""

import random
from itertools import product as cartesian
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..algebra.coeffring import Coefficient
from ..algebra.heckealg import HeckeElement, HeckeParams, mul, t0_element
from ..algebra.laurent import LaurentPoly, divided_diff_A, divided_diff_C, is_W_invariant
from ..algebra.weyl import SignedPermutation
from ..constants import (
    DEFAULT_CENTER_DEGREE,
    DEFAULT_CENTER_PANEL_SIZE,
    DEFAULT_SEED,
    ERROR_NOT_A_SOLUTION,
    FamilyKind,
    Subalgebra,
)
from ..errors import IdentificationError, NotASolutionError, ParameterError
from ..infrastructure.logger import logger
from ..schemas.classification_report import ClassificationReport
from ..schemas.one_dim_rep import OneDimRep
from ..schemas.solution_family import SolutionFamily
from .starsolver import check_star, identify_family


def finite_action(params: HeckeParams, lambda_A: Coefficient, i: int, f: LaurentPoly) -> LaurentPoly:
    """T_i . f for 1 <= i < n; needs only lambda_A."""
    return f.swap(i).scale(lambda_A) + divided_diff_A(f, i).scale(params.constants.qt - 1)


class PolynomialModule:
    """Rank-one H-module on A given by lambda_A and the T_n symbol h."""

    def __init__(self, params: HeckeParams, lambda_A: Coefficient, symbol: Optional[LaurentPoly] = None):
        """Initialize module.

        Args:
            params: Hecke parameters
            lambda_A: Scalar of T_1..T_{n-1} on the generator 1
            symbol: T_n . 1 as an element of A (case C only)
        """
        if params.is_type_c and symbol is None:
            raise ParameterError("case C modules need the T_n symbol")
        if not params.is_type_c and symbol is not None:
            raise ParameterError("case A modules have no T_n")
        if symbol is not None and symbol.n != params.n:
            raise ParameterError(f"T_n symbol {symbol} is not a polynomial in {params.n} variables")
        self.params = params
        self.lambda_A = lambda_A
        self.symbol = symbol
        consts = params.constants
        n = params.n
        if params.is_type_c:
            self._end_factor = LaurentPoly.constant(n, consts.b) + LaurentPoly.variable(n, n, -1).scale(consts.c)
        self._basis_images: Dict[SignedPermutation, LaurentPoly] = {}
        logger.debug(f"Polynomial module initialized: {params}, lambda_A={lambda_A}, symbol={symbol}")

    # ----- action -----

    def act_gen(self, i: int, f: LaurentPoly) -> LaurentPoly:
        """T_i . f for a generator index i."""
        self.params.check_index(i)
        n = self.params.n
        if i == 0:
            return self.act_element(t0_element(self.params), f)
        if i < n:
            return finite_action(self.params, self.lambda_A, i, f)
        return f.invert_last() * self.symbol + self._end_factor * divided_diff_C(f)

    def basis_image(self, w: SignedPermutation) -> LaurentPoly:
        """T_w . 1, applying the reduced word from the right."""
        image = self._basis_images.get(w)
        if image is None:
            image = LaurentPoly.one(self.params.n)
            for i in reversed(w.reduced_word()):
                image = self.act_gen(i, image)
            self._basis_images[w] = image
        return image

    def act_element(self, h: HeckeElement, f: LaurentPoly) -> LaurentPoly:
        """h . f: expand h f = sum_w p_w T_w in H, then sum_w p_w (T_w . 1)."""
        if h.params != self.params:
            raise ParameterError(f"element of {h.params} cannot act on a module over {self.params}")
        expanded = mul(h, HeckeElement.from_poly(self.params, f))
        total = LaurentPoly.zero(self.params.n)
        for w, p in expanded.terms.items():
            total = total + p * self.basis_image(w)
        return total

    def __repr__(self) -> str:
        return f"PolynomialModule({self.params}, lambda_A={self.lambda_A}, symbol={self.symbol})"


def end_symbol(params: HeckeParams, sign: int) -> LaurentPoly:
    """b + v^{r+s} X_n^-1 (sign +1) or b - v^{r-s} X_n^-1 (sign -1)."""
    consts = params.constants
    n = params.n
    half = consts.half_rs_plus if sign > 0 else -consts.half_rs_minus
    return LaurentPoly.constant(n, consts.b) + LaurentPoly.variable(n, n, -1).scale(half)


def solve_end_symbol(params: HeckeParams, lambda_A: Coefficient, lambda_end: Coefficient) -> LaurentPoly:
    """The T_n symbol h for which T_0 . 1 = lambda_end . 1.

    Unwinds T_0 = v^e X_1 T_1^-1 .. T_{n-1}^-1 T_n^-1 T_{n-1}^-1 .. T_1^-1 on 1:
    u = T_n^-1 . 1 equals T_{n-1} .. T_1 . (lambda_end v^-e lambda_A^{n-1} X_1^-1),
    and T_n . u = 1 then fixes h = (1 - (b + c X_n^-1) dC(u)) / u^v.

    Raises:
        NotInvertibleError: u^v is not a unit of A
    """
    consts = params.constants
    n = params.n
    scalar = lambda_end * Coefficient.v_pow(-params.t0_v_exponent) * lambda_A ** (n - 1)
    u = LaurentPoly.variable(n, 1, -1).scale(scalar)
    for i in range(1, n):
        u = finite_action(params, lambda_A, i, u)
    end_factor = LaurentPoly.constant(n, consts.b) + LaurentPoly.variable(n, n, -1).scale(consts.c)
    numerator = LaurentPoly.one(n) - end_factor * divided_diff_C(u)
    return numerator * u.invert_last().inverse()


class InducedModule(PolynomialModule):
    """H (x)_{H'} epsilon realized on A with a (x) 1 <-> a."""

    def __init__(self, params: HeckeParams, rep: OneDimRep):
        self.rep = rep
        lambda_A = rep.lambda_A if rep.lambda_A is not None else params.constants.qt
        if rep.subalgebra == Subalgebra.H_SN:
            if params.is_type_c:
                raise ParameterError("H_Sn-induced modules belong to case A")
            symbol = None
        elif not params.is_type_c:
            raise ParameterError(f"{rep.subalgebra.value}-induced modules belong to case C")
        elif rep.subalgebra == Subalgebra.H0:
            symbol = LaurentPoly.constant(params.n, rep.lambda_end)
        else:
            if rep.lambda_end not in (params.constants.qs, Coefficient.constant(-1)):
                raise ParameterError(f"T_0 scalar {rep.lambda_end} is not a root of (x + 1)(x - q^s)")
            symbol = solve_end_symbol(params, lambda_A, rep.lambda_end)
        super().__init__(params, lambda_A, symbol)
        if rep.subalgebra == Subalgebra.HN:
            one = LaurentPoly.one(params.n)
            if self.act_gen(0, one) != one.scale(rep.lambda_end):
                raise IdentificationError(f"T_0 does not act by {rep.lambda_end} on 1 with T_n symbol {symbol}")


# ========== Eigenvectors ==========

def eigencheck(module: PolynomialModule, g: LaurentPoly, gens: Iterable[int]) -> Optional[Dict[int, Coefficient]]:
    """Scalars of the listed generators if g is a common eigenvector, else None.

    Raises:
        ParameterError: g is zero
    """
    if not g:
        raise ParameterError("eigencheck needs a nonzero vector")
    exps, lead = next(g.items())
    table: Dict[int, Coefficient] = {}
    for i in gens:
        image = module.act_gen(i, g)
        scalar = image.coefficient(exps).exact_div(lead)
        if scalar is None or image != g.scale(scalar):
            return None
        table[i] = scalar
    return table


def _shift_for(fam: SolutionFamily) -> int:
    if fam.is_constant:
        return 0
    if fam.kind in (FamilyKind.FAM_I, FamilyKind.FAM_II, FamilyKind.FAM_III):
        return -fam.d
    if fam.kind == FamilyKind.FAM_IV:
        return fam.d + 1
    return fam.d


def _generator_name(i: int) -> str:
    return f"T{i}"


def classify(f: LaurentPoly, params: HeckeParams, lambda_A: Optional[Coefficient] = None) -> ClassificationReport:
    """H-structure on A with T_n . 1 = f(X_n) and T_i . 1 = lambda_A.

    Raises:
        NotASolutionError: f does not satisfy (*)
        IdentificationError: no normalization of the generator is a common eigenvector
    """
    if not params.is_type_c:
        raise ParameterError("classify needs case C parameters")
    if not check_star(f, params):
        raise NotASolutionError(ERROR_NOT_A_SOLUTION.format(poly=f.to_text(), params=params))
    consts = params.constants
    n = params.n
    if lambda_A is None:
        lambda_A = consts.qt
    if lambda_A not in (consts.qt, Coefficient.constant(-1)):
        raise ParameterError(f"lambda_A must be q^t or -1, got {lambda_A}")

    logger.debug(f"Step 1: identifying {f.to_text()}")
    fam = identify_family(f, params)

    logger.debug(f"Step 2: module with T_n symbol {f.to_text()} and lambda_A={lambda_A}")
    module = PolynomialModule(params, lambda_A, f.lift(n, n))
    shift = _shift_for(fam)
    g1 = LaurentPoly.monomial(n, (shift,) * n)
    rep_lambda = lambda_A if n > 1 else None

    logger.debug(f"Step 3: eigencheck of g1={g1.to_text()}")
    notes: List[str] = []
    mu = None
    table = eigencheck(module, g1, params.finite_indices)
    if table is not None:
        rep = OneDimRep(Subalgebra.H0, rep_lambda, table[n])
        if fam.kind == FamilyKind.FAM_I:
            notes.append("T_n eigenvalue on g1 is q^r, not q^t: q^t is no root of the T_n quadratic unless r = t")
    else:
        table = eigencheck(module, g1, (0,) + tuple(range(1, n)))
        if table is None:
            raise IdentificationError(f"g1={g1.to_text()} is not a common eigenvector for {fam.label}")
        mu = table[0]
        rep = OneDimRep(Subalgebra.HN, rep_lambda, mu)
        notes.append(f"T_n acts on g1 by {_end_action_text(module, g1)}")

    logger.info(f"classify: {fam.label} -> {rep.label}, shift {shift}")
    return ClassificationReport(
        polynomial=f.to_text(),
        family=fam.label,
        params=params.to_dict(),
        rep=rep,
        shift=shift,
        g1=g1.to_text(),
        eigenvalues={_generator_name(i): scalar.to_text() for i, scalar in sorted(table.items())},
        mu=None if mu is None else mu.to_text(),
        notes=notes,
    )


def _end_action_text(module: PolynomialModule, g: LaurentPoly) -> str:
    """Text of T_n . g / g, which lies in A for the monomials used here."""
    image = module.act_gen(module.params.n, g)
    return (image * g.inverse()).to_text()


def verify_T0_lemma(params: HeckeParams, lambda_A: Coefficient, sign: int) -> Coefficient:
    """T_0 eigenvalue on 1 when T_n . 1 = (b +- v^{r+-s} X_n^-1) and T_i . 1 = lambda_A.

    Raises:
        IdentificationError: 1 is not a T_0 eigenvector, or the eigenvalue is
            not a root of (x + 1)(x - q^s)
    """
    if not params.is_type_c:
        raise ParameterError("the T_0 lemma concerns case C")
    if sign not in (1, -1):
        raise ParameterError(f"sign must be +1 or -1, got {sign}")
    module = PolynomialModule(params, lambda_A, end_symbol(params, sign))
    table = eigencheck(module, LaurentPoly.one(params.n), (0,))
    if table is None:
        raise IdentificationError("1 is not an eigenvector of T_0")
    mu = table[0]
    if mu not in (params.constants.qs, Coefficient.constant(-1)):
        raise IdentificationError(f"T_0 eigenvalue {mu} is not a root of (x + 1)(x - q^s)")
    logger.info(f"T0 lemma: sign={sign:+d}, lambda_A={lambda_A} -> mu={mu}")
    return mu


# ========== Center ==========

def monomial_panel(n: int, degree: int) -> List[LaurentPoly]:
    """Monomials X^e with |e_1| + ... + |e_n| <= degree."""
    panel = []
    for exps in cartesian(range(-degree, degree + 1), repeat=n):
        if sum(abs(a) for a in exps) <= degree:
            panel.append(LaurentPoly.monomial(n, exps))
    return panel


def center_check(
    module: PolynomialModule,
    f: LaurentPoly,
    degree: int = DEFAULT_CENTER_DEGREE,
    include_affine: bool = False,
) -> bool:
    """Whether multiplication by f commutes with the generators on the monomial panel."""
    params = module.params
    gens = [i for i in params.generator_indices if include_affine or i != 0]
    for m in monomial_panel(params.n, degree):
        fm = f * m
        for i in gens:
            if module.act_gen(i, fm) != f * module.act_gen(i, m):
                return False
    return True


def _orbit_sum(exps: Tuple[int, ...], signed: bool) -> LaurentPoly:
    n = len(exps)
    images = {w.act_on_exponents(exps) for w in SignedPermutation.all_elements(n, signed)}
    return LaurentPoly(n, {image: 1 for image in images})


def center_panel(
    n: int,
    size: int = DEFAULT_CENTER_PANEL_SIZE,
    degree: int = DEFAULT_CENTER_DEGREE,
    seed: int = DEFAULT_SEED,
    signed: bool = True,
) -> List[LaurentPoly]:
    """Seeded mix of invariant, nearly invariant and arbitrary polynomials."""
    rng = random.Random(seed)

    def random_exps() -> Tuple[int, ...]:
        while True:
            exps = tuple(rng.randint(-degree, degree) for _ in range(n))
            if sum(abs(a) for a in exps) <= degree:
                return exps

    panel: List[LaurentPoly] = []
    for index in range(size):
        kind = index % 4
        if kind in (0, 1):
            f = LaurentPoly.constant(n, rng.randint(-2, 2))
            for _ in range(rng.randint(1, 2)):
                f = f + _orbit_sum(random_exps(), signed).scale(Coefficient.constant(rng.randint(1, 3)))
        elif kind == 2:
            f = _orbit_sum(random_exps(), signed) + LaurentPoly.monomial(n, random_exps(), rng.choice((-1, 1)))
        else:
            f = LaurentPoly.zero(n)
            for _ in range(rng.randint(1, 3)):
                f = f + LaurentPoly.monomial(n, random_exps(), rng.randint(-3, 3))
        panel.append(f)
    return panel


def center_duality(
    module: PolynomialModule,
    panel: Sequence[LaurentPoly],
    degree: int = DEFAULT_CENTER_DEGREE,
) -> List[Tuple[LaurentPoly, bool, bool]]:
    """(f, center_check, is_W_invariant) for each f in the panel."""
    signed = module.params.is_type_c
    return [(f, center_check(module, f, degree), is_W_invariant(f, signed)) for f in panel]


def gg_type_module(params: HeckeParams) -> InducedModule:
    """The module with lambda_A = q^t and T_n scalar q^r (H_Sn with q^t in case A)."""
    consts = params.constants
    lambda_A = consts.qt if params.n > 1 else None
    if params.is_type_c:
        return InducedModule(params, OneDimRep(Subalgebra.H0, lambda_A, consts.qr))
    return InducedModule(params, OneDimRep(Subalgebra.H_SN, consts.qt))


__all__ = [
    "PolynomialModule",
    "InducedModule",
    "end_symbol",
    "solve_end_symbol",
    "finite_action",
    "eigencheck",
    "classify",
    "verify_T0_lemma",
    "monomial_panel",
    "center_check",
    "center_panel",
    "center_duality",
    "gg_type_module",
]
