"""Solver for the functional equation (*).

    (X^2 - 1) f f^v = b (X^2 f^v - f) - c (X f - X f^v) + q^r (X^2 - 1)

for one-variable Laurent polynomials f with coefficients in Q[v^+-].

Two independent routes are provided: the closed-form catalogue
(``family_poly``) and a coefficient-propagation oracle
(``enumerate_solutions``) that treats the coefficients of f as unknowns and
compares coefficients of (*) from the top degree down.
"""

from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from ..algebra.coeffring import ONE, ZERO, Coefficient, ParamConstants
from ..algebra.heckealg import HeckeParams
from ..algebra.laurent import LaurentPoly, build_R_d
from ..constants import DEFAULT_WINDOW_LIMIT, ERROR_WINDOW_LIMIT, FamilyKind
from ..errors import IdentificationError, ParameterError
from ..infrastructure.logger import log_solver_event, logger
from ..schemas.solution_family import SolutionFamily
from ..schemas.solver_report import SolutionEntry, SolverReport, VariantEvidence

ParamsLike = Union[HeckeParams, ParamConstants]

# A quadratic form in the unknown coefficients: () -> constant,
# (j,) -> coefficient of a_j, (j, k) with j <= k -> coefficient of a_j a_k.
QuadraticForm = Dict[Tuple[int, ...], Coefficient]


def _constants(params: ParamsLike) -> ParamConstants:
    return params.constants if isinstance(params, HeckeParams) else params


def _x_power(d: int) -> LaurentPoly:
    return LaurentPoly.univariate({d: ONE})


# ========== Catalogue ==========

def _tail(consts: ParamConstants, degrees: Sequence[int], negate: bool) -> Dict[int, Coefficient]:
    """b on even degrees, c on odd ones."""
    tail = {}
    for deg in degrees:
        value = consts.b if deg % 2 == 0 else consts.c
        tail[deg] = -value if negate else value
    return tail


def family_poly(fam: SolutionFamily, params: ParamsLike) -> LaurentPoly:
    """Closed form of a catalogue entry as a polynomial in X."""
    consts = _constants(params)
    d = fam.d
    kind = fam.kind
    if kind == FamilyKind.CONST_MINUS_ONE:
        return LaurentPoly.univariate({0: -1})
    if kind == FamilyKind.CONST_QR:
        return LaurentPoly.univariate({0: consts.qr})

    half = consts.half_rs_plus if fam.sign > 0 else consts.half_rs_minus
    if kind in (FamilyKind.FAM_I, FamilyKind.FAM_II):
        coefficients = _tail(consts, range(0, -2 * d, -1), negate=False)
        coefficients[-2 * d] = consts.qr if kind == FamilyKind.FAM_I else Coefficient.constant(-1)
    elif kind == FamilyKind.FAM_III:
        coefficients = _tail(consts, range(0, -2 * d - 1, -1), negate=False)
        coefficients[-2 * d - 1] = half if fam.sign > 0 else -half
    elif kind == FamilyKind.FAM_IV:
        coefficients = _tail(consts, range(1, 2 * d + 1), negate=True)
        coefficients[2 * d + 1] = -half if fam.sign > 0 else half
    else:
        coefficients = _tail(consts, range(1, 2 * d), negate=True)
        coefficients[2 * d] = -consts.qr if kind == FamilyKind.FAM_V else ONE
    return LaurentPoly.univariate(coefficients)


def catalogue(window: Tuple[int, int], params: Optional[ParamsLike] = None) -> List[SolutionFamily]:
    """Catalogue entries supported in the window.

    Without params the generic support is used; with params the support of
    the actual polynomial (smaller when b or c vanish).
    """
    low, high = window
    candidates = [SolutionFamily(FamilyKind.CONST_MINUS_ONE), SolutionFamily(FamilyKind.CONST_QR)]
    for d in range(0, max(-low, high, 0) + 1):
        if d >= 1:
            candidates += [SolutionFamily(kind, d) for kind in
                           (FamilyKind.FAM_I, FamilyKind.FAM_II, FamilyKind.FAM_V, FamilyKind.FAM_VI)]
        for sign in (1, -1):
            candidates += [SolutionFamily(FamilyKind.FAM_III, d, sign), SolutionFamily(FamilyKind.FAM_IV, d, sign)]

    entries = []
    for fam in candidates:
        if params is None:
            fam_low, fam_high = fam.support
        else:
            fam_low, fam_high = family_poly(fam, params).degree_bounds()
        if low <= fam_low and fam_high <= high:
            entries.append(fam)
    return sorted(entries, key=lambda fam: fam.sort_key())


# ========== Equation (*) ==========

def star_residual(f: LaurentPoly, params: ParamsLike) -> LaurentPoly:
    """LHS - RHS of (*); zero exactly for solutions."""
    if f.n != 1:
        raise ParameterError(f"(*) is an equation in one variable, got a polynomial in {f.n}")
    consts = _constants(params)
    x = _x_power(1)
    x2_minus_1 = _x_power(2) - 1
    f_dual = f.invert_last()
    lhs = x2_minus_1 * f * f_dual
    rhs = (
        (_x_power(2) * f_dual - f).scale(consts.b)
        - (x * f - x * f_dual).scale(consts.c)
        + x2_minus_1.scale(consts.qr)
    )
    return lhs - rhs


def check_star(f: LaurentPoly, params: ParamsLike) -> bool:
    """Whether f satisfies (*) identically."""
    return star_residual(f, params).is_zero


def apply_shift(f: LaurentPoly, d: int, params: ParamsLike) -> LaurentPoly:
    """X^{2d} f - R_d, again a solution whenever f is."""
    consts = _constants(params)
    return _x_power(2 * d) * f - build_R_d(d, consts.b, consts.c)


def identify_family(f: LaurentPoly, params: ParamsLike) -> SolutionFamily:
    """Catalogue entry equal to f, found from its extreme degree.

    Raises:
        IdentificationError: f equals no catalogue entry
    """
    if not f:
        raise IdentificationError("the zero polynomial is not a solution of (*)")
    low, high = f.degree_bounds()
    candidates: List[SolutionFamily] = []
    if low == high == 0:
        candidates = [SolutionFamily(FamilyKind.CONST_MINUS_ONE), SolutionFamily(FamilyKind.CONST_QR)]
    elif high <= 0:
        l = -low
        if l % 2 == 0:
            candidates = [SolutionFamily(FamilyKind.FAM_I, l // 2), SolutionFamily(FamilyKind.FAM_II, l // 2)]
        else:
            candidates = [SolutionFamily(FamilyKind.FAM_III, l // 2, sign) for sign in (1, -1)]
    elif low >= 1:
        k = high
        if k % 2 == 1:
            candidates = [SolutionFamily(FamilyKind.FAM_IV, k // 2, sign) for sign in (1, -1)]
        else:
            candidates = [SolutionFamily(FamilyKind.FAM_V, k // 2), SolutionFamily(FamilyKind.FAM_VI, k // 2)]
    for fam in candidates:
        if family_poly(fam, params) == f:
            return fam
    raise IdentificationError(f"{f.to_text()} matches no catalogued solution of (*)")


def qt_variant_evidence(params: ParamsLike, window: Tuple[int, int]) -> List[VariantEvidence]:
    """Substitute q^t for q^r in the entries that carry it and re-check (*)."""
    consts = _constants(params)
    evidence = []
    for fam in catalogue(window):
        if fam.kind not in (FamilyKind.CONST_QR, FamilyKind.FAM_I):
            continue
        degree = -2 * fam.d
        original = family_poly(fam, consts)
        variant = original + _x_power(degree).scale(consts.qt - consts.qr)
        evidence.append(VariantEvidence(fam.label, variant.to_text(), check_star(variant, consts)))
    return evidence


# ========== Coefficient-propagation oracle ==========

def _form_add(form: QuadraticForm, key: Tuple[int, ...], value: Coefficient) -> None:
    if not value:
        return
    total = form.get(key, ZERO) + value
    if total:
        form[key] = total
    else:
        form.pop(key, None)


def _symbolic_residual(unknowns: Sequence[int], consts: ParamConstants) -> Dict[int, QuadraticForm]:
    """Coefficients of LHS - RHS of (*) for f = sum_j a_j X^j, as quadratic forms."""
    equations: Dict[int, QuadraticForm] = {}

    def add(degree: int, key: Tuple[int, ...], value: Coefficient) -> None:
        _form_add(equations.setdefault(degree, {}), key, value)

    for j in unknowns:
        for k in unknowns:
            key = (min(j, k), max(j, k))
            # (X^2 - 1) a_j a_k X^{j-k}
            add(j - k + 2, key, ONE)
            add(j - k, key, -ONE)
        # - b X^2 f^v + b f + c X f - c X f^v
        add(2 - j, (j,), -consts.b)
        add(j, (j,), consts.b)
        add(j + 1, (j,), consts.c)
        add(1 - j, (j,), -consts.c)
    add(2, (), -consts.qr)
    add(0, (), consts.qr)
    return {deg: form for deg, form in equations.items() if form}


def _substitute(form: QuadraticForm, assignment: Dict[int, Coefficient]) -> QuadraticForm:
    result: QuadraticForm = {}
    for key, value in form.items():
        remaining = []
        for j in key:
            if j in assignment:
                value = value * assignment[j]
            else:
                remaining.append(j)
        _form_add(result, tuple(remaining), value)
    return result


def _variables(form: QuadraticForm) -> set:
    return {j for key in form for j in key}


def _solve_univariate(form: QuadraticForm, x: int) -> List[Coefficient]:
    """Roots in Q[v^+-] of gamma x^2 + alpha x + beta."""
    gamma = form.get((x, x), ZERO)
    alpha = form.get((x,), ZERO)
    beta = form.get((), ZERO)
    if not gamma:
        if not alpha:
            return []
        root = (-beta).exact_div(alpha)
        return [] if root is None else [root]
    disc_root = (alpha * alpha - 4 * gamma * beta).sqrt()
    if disc_root is None:
        return []
    roots = []
    for candidate in (-alpha + disc_root, -alpha - disc_root):
        root = candidate.exact_div(2 * gamma)
        if root is not None and root not in roots:
            roots.append(root)
    return roots


class _ShapeSolver:
    """Depth-first propagation for one shape of unknowns; anchors are the unknowns required nonzero."""

    def __init__(self, unknowns: Sequence[int], anchors: Sequence[int], consts: ParamConstants):
        self.unknowns = list(unknowns)
        self.anchors = frozenset(anchors)
        equations = _symbolic_residual(self.unknowns, consts)
        self.equations = [equations[deg] for deg in sorted(equations, reverse=True)]
        self.solutions: List[Dict[int, Coefficient]] = []

    def run(self) -> List[Dict[int, Coefficient]]:
        self._descend(0, {})
        return self.solutions

    def _branch(self, index: int, assignment: Dict[int, Coefficient], x: int, roots: List[Coefficient]) -> None:
        for root in roots:
            if x in self.anchors and not root:
                continue
            branch = dict(assignment)
            branch[x] = root
            self._descend(index + 1, branch)

    def _factor_anchor(self, form: QuadraticForm, free: set) -> Optional[Tuple[int, int]]:
        """(z, x) when form = z * (alpha x + beta) for an anchor z."""
        if len(free) != 2:
            return None
        for z in sorted(self.anchors & free):
            if all(key.count(z) == 1 for key in form):
                (x,) = free - {z}
                return z, x
        return None

    def _descend(self, index: int, assignment: Dict[int, Coefficient]) -> None:
        while index < len(self.equations):
            form = _substitute(self.equations[index], assignment)
            if not form:
                index += 1
                continue
            free = _variables(form)
            if not free:
                log_solver_event("branch closed by a nonzero constant", anchors=sorted(self.anchors))
                return
            if len(free) == 1:
                (x,) = free
                self._branch(index, assignment, x, _solve_univariate(form, x))
                return
            factored = self._factor_anchor(form, free)
            if factored is not None:
                z, x = factored
                reduced = {tuple(j for j in key if j != z): value for key, value in form.items()}
                self._branch(index, assignment, x, _solve_univariate(reduced, x))
                return
            raise RuntimeError(f"unexpected equation shape in unknowns {sorted(free)}")

        if set(assignment) != set(self.unknowns):
            raise RuntimeError(f"undetermined unknowns {sorted(set(self.unknowns) - set(assignment))}")
        self.solutions.append(assignment)


def _check_window(window: Tuple[int, int], limit: int) -> Tuple[int, int]:
    low, high = int(window[0]), int(window[1])
    if low > high or max(abs(low), abs(high)) > limit:
        raise ParameterError(ERROR_WINDOW_LIMIT.format(mindeg=low, maxdeg=high, limit=limit))
    return low, high


def _shapes(window: Tuple[int, int]) -> Iterator[Tuple[int, int]]:
    """Every (mindeg, maxdeg) with mindeg <= 0 <= maxdeg reachable from the window."""
    low, high = window
    for l in range(0, max(0, -low) + 1):
        for k in range(0, max(0, high) + 1):
            yield -l, k


def solve_shape(params: ParamsLike, mindeg: int, maxdeg: int) -> List[Dict[int, Coefficient]]:
    """Coefficient assignments {j: a_j} solving (*) with unknowns a_mindeg..a_maxdeg.

    The end coefficients a_mindeg (if mindeg < 0) and a_maxdeg (if maxdeg > 0)
    are required nonzero; a_0 is a free unknown unless it is the only one.
    """
    if mindeg > 0 or maxdeg < 0:
        raise ParameterError(f"shape [{mindeg}, {maxdeg}] must contain degree 0")
    anchors = [deg for deg in (mindeg, maxdeg) if deg != 0] or [0]
    return _ShapeSolver(range(mindeg, maxdeg + 1), anchors, _constants(params)).run()


def excluded_shape_count(window: Tuple[int, int]) -> int:
    """Shapes mindeg <= 0 < maxdeg; their top coefficient a_maxdeg * a_mindeg must vanish."""
    low, high = window
    return (max(0, -low) + 1) * max(0, high)


def _solution_key(f: LaurentPoly) -> Tuple:
    low, high = f.degree_bounds()
    return low, high, f.to_text()


def enumerate_solutions(
    params: ParamsLike,
    window: Tuple[int, int],
    limit: int = DEFAULT_WINDOW_LIMIT,
) -> List[LaurentPoly]:
    """All solutions of (*) supported in [mindeg, maxdeg].

    Raises:
        ParameterError: window reversed or beyond the limit
    """
    consts = _constants(params)
    window = _check_window(window, limit)
    low, high = window
    found: Dict[LaurentPoly, None] = {}
    for mindeg, maxdeg in _shapes(window):
        assignments = solve_shape(consts, mindeg, maxdeg)
        log_solver_event(f"shape [{mindeg}, {maxdeg}]", branches=len(assignments))
        for assignment in assignments:
            f = LaurentPoly.univariate(assignment)
            if not check_star(f, consts):
                raise RuntimeError(f"propagation produced a non-solution {f.to_text()}")
            f_low, f_high = f.degree_bounds()
            if low <= f_low and f_high <= high:
                found[f] = None
    return sorted(found, key=_solution_key)


class StarSolver:
    """Builds solver reports for solve-star."""

    def __init__(self, window_limit: int = DEFAULT_WINDOW_LIMIT):
        """Initialize solver.

        Args:
            window_limit: Largest |mindeg| / maxdeg accepted
        """
        self.window_limit = window_limit
        logger.info(f"Star solver initialized: window_limit={window_limit}")

    def solve(self, params: ParamsLike, window: Tuple[int, int]) -> SolverReport:
        consts = _constants(params)
        window = _check_window(window, self.window_limit)

        logger.debug(f"Step 1: propagating coefficients over {window}")
        solutions = enumerate_solutions(consts, window, self.window_limit)

        logger.debug(f"Step 2: identifying {len(solutions)} solutions")
        entries = []
        for f in solutions:
            try:
                label: Optional[str] = identify_family(f, consts).label
            except IdentificationError as e:
                logger.warning(f"Unidentified solution: {e}")
                label = None
            entries.append(SolutionEntry(f.to_text(), label))

        logger.debug("Step 3: q^t substitution evidence")
        evidence = qt_variant_evidence(consts, window)
        notes = ["catalogue constants use q^r; the q^t spelling is checked in variant_evidence"]
        if consts.r != consts.t and any(item.holds for item in evidence):
            notes.append("unexpected: a q^t variant solves (*) although r != t")

        return SolverReport(
            params={"t": consts.t, "r": consts.r, "s": consts.s, "b": consts.b.to_text(), "c": consts.c.to_text()},
            window=window,
            solutions=entries,
            excluded_shapes=excluded_shape_count(window),
            variant_evidence=evidence,
            notes=notes,
        )


__all__ = [
    "family_poly",
    "catalogue",
    "star_residual",
    "check_star",
    "apply_shift",
    "identify_family",
    "qt_variant_evidence",
    "solve_shape",
    "excluded_shape_count",
    "enumerate_solutions",
    "StarSolver",
]
