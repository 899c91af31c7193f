"""Services: the (*) solver, polynomial modules and the Gelfand-Graev determination."""

from .starsolver import StarSolver, check_star, enumerate_solutions, identify_family
from .modules import InducedModule, PolynomialModule, classify, verify_T0_lemma
from .ggdet import determine

__all__ = [
    "StarSolver",
    "check_star",
    "enumerate_solutions",
    "identify_family",
    "PolynomialModule",
    "InducedModule",
    "classify",
    "verify_T0_lemma",
    "determine",
]
