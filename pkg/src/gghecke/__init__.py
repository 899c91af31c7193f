"""gghecke: affine Hecke algebras with unequal parameters.

Exact arithmetic over Q[v, v^-1] for the Bernstein presentation of the
affine Hecke algebras of types A and C, the classification of Hecke-module
structures on the Laurent polynomial ring, and the determination of
Gelfand-Graev modules by scalar evaluation.
"""

from .constants import __version__, CaseTag, GGCase, T0Exponent
from .errors import GGHeckeError, ParameterError, ParseError
from .algebra import Coefficient, LaurentPoly, SignedPermutation, HeckeParams, HeckeElement

__all__ = [
    "__version__",
    "CaseTag",
    "GGCase",
    "T0Exponent",
    "GGHeckeError",
    "ParameterError",
    "ParseError",
    "Coefficient",
    "LaurentPoly",
    "SignedPermutation",
    "HeckeParams",
    "HeckeElement",
]
