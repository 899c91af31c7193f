"""Algebra layer: coefficients, Laurent polynomials, W_0 and the Hecke algebra.

Import order matters: laurent pulls in the schemas package, whose modules
only reach back into coeffring.
"""

from .parsing import ExpressionParser
from .coeffring import Coefficient, ParamConstants, param_constants
from .weyl import SignedPermutation
from .laurent import LaurentPoly, divided_diff_A, divided_diff_C, is_W_invariant
from .heckealg import HeckeElement, HeckeParams, gen, gen_inverse, mul, verify_relations

__all__ = [
    "ExpressionParser",
    "Coefficient",
    "ParamConstants",
    "param_constants",
    "SignedPermutation",
    "LaurentPoly",
    "divided_diff_A",
    "divided_diff_C",
    "is_W_invariant",
    "HeckeElement",
    "HeckeParams",
    "gen",
    "gen_inverse",
    "mul",
    "verify_relations",
]
