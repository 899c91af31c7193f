"""Constants and enums for gghecke.

This module defines the enums, default values and error-message templates
shared by the algebra layer, the services and the command-line front end.
"""

from enum import Enum, auto
from pathlib import Path

# Version
__version__ = "0.1.0"


# ========== Path Constants ==========

DEFAULT_CONFIG_DIR = Path.home() / ".gghecke"
DEFAULT_CONFIG_PATH = DEFAULT_CONFIG_DIR / "config.yaml"


# ========== Solver Constants ==========

# Largest |mindeg| / maxdeg accepted by the (*) solver
DEFAULT_WINDOW_LIMIT = 12

# Window used by solve-star when none is given
DEFAULT_WINDOW = (-6, 6)


# ========== Panel Constants ==========

DEFAULT_SEED = 0

# Random polynomials per center_check run
DEFAULT_CENTER_PANEL_SIZE = 50

# Monomial panel radius (l1 norm of exponent vectors) for center_check
DEFAULT_CENTER_DEGREE = 2


# ========== Runtime Constants ==========

DEFAULT_TIMEOUT_SECONDS = 300.0

# Expressions longer than this are abbreviated in log records
LOG_EXPRESSION_MAX_CHARS = 240


# ========== Enums ==========

class CaseTag(Enum):
    """Root system of the affine Hecke algebra."""
    A = "A"  # type A~_{n-1}, equal parameters t
    C = "C"  # type C~_n, parameters t, r, s


class GGCase(Enum):
    """Case of the Gelfand-Graev determination."""
    I = "I"
    II = "II"
    III = "III"


class Subalgebra(Enum):
    """Finite-type subalgebra a one-dimensional module is induced from."""
    H_SN = "H_Sn"  # generated by T_1..T_{n-1}
    H0 = "H0"      # generated by T_1..T_n
    HN = "Hn"      # generated by T_0..T_{n-1}


class FamilyKind(Enum):
    """Solution families of the functional equation (*)."""
    CONST_MINUS_ONE = "ConstMinusOne"
    CONST_QR = "ConstQr"
    FAM_I = "FamI"
    FAM_II = "FamII"
    FAM_III = "FamIII"
    FAM_IV = "FamIV"
    FAM_V = "FamV"
    FAM_VI = "FamVI"


class T0Exponent(Enum):
    """Spelling of the v-exponent in T_0 = v^e X_1 T_w^{-1}."""
    STANDARD = "standard"  # e = s + 2t(n-1) + r
    HALVED = "halved"  # e = s + t(n-1) + r

    @classmethod
    def _missing_(cls, value):
        alias = T0_EXPONENT_ALIASES.get(value)
        return cls(alias) if alias is not None else None


# Alternative names accepted on the command line and in config files
T0_EXPONENT_ALIASES = {"remark-b": T0Exponent.HALVED.value}


class RelationKind(Enum):
    """Kinds of defining relations checked by verify_relations."""
    QUADRATIC = auto()
    BRAID = auto()
    COMMUTATION = auto()
    INVERSE = auto()


class RelationStatus(Enum):
    PASS = "pass"
    FAIL = "fail"


class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"


# ========== Exit Codes ==========

EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_USAGE_ERROR = 2


# ========== Error Messages ==========

ERROR_PARAMS_MISMATCH = "Operands belong to different parameter sets: {left} vs {right}"
ERROR_INDEX_OUT_OF_RANGE = "Generator index {index} is invalid for case {case} with n={n}"
ERROR_WINDOW_LIMIT = "Window [{mindeg}, {maxdeg}] exceeds the configured limit {limit}"
ERROR_INEXACT_DIVISION = "Division by {divisor} left a nonzero remainder"
ERROR_NOT_A_SOLUTION = "Polynomial {poly} does not satisfy (*) for {params}"
ERROR_NOT_INVERTIBLE = "{value} is not a unit"


# ========== Logging Constants ==========

LOG_LEVELS = ["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"]

DEFAULT_LOG_LEVEL = "WARNING"

LOG_RETENTION_DAYS = 7

LOG_MAX_SIZE_MB = 10


__all__ = [
    "__version__",
    "DEFAULT_CONFIG_DIR",
    "DEFAULT_CONFIG_PATH",
    "DEFAULT_WINDOW_LIMIT",
    "DEFAULT_WINDOW",
    "DEFAULT_SEED",
    "DEFAULT_CENTER_PANEL_SIZE",
    "DEFAULT_CENTER_DEGREE",
    "DEFAULT_TIMEOUT_SECONDS",
    "LOG_EXPRESSION_MAX_CHARS",
    "CaseTag",
    "GGCase",
    "Subalgebra",
    "FamilyKind",
    "T0Exponent",
    "T0_EXPONENT_ALIASES",
    "RelationKind",
    "RelationStatus",
    "OutputFormat",
    "EXIT_OK",
    "EXIT_VERIFICATION_FAILED",
    "EXIT_USAGE_ERROR",
    "ERROR_PARAMS_MISMATCH",
    "ERROR_INDEX_OUT_OF_RANGE",
    "ERROR_WINDOW_LIMIT",
    "ERROR_INEXACT_DIVISION",
    "ERROR_NOT_A_SOLUTION",
    "ERROR_NOT_INVERTIBLE",
    "LOG_LEVELS",
    "DEFAULT_LOG_LEVEL",
    "LOG_RETENTION_DAYS",
    "LOG_MAX_SIZE_MB",
]
