"""Exception hierarchy for gghecke."""


class GGHeckeError(Exception):
    """Base class of every error raised by the package."""


class ParameterError(GGHeckeError, ValueError):
    """Invalid Hecke parameters, GG input or solver window."""


class ParseError(GGHeckeError, ValueError):
    """Malformed polynomial or coefficient text."""

    def __init__(self, source: str, position: int, message: str):
        self.source = source
        self.position = position
        super().__init__(f"{message} at position {position} in {source!r}")


class NotInvertibleError(GGHeckeError, ArithmeticError):
    """Inverse or negative power requested of a non-unit."""


class InexactDivisionError(GGHeckeError, ArithmeticError):
    """An exact division left a remainder (internal invariant failure)."""


class NotASolutionError(GGHeckeError, ValueError):
    """A polynomial handed to classify does not satisfy (*)."""


class IdentificationError(GGHeckeError):
    """A solution of (*) matched no catalogued family."""


class PoleError(GGHeckeError, ZeroDivisionError):
    """A scalar formula was evaluated at one of its poles."""


class InconsistentTableError(GGHeckeError):
    """Scalar tables contradict the decision logic."""


__all__ = [
    "GGHeckeError",
    "ParameterError",
    "ParseError",
    "NotInvertibleError",
    "InexactDivisionError",
    "NotASolutionError",
    "IdentificationError",
    "PoleError",
    "InconsistentTableError",
]
