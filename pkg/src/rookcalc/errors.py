"""
Exception hierarchy for rookcalc

Every error raised for bad user input carries the process exit code the CLI
reports for it.
"""
from .constants import (
    EXIT_CROSS_CHECK,
    EXIT_IDENTITY_FAILED,
    EXIT_INVALID,
    EXIT_SIZE_CAP,
)


class RookcalcError(Exception):
    """Base class for rookcalc errors"""
    exit_code = EXIT_IDENTITY_FAILED


class InvalidParameterError(RookcalcError, ValueError):
    """A parameter is outside its documented domain"""
    exit_code = EXIT_INVALID


class PolynomialParseError(InvalidParameterError):
    """Canonical polynomial text could not be parsed"""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ZeroEvaluationError(InvalidParameterError, ZeroDivisionError):
    """Evaluation at q = 0 of a polynomial with a negative exponent"""


class InvalidBoardError(InvalidParameterError):
    """Malformed board word, board spec or rook placement"""


class UnknownIdentityError(InvalidParameterError, KeyError):
    """Identity name is not registered"""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class SizeCapError(RookcalcError):
    """Requested enumeration exceeds the configured cap"""
    exit_code = EXIT_SIZE_CAP


class CrossCheckError(RookcalcError):
    """A recurrence value disagrees with the rook-placement oracle"""
    exit_code = EXIT_CROSS_CHECK
