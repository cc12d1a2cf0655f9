"""Exception taxonomy for the ktq library.

Every error raised on purpose derives from KtqError so callers can fence off
library failures from genuine bugs.
"""


class KtqError(Exception):
    """Base class for all library errors."""


class FieldError(KtqError):
    """Invalid field construction or coefficient-level operation."""


class SeriesError(KtqError):
    """Series invariant violation, context mismatch, or unmet precondition."""


class PrecisionError(KtqError):
    """Requested information is not certified at the available caps."""


class NoSolutionError(KtqError):
    """An additive equation has no solution (constant-level obstruction)."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ExpHomError(KtqError):
    """Exponent homomorphism query outside the committed lattice, or
    incoherent commitments."""


class OrbitError(KtqError):
    """Orbit classification or witness construction is impossible for the
    given input at its current precision."""


class ParseError(KtqError):
    """Syntax error in an expression, series, or polynomial literal."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position
