"""
Exceptions raised by geodiscord.

Every error is a ``ValueError`` so callers that only guard against bad input
keep working; the subclasses let the command line map failures to stable
exit codes.
"""
from typing import List, Optional


class GeoDiscordError(ValueError):
    """Base class of all library errors."""


class InvalidDimensionError(GeoDiscordError):
    """A dimension argument is out of range (e.g. d < 2)."""


class DimensionMismatchError(GeoDiscordError):
    """Two objects that must share dimensions do not."""


class InvalidStateError(GeoDiscordError):
    """
    A matrix fails the density-matrix invariants.

    Attributes:

        violations (list): human readable description of every failed invariant

    """

    def __init__(self, message: str, violations: Optional[List[str]] = None):
        super().__init__(message)
        self.violations = list(violations or [])


class PreconditionError(GeoDiscordError):
    """An operation was called outside its domain (e.g. a mixed state where a pure one is required)."""


class ContractViolationError(GeoDiscordError):
    """An internal consistency check failed."""


class InvalidFrameError(GeoDiscordError):
    """A vector set violates the simplex frame relations."""


class InfeasibleConstructionError(GeoDiscordError):
    """
    A sign-pattern frame cannot be built for the requested dimension.

    Attributes:

        relation (str): name of the relation that cannot be satisfied

    """

    def __init__(self, message: str, relation: str = ""):
        super().__init__(message)
        self.relation = relation
