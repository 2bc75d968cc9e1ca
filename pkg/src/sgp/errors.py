"""Exception hierarchy.

``DomainError`` subclasses signal mathematically invalid input and map to
exit code 2 in the CLI.  ``BudgetExceeded`` signals an aborted search; it
carries the best (unconfirmed) bound found so far and maps to exit code 3.
"""

from __future__ import annotations


class SgpError(Exception):
    """Base class for every error raised by this package."""


class DomainError(SgpError):
    """Mathematically invalid input."""


class EmptyInput(DomainError):
    """No generators were given."""


class GcdNotOne(DomainError):
    """The generators do not have greatest common divisor 1."""


class EmptySet(DomainError):
    """An operation on a set of targets received an empty set."""


class NotInSemigroup(DomainError):
    """The argument is required to be an element of the semigroup."""


class NotSymmetric(DomainError):
    """The operation is only defined for symmetric semigroups."""


class MbarTooSmall(DomainError):
    """The base point must be at least 2c-1 for the closed form to apply."""


class BelowConductor(DomainError):
    """The argument must be at least the conductor."""


class OutOfRange(DomainError):
    """Argument outside the range where the formula is valid."""


class BadField(DomainError):
    """Field size must be an integer >= 2."""


class BadStrip(DomainError):
    """Invalid strip-drawing parameters."""


class BaseIsWholeGround(DomainError):
    """The triangle base covers the whole ground, where base comparison
    does not characterise divisibility."""


class HypothesisViolated(DomainError):
    """An interval-ordering hypothesis of a closed-form set operation
    failed; the message names the failed condition."""


class BudgetExceeded(SgpError):
    """Search aborted by a resource cap.

    ``best_value`` is the best upper bound established before the cap was
    hit (never a silently wrong answer), ``witness`` a configuration
    attaining it, ``nodes`` the number of search nodes visited.
    """

    def __init__(self, message: str, *, best_value: int | None = None,
                 witness: tuple[int, ...] | None = None,
                 nodes: int | None = None):
        super().__init__(message)
        self.best_value = best_value
        self.witness = witness
        self.nodes = nodes
