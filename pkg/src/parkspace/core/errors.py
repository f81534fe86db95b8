"""
Exception hierarchy for the parkspace library.

Library operations raise :class:`DomainError` (a ``ValueError``) when a
precondition is violated, so callers that only know about ``ValueError``
still behave sensibly.
"""


class ParkspaceError(Exception):
    """Base class for all parkspace errors."""
    pass


class DomainError(ParkspaceError, ValueError):
    """A mathematical precondition of an operation is not met."""
    pass


class InexactDivisionError(DomainError):
    """An exact division left a nonzero remainder.

    Raised where the mathematics guarantees divisibility, so seeing it means
    a bug in the caller or in the input data.
    """
    pass


class NotApplicableError(DomainError):
    """A check was requested for an input outside its hypothesis."""
    pass


class InvariantError(ParkspaceError):
    """A computed value violates a property that is proven to hold.

    Seeing this means the implementation (or its embedded data) is wrong.
    """
    pass
