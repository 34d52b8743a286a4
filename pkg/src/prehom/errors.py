"""Exception hierarchy.

User-facing input problems derive from ``ValueError``; broken internal
invariants derive from :class:`InternalInvariantError` so the CLI can map
them to a distinct exit status.
"""


class InvalidTuple(ValueError):
    """Tuple is malformed: fewer than 3 entries, or a negative / non-integer entry."""


class NegativeResult(ValueError):
    """A castling step would produce a negative entry."""


class BaseTooSmall(ValueError):
    pass


class NotAdmissible(ValueError):
    """Triple fails ``2 <= a <= b <= c`` or ``c^2 + b^2 - abc >= 1``."""


class DimensionTooLarge(ValueError):
    pass


class BadPrime(ValueError):
    pass


class InternalInvariantError(AssertionError):
    """Base for conditions that can only arise from a bug, never from input."""


class UniquenessViolation(InternalInvariantError):
    pass


class InvariantBreach(InternalInvariantError):
    pass
