"""Shared exception types.

Every error raised on purpose by this package derives from RdError, so
callers (and the command line driver) can tell deliberate rejections apart
from genuine bugs.
"""


class RdError(Exception):
    """Base class for all errors raised by this package."""


class FormatError(RdError):
    """Malformed serialized input (graph6, edge list, or coloring file)."""


class ParameterError(RdError):
    """An argument is outside the documented domain of an operation."""


class StructureError(RdError):
    """The input graph violates a structural precondition (e.g. connectivity)."""


class SizeError(RdError):
    """The input exceeds a hard size cap of the chosen representation."""


class Undecided(RdError):
    """An exact search gave up before reaching a verdict.

    Carries whatever partial information was established (for rd searches,
    the bound ledger computed so far) in `partial`.
    """

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial
