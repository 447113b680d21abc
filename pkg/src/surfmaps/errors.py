"""Exception hierarchy for the surfmaps package.

Every error raised on purpose by this package derives from SurfmapError,
so callers can catch one type at the boundary and let genuine bugs
(KeyError, TypeError, ...) surface normally.
"""


class SurfmapError(Exception):
    """Base class for all errors raised deliberately by surfmaps."""


class StructureError(SurfmapError):
    """The dart arrays do not describe a valid connected rotation system."""


class PreconditionError(SurfmapError):
    """An operation was called on input that violates its stated contract."""


class BudgetError(SurfmapError):
    """A computation was refused or aborted because it exceeds a size budget."""


class InternalCheckError(SurfmapError):
    """A self-check failed after an operation; indicates a bug, not bad input."""


class MapFormatError(SurfmapError):
    """A map file or stream could not be parsed."""
