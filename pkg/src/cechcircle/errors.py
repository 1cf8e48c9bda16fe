"""Exception hierarchy shared across the package."""


class CechCircleError(Exception):
    """Base class for all package-specific errors."""


class DomainError(CechCircleError, ValueError):
    """An argument violates a documented precondition."""


class SizeError(CechCircleError, ValueError):
    """An instance exceeds a hard size guard (oracle-only code paths)."""


class PointFileError(CechCircleError, ValueError):
    """A point file is malformed; carries the offending line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class UnclassifiedError(CechCircleError):
    """The classification pipeline could not determine a homotopy type.

    Raised when dismantling does not reach a recognizable canonical complex
    and the reduced instance is too large for the homology oracle.
    """

    def __init__(self, reduced_size: int, window_profile):
        self.reduced_size = reduced_size
        self.window_profile = tuple(window_profile)
        super().__init__(
            f"unclassified: reduced size {reduced_size}, "
            f"window profile {self.window_profile}"
        )


class InternalInconsistencyError(CechCircleError, RuntimeError):
    """Two independent computations disagree; always a bug, never caught."""
