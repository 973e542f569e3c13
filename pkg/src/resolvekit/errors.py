"""Exception types shared across the package.

Invalid arguments (bad sizes, wrong parity, out-of-range parameters) raise
the builtin ValueError; the classes here cover data-level failures that
callers may want to catch separately, and that the CLI maps to exit codes.
"""


class ResolveKitError(Exception):
    """Base class for package-specific errors."""


class Graph6ParseError(ResolveKitError):
    """Malformed graph6 record. ``offset`` is the byte position at fault."""

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (offset {offset})")
        self.offset = offset


class NotConnectedError(ResolveKitError):
    """Raised when an operation requires a connected graph."""


class WitnessError(ResolveKitError):
    """Witness vector rejected: not zero-sum, or its image has repeats."""


class InconsistentDistanceVector(ResolveKitError):
    """A distance vector handed to the decoder is not a codeword image."""


class ResourceCapExceeded(ResolveKitError):
    """An exhaustive enumeration would exceed the configured cap."""


class InfiniteDimensionError(ResolveKitError):
    """Two matrix rows differ by a constant vector, so no finite code exists."""
