"""Exception types raised by ordtrees.

Every error derives from :class:`TreeError` so callers (and the CLI) can
catch domain failures in one place.  Positions are always 1-based.
"""


class TreeError(Exception):
    """Base class for all domain errors."""


class InvalidCharacter(TreeError, ValueError):
    def __init__(self, position, char):
        self.position = position
        self.char = char
        super().__init__(f"invalid character {char!r} at position {position}")


class EmptyInput(TreeError, ValueError):
    def __init__(self):
        super().__init__("empty codeword")


class InvalidCodeword(TreeError, ValueError):
    """Raised when an operation requires a grammatically valid codeword."""

    def __init__(self, report):
        self.report = report
        self.position = report.failure_position
        super().__init__(f"invalid codeword: {report.describe()}")


class DegreeOverflow(TreeError, ValueError):
    def __init__(self, index, children, delta):
        self.position = index
        super().__init__(
            f"node {index} (pre-order) has {children} children, more than delta={delta}"
        )


class OutOfRange(TreeError, ValueError):
    pass


class RankOutOfRange(OutOfRange):
    pass


class CapacityExceeded(TreeError, MemoryError):
    pass


class CapExceeded(TreeError):
    pass


class NotFound(TreeError, LookupError):
    pass


class BudgetExceeded(TreeError):
    pass


class ZeroDivisor(TreeError, ZeroDivisionError):
    pass


class IoFailure(TreeError, OSError):
    pass


class FormatMismatch(TreeError, ValueError):
    pass


class ChecksumMismatch(FormatMismatch):
    pass
