"""Exception types raised by lincount.

Every error the CLI maps to exit code 2 derives from :class:`LincountError`.
"""


class LincountError(ValueError):
    """Base class for invalid inputs to any lincount computation."""


class PartitionError(LincountError):
    """A sequence is not a valid (weakly decreasing, nonnegative) partition."""


class PartitionOutsideBox(LincountError):
    pass


class BoxMismatch(LincountError):
    pass


class NotBalanced(LincountError):
    """The marked-point count n is not an integer, so the problem is not finite."""


class RegimeViolation(LincountError):
    """A formula was requested outside the range where it applies."""


class DegreeMismatch(LincountError):
    pass


class CodimTooLarge(LincountError):
    pass


class InvalidK(LincountError):
    pass


class GridTooSmall(LincountError):
    pass


class CapExceeded(LincountError):
    pass
