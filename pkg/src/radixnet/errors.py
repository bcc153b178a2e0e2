"""Exception and warning types shared across the package."""

from __future__ import annotations


class RadixNetError(Exception):
    """Base class for every error this package raises deliberately."""


class SizeOverflow(RadixNetError, OverflowError):
    """A dimension, or a product of dimensions, exceeds the supported ceiling."""


class ShapeError(RadixNetError, ValueError):
    """Matrix dimensions are invalid or operands do not conform."""


class DigitError(RadixNetError, ValueError):
    """A digit sequence does not fit the numeral system it was given to."""


class RangeError(RadixNetError, ValueError):
    """An integer lies outside the range a numeral system can represent."""


class SpecError(RadixNetError, ValueError):
    """A topology spec violates one or more structural constraints.

    ``violations`` lists every violated constraint, not just the first,
    so callers can surface a complete diagnostic in one pass.
    """

    def __init__(self, violations: str | list[str]):
        if isinstance(violations, str):
            violations = [violations]
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class ParseError(RadixNetError, ValueError):
    """A spec document is not syntactically valid."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class DenseWidthWarning(UserWarning):
    """A dense width is not small relative to the per-layer node count.

    The construction stays mathematically valid for any positive width; the
    warning flags that the resulting network is no longer meaningfully sparse.
    """
