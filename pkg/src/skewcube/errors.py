"""Exception types shared across the package."""

from __future__ import annotations


class SkewcubeError(Exception):
    """Base class for all package-specific errors."""


class ParseError(SkewcubeError):
    """A file or token could not be parsed; carries a line number when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class DimensionMismatch(SkewcubeError):
    """Objects with different cube dimensions were combined."""


class DimensionTooLarge(SkewcubeError):
    """The requested dimension exceeds the exhaustive-enumeration cap."""


class EmptyFamily(SkewcubeError):
    """A cover family must contain at least one plane."""


class MTooLarge(SkewcubeError):
    """The doubling construction would exceed the exhaustive cap."""


class OddDimension(SkewcubeError):
    """An even dimension is required."""


class BadModulus(SkewcubeError):
    """The weight modulus is out of range for this operation."""


class OddModulus(SkewcubeError):
    """The interpolation construction needs a modulus divisible by 2."""


class DegreeTooHigh(SkewcubeError):
    """The degree violates the feasibility bound d <= n/m - 1/2."""


class BadSubsetSize(SkewcubeError):
    """The target subset does not match the requested degree."""


class DegreeOutOfRange(SkewcubeError):
    """A polynomial degree outside [0, n] was requested."""


class MissingValue(SkewcubeError):
    """The function is undefined at a point the measure needs."""


class SignConflict(SkewcubeError):
    """Atom merging saw one point with both signs (must never happen)."""


class ZeroCoefficient(SkewcubeError):
    """All coefficients must be nonzero here."""


class SystemTooLarge(SkewcubeError):
    """The linear system exceeds the row-count cap."""


class PoolTooLarge(SkewcubeError):
    """The candidate-plane pool would exceed the enumeration cap."""


class PoolInsufficient(SkewcubeError):
    """The plane pool cannot cover the cube."""
