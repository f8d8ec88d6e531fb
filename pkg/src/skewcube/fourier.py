"""Multilinear maps on {-1,1}^n in coefficient and point-value form.

A coefficient table maps subset bitmasks to rational vectors: bit j-1 of the
key means coordinate j appears in the monomial, and the monomial's value at a
point mask is (-1)^popcount(key & mask). The transform pair is the in-place
butterfly; the coefficient direction divides by 2^n and the value direction
does not, so the round trip is the identity over exact rationals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .cube import MAX_EXHAUSTIVE_N, CubePoint, exact
from .errors import BadModulus, DegreeOutOfRange, DimensionTooLarge
from .subsets import mask_of


@dataclass(frozen=True, eq=True)
class MultilinearPoly:
    """Coefficient form: a map from subset bitmasks to vectors of k rationals.

    Zero coefficient vectors are dropped at construction, so ``degree`` can
    read the support directly. The zero polynomial has an empty map and, by
    convention, degree 0.
    """

    n: int
    k: int
    coeffs: dict[int, tuple[Fraction, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        if self.k < 1:
            raise ValueError("codomain dimension must be positive")
        clean: dict[int, tuple[Fraction, ...]] = {}
        for mask, vec in self.coeffs.items():
            if not 0 <= mask < (1 << self.n):
                raise ValueError(f"subset mask 0x{mask:x} out of range for n={self.n}")
            v = tuple(exact(x) for x in vec)
            if len(v) != self.k:
                raise ValueError(f"coefficient vector has length {len(v)}, expected {self.k}")
            if any(v):
                clean[mask] = v
        object.__setattr__(self, "coeffs", clean)

    def value_at(self, bits: int) -> tuple[Fraction, ...]:
        """Evaluate at a point mask by direct monomial summation."""
        acc = [Fraction(0)] * self.k
        for mask, vec in self.coeffs.items():
            if (mask & bits).bit_count() & 1:
                for i, v in enumerate(vec):
                    acc[i] -= v
            else:
                for i, v in enumerate(vec):
                    acc[i] += v
        return tuple(acc)


@dataclass(frozen=True, eq=True)
class ValueTable:
    """Point-value form: a dense array of 2^n rational vectors, mask-indexed."""

    n: int
    k: int
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        if self.k < 1:
            raise ValueError("codomain dimension must be positive")
        vals = tuple(tuple(exact(x) for x in row) for row in self.values)
        if len(vals) != (1 << self.n):
            raise ValueError(f"expected {1 << self.n} values, got {len(vals)}")
        if any(len(row) != self.k for row in vals):
            raise ValueError("value rows must all have length k")
        object.__setattr__(self, "values", vals)


def _check_transform_n(n: int) -> None:
    if n > MAX_EXHAUSTIVE_N:
        raise DimensionTooLarge(f"n={n} exceeds the dense-transform cap {MAX_EXHAUSTIVE_N}")


def _butterfly(vals: list[tuple[Fraction, ...]], n: int) -> None:
    for j in range(n):
        step = 1 << j
        for base in range(0, len(vals), step << 1):
            for u in range(base, base + step):
                x = vals[u]
                y = vals[u + step]
                vals[u] = tuple(p + q for p, q in zip(x, y))
                vals[u + step] = tuple(p - q for p, q in zip(x, y))


def wht(table: ValueTable) -> MultilinearPoly:
    """Coefficients from values: hat(S) = 2^-n * sum_x f(x) * (-1)^|S & x|."""
    _check_transform_n(table.n)
    vals = list(table.values)
    _butterfly(vals, table.n)
    scale = 1 << table.n
    coeffs = {
        mask: tuple(x / scale for x in vec) for mask, vec in enumerate(vals) if any(vec)
    }
    return MultilinearPoly(table.n, table.k, coeffs)


def inverse_wht(poly: MultilinearPoly) -> ValueTable:
    """Values from coefficients: f(x) = sum_S hat(S) * (-1)^|S & x|."""
    _check_transform_n(poly.n)
    zero = tuple([Fraction(0)] * poly.k)
    vals: list[tuple[Fraction, ...]] = [zero] * (1 << poly.n)
    for mask, vec in poly.coeffs.items():
        vals[mask] = vec
    _butterfly(vals, poly.n)
    return ValueTable(poly.n, poly.k, tuple(vals))


def degree(poly: MultilinearPoly) -> int:
    """Largest subset size with a nonzero coefficient vector; 0 if none."""
    return max((mask.bit_count() for mask in poly.coeffs), default=0)


def w_set(n: int, m: int) -> list[CubePoint]:
    """Points whose count of -1 coordinates is divisible by m, mask-ascending."""
    if m < 2:
        raise BadModulus(f"modulus must be >= 2, got {m}")
    if n > MAX_EXHAUSTIVE_N:
        raise DimensionTooLarge(f"n={n} > {MAX_EXHAUSTIVE_N}")
    return [CubePoint(x, n) for x in range(1 << n) if x.bit_count() % m == 0]


def random_poly(n: int, d: int, k: int, seed) -> MultilinearPoly:
    """Seeded pseudo-random polynomial of degree exactly d with small integer entries.

    Deterministic for a given (n, d, k, seed): string seeding of the stdlib
    generator hashes with sha512, independent of PYTHONHASHSEED.
    """
    if not 0 <= d <= n:
        raise DegreeOutOfRange(f"need 0 <= d <= n, got d={d}, n={n}")
    if k < 1:
        raise ValueError("codomain dimension must be positive")
    rng = random.Random(f"skewcube-poly/{n}/{d}/{k}/{seed}")

    def vector() -> tuple[Fraction, ...]:
        while True:
            v = tuple(Fraction(rng.randint(-4, 4)) for _ in range(k))
            if any(v):
                return v

    coeffs: dict[int, tuple[Fraction, ...]] = {}
    for _ in range(rng.randint(d + 1, 2 * d + 4)):
        size = rng.randint(0, d)
        coeffs[mask_of(rng.sample(range(1, n + 1), size))] = vector()
    # Set the top-level term last so nothing overwrites it.
    top = mask_of(rng.sample(range(1, n + 1), d))
    coeffs[top] = vector()
    return MultilinearPoly(n, k, coeffs)
