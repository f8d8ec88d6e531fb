"""Exact geometry of {-1,1}^n: points, skew hyperplanes, cover verification.

A point is an n-bit mask (bit j-1 set means coordinate x_j = -1), so the
popcount of the mask counts the -1 coordinates. A hyperplane carries exact
rational coefficients and an offset; "covers" means the affine form vanishes
as a rational number, never approximately.

Exhaustive enumeration over all 2^n points is capped at n <= 24 and runs
chunk by chunk over aligned mask ranges. Chunks whose scaled integer values
fit comfortably in int64 go through a vectorized evaluator; anything larger
falls back to arbitrary-precision integer subset sums, so no input changes
the exactness of the answer.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, DimensionTooLarge, EmptyFamily

MAX_EXHAUSTIVE_N = 24

_CHUNK_BITS = 18
_SAMPLE_CAP = 32
# The int64 evaluator is only used when 4 * (|b| + sum|a_j|) < 2^62, which
# keeps every intermediate strictly below 2^63.
_INT64_LIMIT = 1 << 62


def exact(value) -> Fraction:
    """Coerce to Fraction, rejecting floats (exactness is the contract)."""
    if isinstance(value, float):
        raise TypeError("float coefficients are not allowed; pass int, Fraction or 'p/q'")
    return Fraction(value)


@dataclass(frozen=True)
class CubePoint:
    """A vertex of {-1,1}^n encoded as a bitmask: bit j-1 set means x_j = -1."""

    bits: int
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("dimension must be positive")
        if not 0 <= self.bits < (1 << self.n):
            raise ValueError(f"mask 0x{self.bits:x} out of range for n={self.n}")

    @property
    def weight(self) -> int:
        """Number of coordinates equal to -1."""
        return self.bits.bit_count()

    def coords(self) -> tuple[int, ...]:
        return tuple(-1 if (self.bits >> j) & 1 else 1 for j in range(self.n))

    @classmethod
    def from_coords(cls, coords: Sequence[int]) -> "CubePoint":
        bits = 0
        for j, c in enumerate(coords):
            if c == -1:
                bits |= 1 << j
            elif c != 1:
                raise ValueError("coordinates must be +1 or -1")
        return cls(bits, len(coords))


@dataclass(frozen=True)
class Hyperplane:
    """The affine plane a.x + b = 0 with exact rational coefficients."""

    a: tuple[Fraction, ...]
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(exact(v) for v in self.a))
        object.__setattr__(self, "b", exact(self.b))
        if not self.a:
            raise ValueError("a hyperplane needs at least one coefficient")

    @property
    def n(self) -> int:
        return len(self.a)


@dataclass(frozen=True)
class CoverFamily:
    """An ordered, nonempty family of hyperplanes over one cube dimension."""

    planes: tuple[Hyperplane, ...]

    def __post_init__(self):
        planes = tuple(self.planes)
        object.__setattr__(self, "planes", planes)
        if not planes:
            raise EmptyFamily("a cover family needs at least one plane")
        n = planes[0].n
        for p in planes[1:]:
            if p.n != n:
                raise DimensionMismatch(f"mixed dimensions in family: {p.n} != {n}")

    @property
    def n(self) -> int:
        return self.planes[0].n

    def __len__(self) -> int:
        return len(self.planes)

    def __iter__(self):
        return iter(self.planes)


@dataclass(frozen=True)
class CoverReport:
    """Outcome of exhaustive cover verification."""

    covered: bool
    num_uncovered: int
    uncovered_sample: tuple[CubePoint, ...]
    per_plane_counts: tuple[int, ...]


@lru_cache(maxsize=65536)
def _integerized(plane: Hyperplane) -> tuple[tuple[int, ...], int, int]:
    """Scale a plane to integer coefficients; returns (a_int, b_int, denominator)."""
    den = math.lcm(plane.b.denominator, *(c.denominator for c in plane.a))
    return tuple(int(c * den) for c in plane.a), int(plane.b * den), den


def evaluate(plane: Hyperplane, point: CubePoint) -> Fraction:
    """Exact value of a.x + b at the point."""
    if plane.n != point.n:
        raise DimensionMismatch(f"plane has n={plane.n}, point has n={point.n}")
    a_int, b_int, den = _integerized(plane)
    neg = sum(c for j, c in enumerate(a_int) if (point.bits >> j) & 1)
    return Fraction(b_int + sum(a_int) - 2 * neg, den)


def covers(plane: Hyperplane, point: CubePoint) -> bool:
    """True iff the plane passes through the point exactly."""
    return evaluate(plane, point) == 0


def is_skew(plane: Hyperplane) -> bool:
    """True iff every coefficient is nonzero."""
    return all(c != 0 for c in plane.a)


def _check_exhaustive(n: int) -> None:
    if n > MAX_EXHAUSTIVE_N:
        raise DimensionTooLarge(f"n={n} exceeds the exhaustive cap {MAX_EXHAUSTIVE_N}")


def _chunk_ranges(n: int, chunk_bits: int):
    size = 1 << min(n, chunk_bits)
    for lo in range(0, 1 << n, size):
        yield lo, lo + size


def _int64_safe(planes_int) -> bool:
    return all(
        4 * (abs(b) + sum(abs(c) for c in a)) < _INT64_LIMIT for a, b, _ in planes_int
    )


def _chunk_zero_offsets(planes_int, n: int, lo: int, hi: int):
    """Per plane, offsets within the aligned chunk [lo, hi) where a.x + b = 0.

    The vanishing set is unchanged by the integer scaling, so only a_int and
    b_int matter here.
    """
    if _int64_safe(planes_int):
        masks = np.arange(lo, hi, dtype=np.int64)
        bits = [(masks >> j) & np.int64(1) for j in range(n)]
        out = []
        for a, b, _ in planes_int:
            acc = np.zeros(hi - lo, dtype=np.int64)
            for j, aj in enumerate(a):
                if aj:
                    acc += np.int64(aj) * bits[j]
            # a.x + b = (b + sum a) - 2*acc
            out.append(np.nonzero(2 * acc == b + sum(a))[0])
        return out

    # Arbitrary-precision path: subset sums of 2*a_j over the chunk's low
    # bits, plus the fixed contribution of the high bits of lo.
    width = hi - lo
    low_bits = width.bit_length() - 1
    sums = [0] * width
    out = []
    for a, b, _ in planes_int:
        high = sum(a[j] for j in range(low_bits, n) if (lo >> j) & 1)
        target = b + sum(a) - 2 * high
        a2 = [2 * c for c in a[:low_bits]]
        for m in range(1, width):
            j = (m & -m).bit_length() - 1
            sums[m] = sums[m & (m - 1)] + a2[j]
        out.append([m for m in range(width) if sums[m] == target])
    return out


def _verify_chunk_job(args):
    planes_int, n, lo, hi = args
    zero_lists = _chunk_zero_offsets(planes_int, n, lo, hi)
    covered = np.zeros(hi - lo, dtype=bool)
    counts = []
    for z in zero_lists:
        idx = np.asarray(z, dtype=np.int64)
        counts.append(int(idx.size))
        covered[idx] = True
    unc = np.nonzero(~covered)[0]
    return counts, int(unc.size), [int(lo + i) for i in unc[:_SAMPLE_CAP]]


def covered_set(plane: Hyperplane, n: int | None = None) -> set[CubePoint]:
    """All points of {-1,1}^n lying on the plane, by exhaustive enumeration."""
    nn = plane.n if n is None else n
    if nn != plane.n:
        raise DimensionMismatch(f"plane has n={plane.n}, requested n={nn}")
    _check_exhaustive(nn)
    pinfo = [_integerized(plane)]
    points: set[CubePoint] = set()
    for lo, hi in _chunk_ranges(nn, _CHUNK_BITS):
        z = _chunk_zero_offsets(pinfo, nn, lo, hi)[0]
        points.update(CubePoint(lo + int(i), nn) for i in z)
    return points


def verify_cover(
    family: CoverFamily, *, workers: int = 1, chunk_bits: int = _CHUNK_BITS
) -> CoverReport:
    """Exhaustively check whether the family covers every point of the cube.

    The point range is split into aligned chunks; with workers > 1 the chunks
    are verified in parallel processes. Chunk reductions are integer counts
    and ordered samples, so the report is identical for any worker count.
    """
    n = family.n
    _check_exhaustive(n)
    planes_int = [_integerized(p) for p in family.planes]
    jobs = [(planes_int, n, lo, hi) for lo, hi in _chunk_ranges(n, chunk_bits)]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_verify_chunk_job, jobs))
    else:
        parts = [_verify_chunk_job(job) for job in jobs]

    counts = [0] * len(planes_int)
    num_uncovered = 0
    sample: list[int] = []
    for chunk_counts, unc, chunk_sample in parts:
        for i, v in enumerate(chunk_counts):
            counts[i] += v
        num_uncovered += unc
        if len(sample) < _SAMPLE_CAP:
            sample.extend(chunk_sample[: _SAMPLE_CAP - len(sample)])
    return CoverReport(
        covered=num_uncovered == 0,
        num_uncovered=num_uncovered,
        uncovered_sample=tuple(CubePoint(m, n) for m in sample),
        per_plane_counts=tuple(counts),
    )
