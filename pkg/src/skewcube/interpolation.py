"""Recovery of top multilinear coefficients from values on weight-divisible points.

Setting: even m >= 2, target subset S with |S| = d, and n >= d*m + m/2. The
coordinates are split into d chunks of m (the i-th smallest element of S sits
at the end of chunk i), a half-chunk of m/2 "parity" coordinates, and an
untouched remainder. A product distribution assigns each chunk either the
all-plus state (probability 1/m) or a state with the end coordinate +1 and
exactly m/2 of the others -1 (probability 1/(2*C(m-2, m/2-1)) each); the
remainder is pinned to all-plus, and the parity half-chunk flips to all-minus
exactly when the chunk states' total count of -1, always a multiple of m/2,
is not a multiple of m. Every support point therefore has -1 count divisible
by m.

Expanding over the 2^d ways of negating whole chunks, with weight 2^-d and
sign equal to the product of the chunk signs, yields a finitely supported
signed probability measure. For any map of degree at most d, the weighted
signed sum of its values over the support equals the coefficient at S, as an
exact rational identity: terms missing some chunk average to zero with the
sign, terms of degree d meeting every chunk reduce to a product of single
coordinate expectations, and each non-end coordinate is -1 with probability
exactly 1/2.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .cube import CubePoint, exact
from .errors import (
    BadModulus,
    BadSubsetSize,
    DegreeOutOfRange,
    DegreeTooHigh,
    DimensionMismatch,
    DimensionTooLarge,
    MissingValue,
    OddModulus,
    SignConflict,
    SkewcubeError,
)
from .fourier import ValueTable
from .linalg import elimination_block, exact_nullity, modp_rank
from .subsets import mask_of, subsets_colex

_VANISHING_N_CAP = 20


@dataclass(frozen=True)
class ChunkLayout:
    """Partition of {1..n} into d chunks of m, a half-chunk, and a remainder.

    ``canonical_order[p]`` is the caller's coordinate label placed at canonical
    position p+1; the last label of chunk i is the i-th smallest element of the
    target subset, and all other labels fill the remaining positions in
    ascending order.
    """

    n: int
    m: int
    d: int
    subset: tuple[int, ...]
    chunks: tuple[tuple[int, ...], ...]
    extra: tuple[int, ...]
    rest: tuple[int, ...]
    canonical_order: tuple[int, ...]


@dataclass(frozen=True)
class InterpolationScheme:
    """A signed probability measure on W(m) recovering the coefficient at ``subset``.

    Atoms are (point, weight, sign) with positive weights summing to exactly 1,
    every point's -1 count divisible by m, and no repeated points. All of that
    is validated at construction.
    """

    n: int
    m: int
    d: int
    subset: tuple[int, ...]
    atoms: tuple[tuple[CubePoint, Fraction, int], ...]

    def __post_init__(self):
        total = Fraction(0)
        seen: set[int] = set()
        for point, weight, sign in self.atoms:
            if point.n != self.n:
                raise SkewcubeError("atom dimension mismatch")
            if point.bits in seen:
                raise SkewcubeError("duplicate atom point")
            if weight <= 0:
                raise SkewcubeError("atom weights must be positive")
            if sign not in (-1, 1):
                raise SkewcubeError("atom signs must be +-1")
            if point.weight % self.m:
                raise SkewcubeError("atom point outside W(m)")
            seen.add(point.bits)
            total += weight
        if total != 1:
            raise SkewcubeError(f"atom weights sum to {total}, expected 1")


def chunk_layout(n: int, m: int, d: int, subset: Iterable[int]) -> ChunkLayout:
    """Canonical chunk layout for recovering the coefficient at ``subset``."""
    if m < 2 or m % 2:
        raise OddModulus(f"modulus must be even and >= 2, got {m}")
    if d < 0:
        raise BadSubsetSize(f"degree must be >= 0, got {d}")
    sub = tuple(sorted(subset))
    if len(sub) != d or len(set(sub)) != d:
        raise BadSubsetSize(f"need a subset of exactly {d} distinct labels, got {sub}")
    if any(not 1 <= s <= n for s in sub):
        raise BadSubsetSize(f"subset labels must lie in 1..{n}, got {sub}")
    if n < d * m + m // 2:
        raise DegreeTooHigh(
            f"degree {d} too high for n={n}, m={m}: need n >= d*m + m/2 = {d * m + m // 2}"
        )
    order = [0] * n
    for i, s in enumerate(sub):
        order[i * m + m - 1] = s
    others = iter(sorted(set(range(1, n + 1)) - set(sub)))
    for p in range(n):
        if order[p] == 0:
            order[p] = next(others)
    chunks = tuple(tuple(order[i * m : (i + 1) * m]) for i in range(d))
    extra = tuple(order[d * m : d * m + m // 2])
    rest = tuple(order[d * m + m // 2 :])
    return ChunkLayout(n, m, d, sub, chunks, extra, rest, tuple(order))


def _chunk_states(layout: ChunkLayout) -> list[list[tuple[int, Fraction]]]:
    """Per chunk, the support states as (mask of -1 labels, probability)."""
    m = layout.m
    plus_prob = Fraction(1, m)
    heavy_prob = Fraction(1, 2 * math.comb(m - 2, m // 2 - 1))
    per_chunk = []
    for chunk in layout.chunks:
        states = [(0, plus_prob)]
        for negatives in itertools.combinations(chunk[:-1], m // 2):
            states.append((mask_of(negatives), heavy_prob))
        per_chunk.append(states)
    return per_chunk


def _support_distribution(layout: ChunkLayout) -> list[tuple[int, Fraction]]:
    """The product distribution's support as (point mask, probability) pairs."""
    extra_mask = mask_of(layout.extra)
    out = []
    for combo in itertools.product(*_chunk_states(layout)):
        prob = Fraction(1)
        base = 0
        for mask, p in combo:
            prob *= p
            base |= mask
        if base.bit_count() % layout.m:
            base |= extra_mask
        out.append((base, prob))
    return out


def build_scheme(n: int, m: int, d: int, subset: Iterable[int]) -> InterpolationScheme:
    """Materialize the signed measure for the coefficient at ``subset``.

    The scheme depends only on (n, m, d, subset), never on the function being
    recovered, and identical inputs give identical atom tuples.
    """
    layout = chunk_layout(n, m, d, subset)
    chunk_masks = [mask_of(c) for c in layout.chunks]
    y_scale = Fraction(1, 1 << d)
    merged: dict[int, list] = {}
    for base, prob in _support_distribution(layout):
        weight = prob * y_scale
        for ybits in range(1 << d):
            point = base
            for j in range(d):
                if (ybits >> j) & 1:
                    point ^= chunk_masks[j]
            sign = -1 if ybits.bit_count() & 1 else 1
            entry = merged.get(point)
            if entry is None:
                merged[point] = [weight, sign]
            elif entry[1] != sign:
                raise SignConflict(f"point mask 0x{point:x} merged with both signs")
            else:
                entry[0] += weight
    atoms = tuple(
        (CubePoint(bits, n), merged[bits][0], merged[bits][1]) for bits in sorted(merged)
    )
    return InterpolationScheme(n, m, d, layout.subset, atoms)


def recover_coefficient(
    scheme: InterpolationScheme,
    f: ValueTable | Callable[[CubePoint], Sequence],
) -> tuple[Fraction, ...]:
    """Weighted signed sum of f over the scheme's atoms.

    Equals the coefficient of f at ``scheme.subset`` exactly whenever
    deg(f) <= scheme.d (this includes deg(f) < d, where both sides are zero).
    ``f`` is either a ValueTable or a callback from CubePoint to a rational
    vector; the callback must be defined at every atom point.
    """
    if isinstance(f, ValueTable):
        if f.n != scheme.n:
            raise DimensionMismatch(f"table has n={f.n}, scheme has n={scheme.n}")
        table = f
        getter = lambda pt: table.values[pt.bits]
    elif callable(f):
        getter = f
    else:
        raise TypeError("f must be a ValueTable or a callable")

    acc: list[Fraction] | None = None
    for point, weight, sign in scheme.atoms:
        value = getter(point)
        if value is None:
            raise MissingValue(f"f is undefined at point mask 0x{point.bits:x}")
        vec = tuple(exact(v) for v in value)
        if acc is None:
            acc = [Fraction(0)] * len(vec)
        elif len(vec) != len(acc):
            raise MissingValue("f returned vectors of inconsistent dimension")
        signed = weight if sign > 0 else -weight
        for i, v in enumerate(vec):
            acc[i] += signed * v
    assert acc is not None  # schemes always carry at least one atom
    return tuple(acc)


def _evaluation_blocks(w_masks: list[int], col_masks: list[int], block: int = 2048):
    for i in range(0, len(w_masks), block):
        xs = np.asarray(w_masks[i : i + block], dtype=np.int64)
        out = np.empty((xs.size, len(col_masks)), dtype=np.int64)
        for cj, cm in enumerate(col_masks):
            parity = np.zeros(xs.size, dtype=np.int64)
            mm = cm
            while mm:
                j = (mm & -mm).bit_length() - 1
                parity += (xs >> j) & 1
                mm &= mm - 1
            out[:, cj] = 1 - 2 * (parity & 1)
        yield out


def vanishing_dimension(n: int, m: int, d: int) -> int:
    """Dimension of the degree <= d multilinear maps vanishing on all of W(m).

    Computed as the exact nullity over Q of the evaluation matrix, rows
    indexed by the points of W(m) and columns by the subsets of size <= d
    (sizes ascending, colex within each size). A mod-p pass that pivots every
    column or every row settles the rank exactly; anything else is recomputed
    with fraction-free integer elimination.
    """
    if m < 2 or m % 2:
        raise BadModulus(f"modulus must be even and >= 2, got {m}")
    if n > _VANISHING_N_CAP:
        raise DimensionTooLarge(f"n={n} exceeds the vanishing-dimension cap {_VANISHING_N_CAP}")
    if not 0 <= d <= n:
        raise DegreeOutOfRange(f"need 0 <= d <= n, got d={d}")
    col_masks = [
        mask_of(s) for size in range(d + 1) for s in subsets_colex(n, size)
    ]
    w_masks = [x for x in range(1 << n) if x.bit_count() % m == 0]
    ncols = len(col_masks)
    # Row order cannot change the rank, but mask-ascending rows are weight
    # biased and keep early blocks degenerate; a fixed shuffle fixes that.
    block = elimination_block(ncols)
    if len(w_masks) > block:
        random.Random("vanishing-rows").shuffle(w_masks)
    rank, certified = modp_rank(_evaluation_blocks(w_masks, col_masks, block), ncols)
    if certified:
        return ncols - rank
    rows = (
        [1 - 2 * ((cm & x).bit_count() & 1) for cm in col_masks] for x in w_masks
    )
    return exact_nullity(rows, ncols)
