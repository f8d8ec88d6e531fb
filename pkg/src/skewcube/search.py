"""Bounded-integer search for small skew covers of {-1,1}^n.

The candidate pool enumerates primitive integer planes within coefficient and
offset bounds, keeps only those that can vanish on the cube (parity filter)
and actually do somewhere, and orders them canonically. The cover search is
depth-first branch and bound with iterative deepening on the family size,
starting at the proven lower bound ceil(n/2 + 1): asking for fewer planes than
that is vacuous by the bound, and the search reports it as exhausted without
exploring. Negative outcomes are always claims relative to the configured
bounds, never unconditional nonexistence statements.
"""

from __future__ import annotations

import enum
import itertools
import math
import time
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cube import CoverFamily, Hyperplane, covered_set, verify_cover
from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    PoolInsufficient,
    PoolTooLarge,
    SkewcubeError,
)

_POOL_CAP = 10_000_000
_POOL_BLOCK = 65536


class SearchStatus(enum.Enum):
    FOUND_COVER = "found_cover"
    EXHAUSTED_NO_COVER = "exhausted_no_cover"
    TIMEOUT = "timeout"


@dataclass(frozen=True)
class SearchConfig:
    """Bounds and knobs for one search run.

    ``offset_bound`` defaults to n (level-set planes need offsets up to n).
    A ``max_k`` below the proven lower bound makes the run vacuous.
    """

    n: int
    coeff_bound: int = 1
    offset_bound: int | None = None
    max_k: int = 8
    time_budget: float | None = None
    canonical_first_plane: bool = True

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be positive")
        if self.coeff_bound < 1:
            raise ValueError("coefficient bound must be >= 1")
        if self.max_k < 0:
            raise ValueError("max_k must be >= 0")
        if self.offset_bound is not None and self.offset_bound < 0:
            raise ValueError("offset bound must be >= 0")


@dataclass(frozen=True)
class SearchOutcome:
    status: SearchStatus
    family: CoverFamily | None
    nodes_explored: int
    candidate_pool_size: int


def lower_bound(n: int) -> int:
    """Smallest integer >= n/2 + 1: no fewer skew planes can cover {-1,1}^n."""
    if n < 1:
        raise ValueError("n must be positive")
    return (n + 3) // 2


def candidate_pool(n: int, coeff_bound: int, offset_bound: int) -> list[Hyperplane]:
    """All primitive skew integer planes within bounds that cover >= 1 point.

    Coefficients range over {-B..B} minus 0 with the leading one positive
    (a plane and its negation are the same set), contents divided by their
    gcd, and the parity filter applied: a.x has the parity of sum(a), so
    b must match it mod 2 for the form to vanish anywhere. Output is sorted
    by colex on (a_1..a_n, b).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if coeff_bound < 1 or offset_bound < 0:
        raise ValueError("bounds out of range")
    if n > 24:
        raise DimensionTooLarge(f"n={n} > 24")
    estimate = (2 * coeff_bound) ** n * (2 * offset_bound + 1)
    if estimate > _POOL_CAP:
        raise PoolTooLarge(f"pool estimate {estimate} exceeds {_POOL_CAP}")

    values = [v for v in range(-coeff_bound, coeff_bound + 1) if v]
    positives = [v for v in values if v > 0]
    raw: list[tuple[tuple[int, ...], int]] = []
    for first in positives:
        for tail in itertools.product(values, repeat=n - 1):
            a = (first, *tail)
            parity = sum(a) & 1
            for b in range(-offset_bound, offset_bound + 1):
                if (b & 1) != parity:
                    continue
                g = math.gcd(*(abs(x) for x in a), abs(b))
                if g > 1:
                    continue
                raw.append((a, b))

    keep = _filter_covering(raw, n)
    keep.sort(key=lambda ab: (tuple(reversed(ab[0])), ab[1]))
    return [
        Hyperplane(tuple(Fraction(c) for c in a), Fraction(b)) for a, b in keep
    ]


def _filter_covering(raw, n):
    """Drop planes whose zero set on the cube is empty (vectorized)."""
    masks = np.arange(1 << n, dtype=np.int64)
    signs = 1 - 2 * ((masks[:, None] >> np.arange(n)[None, :]) & 1)
    keep = []
    for i in range(0, len(raw), _POOL_BLOCK):
        block = raw[i : i + _POOL_BLOCK]
        A = np.asarray([a for a, _ in block], dtype=np.int64)
        b = np.asarray([b for _, b in block], dtype=np.int64)
        hits = (signs @ A.T == -b[None, :]).any(axis=0)
        keep.extend(block[j] for j in range(len(block)) if hits[j])
    return keep


def _covered_bitsets(pool: list[Hyperplane], n: int) -> list[int]:
    out = []
    for plane in pool:
        bits = 0
        for pt in covered_set(plane):
            bits |= 1 << pt.bits
        out.append(bits)
    return out


def _canonical_root(plane: Hyperplane) -> bool:
    # Representative of the orbit under coordinate permutations and sign
    # flips (plus plane negation): coefficients positive and ascending,
    # offset nonnegative.
    a = plane.a
    return all(c > 0 for c in a) and all(a[i] <= a[i + 1] for i in range(len(a) - 1)) and plane.b >= 0


def min_cover_search(config: SearchConfig) -> SearchOutcome:
    """Iterative-deepening DFS for a cover of at most ``max_k`` pool planes.

    At each node the lowest-mask uncovered point is selected and the branch
    runs over the pool planes covering it, ordered by descending fresh
    coverage with pool order breaking ties. A node is pruned when the
    remaining budget times the best single-plane coverage cannot reach the
    uncovered count. At the root, when enabled, branching is restricted to
    orbit representatives under coordinate permutations and sign flips, which
    is sound because the pool is closed under those symmetries. Runs without
    a time budget are fully deterministic, including node counts.
    """
    n = config.n
    offset = config.offset_bound if config.offset_bound is not None else n
    pool = candidate_pool(n, config.coeff_bound, offset)
    pool_size = len(pool)

    k_lo = lower_bound(n)
    if config.max_k < k_lo:
        # Vacuous by the lower bound: nothing of this size can exist.
        return SearchOutcome(SearchStatus.EXHAUSTED_NO_COVER, None, 0, pool_size)

    cov = _covered_bitsets(pool, n)
    counts = [c.bit_count() for c in cov]
    max_cov = max(counts, default=0)
    width = 1 << n
    full = (1 << width) - 1
    covering: list[list[int]] = [[] for _ in range(width)]
    for i, c in enumerate(cov):
        m = c
        while m:
            v = (m & -m).bit_length() - 1
            covering[v].append(i)
            m &= m - 1
    roots = (
        [i for i, p in enumerate(pool) if _canonical_root(p)]
        if config.canonical_first_plane
        else None
    )

    deadline = None if config.time_budget is None else time.monotonic() + config.time_budget
    nodes = 0
    timed_out = False

    def dfs(covered: int, chosen: list[int], budget: int):
        nonlocal nodes, timed_out
        nodes += 1
        if deadline is not None and nodes % 256 == 0 and time.monotonic() > deadline:
            timed_out = True
            return None
        uncovered = full & ~covered
        if not uncovered:
            return chosen
        if budget == 0:
            return None
        if uncovered.bit_count() > budget * max_cov:
            return None
        if not chosen and roots is not None:
            cands = roots
        else:
            v = (uncovered & -uncovered).bit_length() - 1
            cands = covering[v]
        for i in sorted(cands, key=lambda i: (-(cov[i] & uncovered).bit_count(), i)):
            res = dfs(covered | cov[i], chosen + [i], budget - 1)
            if res is not None:
                return res
            if timed_out:
                return None
        return None

    for k in range(k_lo, config.max_k + 1):
        found = dfs(0, [], k)
        if timed_out:
            return SearchOutcome(SearchStatus.TIMEOUT, None, nodes, pool_size)
        if found is not None:
            family = CoverFamily(tuple(pool[i] for i in found))
            if not verify_cover(family).covered:
                raise SkewcubeError("internal error: search returned an unverified cover")
            return SearchOutcome(SearchStatus.FOUND_COVER, family, nodes, pool_size)
    return SearchOutcome(SearchStatus.EXHAUSTED_NO_COVER, None, nodes, pool_size)


def greedy_cover(n: int, pool) -> CoverFamily:
    """Repeatedly take the plane covering the most uncovered points.

    Ties break toward the earlier pool position, so feeding a canonically
    ordered pool keeps the result deterministic. Raises when the pool cannot
    finish the cover.
    """
    planes = list(pool)
    if not planes:
        raise PoolInsufficient("empty pool")
    for p in planes:
        if p.n != n:
            raise DimensionMismatch(f"pool plane has n={p.n}, expected {n}")
    cov = _covered_bitsets(planes, n)
    full = (1 << (1 << n)) - 1
    covered = 0
    chosen: list[int] = []
    while covered != full:
        best = None
        best_gain = 0
        for i, c in enumerate(cov):
            gain = (c & ~covered & full).bit_count()
            if gain > best_gain:
                best, best_gain = i, gain
        if best is None:
            missing = (full & ~covered).bit_count()
            raise PoolInsufficient(f"pool leaves {missing} points uncovered")
        chosen.append(best)
        covered |= cov[best]
    return CoverFamily(tuple(planes[i] for i in chosen))
