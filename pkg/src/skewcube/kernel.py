"""The top-coefficient linear system and its kernel certificate.

For nonzero coefficients a_1..a_n and degree d, the system has one equation
per (d+1)-subset T: sum over j in T of a_j * c_{T minus j} = 0. Rows are the
(d+1)-subsets and columns the d-subsets, both in colex order, so each row has
exactly d+1 nonzeros sitting under the subsets of its own index. The kernel
is trivial whenever n >= 2d + 1, and ``kernel_dim`` certifies that by exact
computation.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .cube import exact
from .errors import SystemTooLarge, ZeroCoefficient
from .linalg import elimination_block, exact_nullity, modp_rank
from .subsets import colex_rank, subsets_colex

_MAX_ROWS = 1_000_000


@dataclass(frozen=True)
class KernelSystem:
    """Sparse matrix of the top-coefficient equations for one coefficient vector."""

    n: int
    d: int
    a: tuple[Fraction, ...]
    row_subsets: tuple[tuple[int, ...], ...]
    # Per row, the (column index, coefficient) pairs sorted by column.
    rows: tuple[tuple[tuple[int, Fraction], ...], ...]

    @property
    def num_rows(self) -> int:
        return len(self.row_subsets)

    @property
    def num_cols(self) -> int:
        return math.comb(self.n, self.d)

    def dense(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.num_cols for _ in range(self.num_rows)]
        for i, row in enumerate(self.rows):
            for col, coeff in row:
                out[i][col] = coeff
        return out

    def apply(self, c: Sequence) -> tuple[Fraction, ...]:
        """Matrix-vector product A c over exact rationals."""
        vec = [exact(x) for x in c]
        if len(vec) != self.num_cols:
            raise ValueError(f"expected {self.num_cols} entries, got {len(vec)}")
        return tuple(
            sum((coeff * vec[col] for col, coeff in row), Fraction(0))
            for row in self.rows
        )


def build_system(a: Sequence, d: int) -> KernelSystem:
    """Assemble the sparse system for coefficients ``a`` and degree ``d``."""
    coeffs = tuple(exact(v) for v in a)
    n = len(coeffs)
    if any(c == 0 for c in coeffs):
        raise ZeroCoefficient("all coefficients must be nonzero")
    if not 0 <= d < n:
        raise ValueError(f"need 0 <= d < n, got d={d}, n={n}")
    if math.comb(n, d + 1) > _MAX_ROWS:
        raise SystemTooLarge(f"{math.comb(n, d + 1)} rows exceed the cap {_MAX_ROWS}")
    subs = []
    rows = []
    for T in subsets_colex(n, d + 1):
        entries = sorted(
            (colex_rank(T[:pos] + T[pos + 1 :]), coeffs[j - 1])
            for pos, j in enumerate(T)
        )
        subs.append(T)
        rows.append(tuple(entries))
    return KernelSystem(n, d, coeffs, tuple(subs), tuple(rows))


def _int_row_blocks(subs, a_int: list[int], ncols: int, block: int):
    for i in range(0, len(subs), block):
        chunk = subs[i : i + block]
        out = np.zeros((len(chunk), ncols), dtype=np.int64)
        for r, T in enumerate(chunk):
            for pos, j in enumerate(T):
                out[r, colex_rank(T[:pos] + T[pos + 1 :])] = a_int[j - 1]
        yield out


def kernel_dim(system: KernelSystem) -> int:
    """Exact nullity of the system over the rationals.

    Scaling all coefficients by their common denominator leaves the kernel
    unchanged, so the computation runs on integers. A mod-p pass that pivots
    every column (nullity 0) or every row (nullity = cols - rows) is an exact
    certificate; anything else is recomputed with fraction-free elimination.
    """
    den = math.lcm(*(c.denominator for c in system.a))
    a_int = [int(c * den) for c in system.a]
    ncols = system.num_cols
    # Row order is irrelevant to the rank; a fixed shuffle keeps the first
    # elimination block from being biased toward low-label subsets.
    subs = list(system.row_subsets)
    block = elimination_block(ncols)
    if len(subs) > block:
        random.Random("kernel-rows").shuffle(subs)
    rank, certified = modp_rank(_int_row_blocks(subs, a_int, ncols, block), ncols)
    if certified:
        return ncols - rank

    def int_rows():
        for T in system.row_subsets:
            row = [0] * ncols
            for pos, j in enumerate(T):
                row[colex_rank(T[:pos] + T[pos + 1 :])] = a_int[j - 1]
            yield row

    return exact_nullity(int_rows(), ncols)


def base_case_det(a1, a2, a3) -> Fraction:
    """Determinant of the 3x3 degree-1 system matrix; identically 2*a1*a2*a3."""
    return 2 * exact(a1) * exact(a2) * exact(a3)


def product_vector(a: Sequence, d: int, K) -> tuple[Fraction, ...]:
    """The vector c with c_S = K * prod of a_i over S, d-subsets in colex order.

    Applying the system to it scales each row T by (d+1) * K * prod over T,
    so it lies in the kernel only for K = 0.
    """
    coeffs = tuple(exact(v) for v in a)
    if any(c == 0 for c in coeffs):
        raise ZeroCoefficient("all coefficients must be nonzero")
    scale = exact(K)
    out = []
    for S in subsets_colex(len(coeffs), d):
        prod = scale
        for j in S:
            prod *= coeffs[j - 1]
        out.append(prod)
    return tuple(out)
