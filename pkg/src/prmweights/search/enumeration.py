"""
Enumeration of r-dimensional subspaces of GF(q)^N by their RREF matrices.

Outer loop: pivot column sets in lexicographic order.  Inner loop: every
filling of the free entries, produced in vectorized blocks.  A chunk
(index, count) keeps the pivot sets whose position is congruent to index mod
count, so disjoint chunks cover the stream exactly once.
"""

from __future__ import annotations

import itertools
import logging
from typing import Iterator, List, Optional, Tuple

import numpy as np

from src.prmweights.config.settings import DEFAULT_VISIT_BUDGET
from src.prmweights.gf.field import FieldSpec
from src.prmweights.utils.errors import BudgetExceededError, DomainError

logger = logging.getLogger(__name__)

BATCH_SIZE = 4096


def gaussian_binomial(N: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of GF(q)^N."""
    if not 0 <= r <= N:
        raise DomainError(f"need 0 <= r <= N, got N={N}, r={r}")
    num, den = 1, 1
    for i in range(r):
        num *= q**N - q**i
        den *= q**r - q**i
    return num // den


def check_budget(N: int, r: int, q: int, budget: Optional[int] = None) -> int:
    budget = DEFAULT_VISIT_BUDGET if budget is None else budget
    total = gaussian_binomial(N, r, q)
    if total > budget:
        raise BudgetExceededError(
            f"{total} subspaces of dimension {r} in GF({q})^{N} exceed the visit budget {budget}; "
            "use randomized mode",
            total,
            budget,
        )
    return total


def _free_positions(pivots: Tuple[int, ...], N: int) -> List[Tuple[int, int]]:
    pivot_set = set(pivots)
    return [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, N) if c not in pivot_set]


def iter_pivot_blocks(
    pivots: Tuple[int, ...], N: int, field: FieldSpec, batch_size: int = BATCH_SIZE
) -> Iterator[np.ndarray]:
    """All RREF matrices with the given pivot columns, as (B, r, N) blocks."""
    r, q = len(pivots), field.q
    free = _free_positions(pivots, N)
    base = np.zeros((r, N), dtype=np.int64)
    base[np.arange(r), list(pivots)] = 1
    total = q ** len(free)
    rows = np.array([i for i, _ in free], dtype=np.int64)
    cols = np.array([c for _, c in free], dtype=np.int64)
    places = q ** np.arange(len(free) - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, batch_size):
        ks = np.arange(start, min(start + batch_size, total), dtype=np.int64)
        block = np.broadcast_to(base, (len(ks), r, N)).copy()
        if free:
            block[:, rows, cols] = (ks[:, None] // places[None, :]) % q
        yield block


def enumerate_subspaces(
    N: int,
    r: int,
    field: FieldSpec,
    chunk: Tuple[int, int] = (0, 1),
    visit_budget: Optional[int] = None,
    batch_size: int = BATCH_SIZE,
) -> Iterator[np.ndarray]:
    """Stream (B, r, N) blocks of RREF matrices; each subspace appears exactly once overall."""
    check_budget(N, r, field.q, visit_budget)
    index, count = chunk
    if not 0 <= index < count:
        raise DomainError(f"bad chunk {chunk}")
    for position, pivots in enumerate(itertools.combinations(range(N), r)):
        if position % count != index:
            continue
        yield from iter_pivot_blocks(pivots, N, field, batch_size)


def iter_subspace_matrices(N: int, r: int, field: FieldSpec, visit_budget: Optional[int] = None) -> Iterator[np.ndarray]:
    """One RREF matrix at a time, in enumeration order."""
    for block in enumerate_subspaces(N, r, field, visit_budget=visit_budget):
        yield from block
