"""
Generalized Hamming weights of PRM codes by enumerating r-dimensional subcodes
and measuring their supports.
"""

from __future__ import annotations

import logging
import time
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional

import numpy as np
from joblib import Parallel, delayed

from src.prmweights.combinatorics.binomial import pi
from src.prmweights.combinatorics.formulas import f
from src.prmweights.config.settings import DEFAULT_WORKERS
from src.prmweights.constructions.builders import PRMCode
from src.prmweights.geometry.linalg import rref
from src.prmweights.search.enumeration import check_budget, enumerate_subspaces
from src.prmweights.search.exhaustive import ChunkResult, merge, proven_e_r_range
from src.prmweights.utils.errors import DomainError

logger = logging.getLogger(__name__)


def _min_support_chunk(G: np.ndarray, r: int, field, chunk, budget: int) -> ChunkResult:
    k = G.shape[0]
    best, witness, visited = None, None, 0
    for block in enumerate_subspaces(k, r, field, chunk, budget):
        visited += len(block)
        codewords = field.matmul(block, G)                  # (B, r, n)
        support = codewords.any(axis=1).sum(axis=1)
        low = int(support.min())
        if best is not None and low > best:
            continue
        for idx in np.nonzero(support == low)[0]:
            key = tuple(int(v) for v in block[idx].ravel())
            if best is None or low < best or key < witness:
                best, witness = low, key
    # stored negated so that merge() keeps the minimum
    return ChunkResult(best=-best if best is not None else 0, witness=witness, visited=visited)


def ghw(code: PRMCode, r: int, visit_budget: Optional[int] = None, workers: Optional[int] = None) -> int:
    """d_r = min |supp(D)| over r-dimensional subcodes D."""
    workers = DEFAULT_WORKERS if workers is None else workers
    field = code.field
    k, R = rref(code.generator, field)
    if not 1 <= r <= k:
        raise DomainError(f"r={r} outside [1, {k}] for a code of dimension {k}")
    G = R[:k]
    total = check_budget(k, r, field.q, visit_budget)
    budget = total if visit_budget is None else visit_budget

    start = time.perf_counter()
    if workers == 1:
        results = [_min_support_chunk(G, r, field, (0, 1), budget)]
    else:
        results = Parallel(n_jobs=workers)(
            delayed(_min_support_chunk)(G, r, field, (i, workers), budget) for i in range(workers)
        )
    merged = merge(results)
    logger.info("d_%d of PRM_%d(%d,%d) = %d (%d subcodes, %.2fs)",
                r, field.q, code.d, code.m, -merged.best, merged.visited, time.perf_counter() - start)
    return -merged.best


@dataclass(frozen=True)
class GHWRow:
    r: int
    d_r: int
    length_minus_f: Optional[int]   # pi_m(q) - f_r, the predicted weight
    via_e_r: Optional[int]          # pi_m(q) - exhaustive e_r when computed
    match: Optional[bool]
    theorem_range: bool = False     # a gap against length_minus_f is a failure

    def to_dict(self) -> dict:
        return asdict(self)


def ghw_table(
    code: PRMCode,
    ranks: Iterable[int],
    e_r_values: Optional[dict] = None,
    visit_budget: Optional[int] = None,
    workers: Optional[int] = None,
) -> List[GHWRow]:
    """One row per r, cross-checked against pi_m(q) - f_r and, when given, pi_m(q) - e_r."""
    n = pi(code.m, code.field.q)
    rows = []
    for r in ranks:
        d_r = ghw(code, r, visit_budget, workers)
        predicted = None
        if code.field.q >= code.d + 1 and r <= code.dimension:
            predicted = n - f(code.d, code.m, code.field.q, r)
        via_e = None if not e_r_values or r not in e_r_values else n - e_r_values[r]
        checks = [v for v in (predicted, via_e) if v is not None]
        rows.append(GHWRow(
            r=r, d_r=d_r, length_minus_f=predicted, via_e_r=via_e,
            match=None if not checks else all(v == d_r for v in checks),
            theorem_range=predicted is not None and proven_e_r_range(code.d, code.m, r),
        ))
    return rows
