"""
Exhaustive maximization of |V(W)(F_q)| over r-dimensional W in S_d(m, F_q),
optionally restricted to gcd(W) = 1 in the plane.

Work is split into chunks of pivot sets and run with joblib; chunk results
are merged by (value, then lexicographically smallest RREF witness), so the
answer does not depend on the worker count.
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
from joblib import Parallel, delayed

from src.prmweights.combinatorics.binomial import binom
from src.prmweights.combinatorics.formulas import H_prime, f
from src.prmweights.combinatorics.omega import omega_size
from src.prmweights.config.settings import DEFAULT_WORKERS
from src.prmweights.gf.field import FieldSpec
from src.prmweights.geometry.basis import monomial_basis
from src.prmweights.geometry.linalg import PolySubspace, evaluation_matrix
from src.prmweights.geometry.points import enumerate_projective_points
from src.prmweights.polygcd.homgcd import gcd_subspace
from src.prmweights.search.enumeration import check_budget, enumerate_subspaces
from src.prmweights.state.state import SearchReport
from src.prmweights.utils.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass
class ChunkResult:
    best: int
    witness: Optional[Tuple[int, ...]]
    visited: int

    def better_than(self, other: "ChunkResult") -> bool:
        if self.witness is None:
            return False
        if other.witness is None:
            return True
        if self.best != other.best:
            return self.best > other.best
        return self.witness < other.witness


def merge(results: List[ChunkResult]) -> ChunkResult:
    out = ChunkResult(best=-1, witness=None, visited=0)
    for res in results:
        if res.better_than(out):
            out = ChunkResult(res.best, res.witness, out.visited)
        out.visited += res.visited
    return out


def vanishing_counts(block: np.ndarray, E: np.ndarray, field: FieldSpec) -> np.ndarray:
    """|V(W)| over the rows of E for every matrix W in a (B, r, N) block."""
    values = field.matmul(block, E.T)          # (B, r, points)
    return (~values.any(axis=1)).sum(axis=1)


def _batch_rows(E: np.ndarray, r: int) -> int:
    # keep (B, r, points) around a few million entries
    return max(64, 4_000_000 // max(1, r * E.shape[0]))


def _scan_chunk(
    d: int, m: int, r: int, field: FieldSpec, E: np.ndarray,
    chunk: Tuple[int, int], visit_budget: int, gcd_filter: bool,
) -> ChunkResult:
    N = E.shape[1]
    # a common factor of degree >= 1 caps dim W at C(d+1,2)
    if gcd_filter and r > binom(d + 1, 2):
        gcd_filter = False
    best, witness, visited = -1, None, 0
    for block in enumerate_subspaces(N, r, field, chunk, visit_budget, _batch_rows(E, r)):
        visited += len(block)
        counts = vanishing_counts(block, E, field)
        flat = block.reshape(len(block), -1)
        # candidates by count desc, then lex order
        order = np.lexsort(tuple(flat.T[::-1]) + (-counts,))
        for idx in order:
            c = int(counts[idx])
            if c < best:
                break
            key = tuple(int(v) for v in flat[idx])
            if c == best and witness is not None and key >= witness:
                break
            if gcd_filter:
                W = PolySubspace(d=d, m=m, field=field, coeffs=block[idx])
                if gcd_subspace(W).d != 0:
                    continue
            best, witness = c, key
            break
    return ChunkResult(best=best, witness=witness, visited=visited)


def _run(
    d: int, m: int, field: FieldSpec, r: int, gcd_filter: bool,
    workers: Optional[int], visit_budget: Optional[int],
) -> Tuple[ChunkResult, float]:
    workers = DEFAULT_WORKERS if workers is None else workers
    N = omega_size(d, m)
    total = check_budget(N, r, field.q, visit_budget)
    points = enumerate_projective_points(m, field)
    E = evaluation_matrix(points, monomial_basis(d, m))
    budget = total if visit_budget is None else visit_budget

    logger.info(
        "exhaustive search d=%d m=%d q=%d r=%d: %d subspaces, %d workers%s",
        d, m, field.q, r, total, workers, " (gcd filter)" if gcd_filter else "",
    )
    start = time.perf_counter()
    n_chunks = max(1, workers)
    if n_chunks == 1:
        results = [_scan_chunk(d, m, r, field, E, (0, 1), budget, gcd_filter)]
    else:
        results = Parallel(n_jobs=workers)(
            delayed(_scan_chunk)(d, m, r, field, E, (i, n_chunks), budget, gcd_filter) for i in range(n_chunks)
        )
    merged = merge(results)
    elapsed = time.perf_counter() - start
    logger.info("visited %d subspaces in %.2fs, best=%d", merged.visited, elapsed, merged.best)
    if merged.visited != total:
        raise AssertionError(f"visited {merged.visited} subspaces, expected {total}")
    return merged, elapsed


def proven_e_r_range(d: int, m: int, r: int) -> bool:
    """Cases where e_r = f_r is a theorem rather than a conjecture (q >= d+1 assumed)."""
    return m == 2 or d == 1 or r == 1


def _witness_rows(witness: Optional[Tuple[int, ...]], r: int) -> List[List[int]]:
    if witness is None:
        return []
    return np.array(witness, dtype=np.int64).reshape(r, -1).tolist()


def exhaustive_e_r(
    d: int, m: int, field: FieldSpec, r: int,
    workers: Optional[int] = None, visit_budget: Optional[int] = None,
) -> SearchReport:
    """e_r(d,m;q) by visiting every r-dimensional subspace; compared against f_r when q >= d+1."""
    if not 1 <= r <= omega_size(d, m):
        raise DomainError(f"r={r} outside [1, {omega_size(d, m)}]")
    merged, elapsed = _run(d, m, field, r, False, workers, visit_budget)
    expected = f(d, m, field.q, r) if field.q >= d + 1 and d >= 1 else None
    return SearchReport(
        mode="exhaustive", objective="e_r", d=d, m=m, p=field.p, e=field.e, q=field.q, r=r,
        best_value=merged.best, witness=_witness_rows(merged.witness, r), visited=merged.visited,
        expected=expected, match=None if expected is None else merged.best == expected,
        theorem_range=expected is not None and proven_e_r_range(d, m, r),
        wall_time=elapsed,
    )


def exhaustive_u_r_rational(
    d: int, field: FieldSpec, r: int,
    workers: Optional[int] = None, visit_budget: Optional[int] = None, m: int = 2,
) -> SearchReport:
    """max |V(W)(F_q)| over gcd(W) = 1, a lower bound for u_r(d,2) that equals H'_{r-1}(d,2) once q >= d."""
    if m != 2:
        raise DomainError(f"the gcd filter is only sound in the plane, got m={m}")
    if not 2 <= r <= binom(d + 2, 2):
        raise DomainError(f"r={r} outside [2, {binom(d + 2, 2)}]")
    if field.q < d:
        logger.warning(
            "q=%d < d=%d: rational points may miss the closure, u_r comparison is outside the proven range",
            field.q, d,
        )
    merged, elapsed = _run(d, 2, field, r, True, workers, visit_budget)
    expected = H_prime(d, 2, r - 1)
    return SearchReport(
        mode="exhaustive", objective="u_r_rational", d=d, m=2, p=field.p, e=field.e, q=field.q, r=r,
        best_value=merged.best, witness=_witness_rows(merged.witness, r), visited=merged.visited,
        expected=expected, match=merged.best == expected, theorem_range=field.q >= d,
        wall_time=elapsed,
    )
