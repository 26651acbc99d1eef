"""
Seeded hill climbing over r-dimensional subspaces: a lower-bound witness
finder for parameters out of exhaustive reach.
"""

from __future__ import annotations

import logging
import time
from typing import Literal, Optional

import numpy as np
from joblib import Parallel, delayed

from src.prmweights.combinatorics.formulas import H_prime, f
from src.prmweights.combinatorics.omega import omega_size
from src.prmweights.config.settings import DEFAULT_WORKERS
from src.prmweights.constructions.builders import build_lower_bound_subspace
from src.prmweights.gf.field import FieldSpec
from src.prmweights.geometry.basis import monomial_basis
from src.prmweights.geometry.linalg import PolySubspace, evaluation_matrix, rref
from src.prmweights.geometry.points import enumerate_projective_points
from src.prmweights.polygcd.homgcd import gcd_subspace
from src.prmweights.search.exhaustive import ChunkResult, merge, proven_e_r_range, vanishing_counts
from src.prmweights.state.state import SearchReport
from src.prmweights.utils.errors import DomainError

logger = logging.getLogger(__name__)

Objective = Literal["e_r", "u_r_rational"]


def _value(coeffs: np.ndarray, d: int, m: int, field: FieldSpec, E: np.ndarray, objective: Objective) -> int:
    count = int(vanishing_counts(coeffs[None, :, :], E, field)[0])
    if objective == "u_r_rational" and gcd_subspace(PolySubspace(d, m, field, coeffs)).d != 0:
        return -1
    return count


def _random_rref(rng: np.random.Generator, r: int, N: int, field: FieldSpec) -> np.ndarray:
    while True:
        rank, R = rref(rng.integers(0, field.q, size=(r, N)), field)
        if rank == r:
            return R[:r]


def _start(d: int, m: int, r: int, field: FieldSpec, rng: np.random.Generator) -> np.ndarray:
    if m <= r and field.q >= d:
        return build_lower_bound_subspace(d, m, r, field).W.coeffs
    return _random_rref(rng, r, omega_size(d, m), field)


def _chain(
    objective: Objective, d: int, m: int, r: int, field: FieldSpec, E: np.ndarray,
    seed_seq: np.random.SeedSequence, iterations: int,
) -> ChunkResult:
    rng = np.random.default_rng(seed_seq)
    N = E.shape[1]
    current = _start(d, m, r, field, rng)
    value = _value(current, d, m, field, E, objective)
    best, witness = value, tuple(int(v) for v in current.ravel())
    visited = 1
    for _ in range(iterations):
        trial = current.copy()
        trial[rng.integers(0, r)] = rng.integers(0, field.q, size=N)
        rank, R = rref(trial, field)
        if rank < r:
            continue
        R = R[:r]
        visited += 1
        v = _value(R, d, m, field, E, objective)
        if v >= value:
            current, value = R, v
            key = tuple(int(x) for x in R.ravel())
            if v > best or (v == best and key < witness):
                best, witness = v, key
    return ChunkResult(best=best, witness=witness, visited=visited)


def randomized_search(
    objective: Objective,
    d: int,
    m: int,
    field: FieldSpec,
    r: int,
    seed: int = 0,
    iterations: int = 2000,
    chains: int = 1,
    workers: Optional[int] = None,
) -> SearchReport:
    """Hill climbing from the extremal construction (or a random subspace); deterministic per seed."""
    if not 1 <= r <= omega_size(d, m):
        raise DomainError(f"r={r} outside [1, {omega_size(d, m)}]")
    if objective == "u_r_rational" and m != 2:
        raise DomainError(f"the gcd filter is only sound in the plane, got m={m}")
    workers = DEFAULT_WORKERS if workers is None else workers
    E = evaluation_matrix(enumerate_projective_points(m, field), monomial_basis(d, m))
    seeds = np.random.SeedSequence(seed).spawn(chains)

    logger.info("randomized %s d=%d m=%d q=%d r=%d: %d chains x %d steps, seed=%d",
                objective, d, m, field.q, r, chains, iterations, seed)
    start = time.perf_counter()
    if workers == 1 or chains == 1:
        results = [_chain(objective, d, m, r, field, E, s, iterations) for s in seeds]
    else:
        results = Parallel(n_jobs=workers)(
            delayed(_chain)(objective, d, m, r, field, E, s, iterations) for s in seeds
        )
    merged = merge(results)
    elapsed = time.perf_counter() - start
    logger.info("randomized search done in %.2fs, best=%d", elapsed, merged.best)

    if objective == "e_r":
        expected = f(d, m, field.q, r) if field.q >= d + 1 else None
        # a witness above f inside the proven plane range would contradict the theorem
        match = None if expected is None else merged.best <= expected
        theorem = expected is not None and proven_e_r_range(d, m, r)
    else:
        expected = H_prime(d, 2, r - 1) if r >= 2 else None
        match = None if expected is None else merged.best <= expected
        theorem = expected is not None
    return SearchReport(
        mode="randomized", objective=objective, d=d, m=m, p=field.p, e=field.e, q=field.q, r=r,
        best_value=merged.best,
        witness=np.array(merged.witness, dtype=np.int64).reshape(r, -1).tolist(),
        visited=merged.visited, seed=seed, expected=expected, match=match,
        theorem_range=theorem, wall_time=elapsed,
    )
