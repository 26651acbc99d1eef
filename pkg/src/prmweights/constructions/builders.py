"""
Explicit builders: the extremal subspaces W with their rational grids Y,
reduced complete-intersection grids in the plane, and PRM generator matrices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.prmweights.combinatorics.binomial import pi
from src.prmweights.combinatorics.formulas import H_prime
from src.prmweights.combinatorics.omega import iter_omega, omega_prime_unrank, omega_size
from src.prmweights.config.settings import DEFAULT_POINT_BUDGET
from src.prmweights.gf.field import FieldSpec
from src.prmweights.geometry.basis import monomial_basis
from src.prmweights.geometry.linalg import PolySubspace, count_vanishing, evaluation_matrix, rref
from src.prmweights.geometry.points import PointSet, enumerate_projective_points, grid_points
from src.prmweights.geometry.polynomials import Poly, linear_form, poly_mul, poly_prod, to_vector
from src.prmweights.polygcd.homgcd import HomPoly
from src.prmweights.utils.errors import ConstructionError, DomainError

logger = logging.getLogger(__name__)


# =============================================================================
#               1. Roots
# =============================================================================

def default_roots(d: int, field: FieldSpec) -> List[int]:
    """The first d-1 nonzero elements in index order, then 0."""
    if field.q < d:
        raise DomainError(f"GF({field.q}) has fewer than d={d} elements")
    return list(range(1, d)) + [0]


def _check_roots(roots: Sequence[int], d: int, field: FieldSpec) -> List[int]:
    roots = [int(a) for a in roots]
    if len(roots) != d:
        raise ConstructionError(f"need exactly d={d} roots, got {len(roots)}")
    if len(set(roots)) != d:
        raise ConstructionError(f"roots {roots} are not distinct")
    if any(not 0 <= a < field.q for a in roots):
        raise ConstructionError(f"roots {roots} are not elements of GF({field.q})")
    if roots[-1] != 0:
        raise ConstructionError("the last root must be 0")
    return roots


# =============================================================================
#               2. Extremal subspace W and its grid Y
# =============================================================================

def _monomials_in(variables: Sequence[int], degree: int, n_vars: int) -> List[Poly]:
    if degree < 0:
        return []
    out = []
    for t in iter_omega(degree, len(variables) - 1):
        e = [0] * n_vars
        for var, power in zip(variables, t.entries):
            e[var] = power
        out.append({tuple(e): 1})
    return out


def _root_product(i: int, roots: Sequence[int], n_vars: int, field: FieldSpec) -> Poly:
    """prod_j (x_i - a_j x_0) over the given roots."""
    return poly_prod((linear_form(n_vars, i, a, field) for a in roots), n_vars, field)


def _alpha(d: int, m: int, r: int) -> Tuple[int, ...]:
    return omega_prime_unrank(d, m, r - (m - 1)).entries


def _generators(d: int, m: int, r: int, field: FieldSpec, roots: Sequence[int]) -> List[Poly]:
    n = m + 1
    if r == omega_size(d, m):
        return [{tuple(int(v) for v in e): 1} for e in monomial_basis(d, m).exponents]

    alpha = _alpha(d, m, r)
    l = next(i for i in range(1, m + 1) if alpha[i - 1])
    F = [None] + [_root_product(i, roots, n, field) for i in range(1, m + 1)]
    g = [None] + [_root_product(i, roots[: alpha[i - 1]], n, field) for i in range(1, m + 1)]

    gens: List[Poly] = []
    prefix: Poly = {(0,) * n: 1}
    used = 0
    for i in range(1, m):
        prefix = poly_mul(prefix, g[i], field)
        used += alpha[i - 1]
        x_i = [0] * n
        x_i[i] = 1
        head = poly_mul(prefix, {tuple(x_i): 1}, field)
        for mono in _monomials_in([0] + list(range(i, m + 1)), d - 1 - used, n):
            gens.append(poly_mul(head, mono, field))
    prefix = poly_mul(prefix, g[m], field)
    used += alpha[m - 1]
    for mono in _monomials_in([0, m], d - used, n):
        gens.append(poly_mul(prefix, mono, field))
    gens.extend(F[l + 1:])
    return gens


def build_grid_Y(d: int, m: int, r: int, field: FieldSpec, roots: Optional[Sequence[int]] = None) -> PointSet:
    """Y = union over i >= l of V(x_1..x_{i-1}, g_i, F_{i+1}..F_m)."""
    roots = _check_roots(default_roots(d, field) if roots is None else roots, d, field)
    if not m <= r <= omega_size(d, m):
        raise DomainError(f"r={r} outside [{m}, {omega_size(d, m)}]")
    if r == omega_size(d, m):
        return PointSet(m=m, field=field)
    alpha = _alpha(d, m, r)
    Y = PointSet(m=m, field=field)
    for i in range(1, m + 1):
        if not alpha[i - 1]:
            continue
        lists = [[0]] * (i - 1) + [roots[: alpha[i - 1]]] + [roots] * (m - i)
        Y = Y.union(grid_points(lists, field))
    return Y


@dataclass
class ConstructionReport:
    d: int
    m: int
    r: int
    roots: List[int]
    W: PolySubspace
    expected_Y: PointSet
    claimed_dim: int
    claimed_lower_bound: int
    verified_dim: int
    verified_count: int
    rational_count: Optional[int]
    expected_exact: bool

    @property
    def ok(self) -> bool:
        exact = self.verified_count == self.claimed_lower_bound if self.expected_exact else True
        return (
            self.verified_dim == self.claimed_dim
            and self.verified_count >= self.claimed_lower_bound
            and exact
            and (self.rational_count is None or self.rational_count == self.verified_count)
        )

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "m": self.m,
            "r": self.r,
            "field": self.W.field.to_json(),
            "roots": self.roots,
            "claimed_dim": self.claimed_dim,
            "claimed_lower_bound": self.claimed_lower_bound,
            "verified_dim": self.verified_dim,
            "verified_count": self.verified_count,
            "rational_count": self.rational_count,
            "expected_exact": self.expected_exact,
            "ok": self.ok,
            "W": self.W.to_json(),
            "expected_Y": self.expected_Y.to_json(),
        }


def build_lower_bound_subspace(
    d: int,
    m: int,
    r: int,
    field: FieldSpec,
    roots: Optional[Sequence[int]] = None,
    point_budget: Optional[int] = None,
) -> ConstructionReport:
    """W = W_1 + ... + W_m + <F_{l+1}, ..., F_m>, checked to have dimension r.

    V(W) sits inside the rational grid V(F_1, ..., F_m), so scanning that grid
    over GF(q) counts V(W) over the algebraic closure exactly.
    """
    if d < 1 or m < 1:
        raise DomainError(f"need d, m >= 1, got d={d}, m={m}")
    if not m <= r <= omega_size(d, m):
        raise DomainError(f"r={r} outside [{m}, {omega_size(d, m)}]")
    roots = _check_roots(default_roots(d, field) if roots is None else roots, d, field)

    basis = monomial_basis(d, m)
    rows = np.array([to_vector(p, basis) for p in _generators(d, m, r, field, roots)], dtype=np.int64)
    rank, R = rref(rows.reshape(-1, len(basis)), field)
    if rank != r:
        raise ConstructionError(f"constructed subspace has dimension {rank}, expected {r} (d={d}, m={m})")
    W = PolySubspace(d=d, m=m, field=field, coeffs=R[:rank])

    grid = grid_points([roots] * m, field)
    verified = count_vanishing(W, grid)

    budget = DEFAULT_POINT_BUDGET if point_budget is None else point_budget
    rational = None
    if pi(m, field.q) <= budget:
        rational = count_vanishing(W, enumerate_projective_points(m, field, budget)).count

    Y = build_grid_Y(d, m, r, field, roots)
    if not Y.is_subset_of(verified.points):
        raise ConstructionError("grid Y is not contained in V(W)")

    claimed = 0 if r == omega_size(d, m) else H_prime(d, m, r - (m - 1))
    report = ConstructionReport(
        d=d, m=m, r=r, roots=roots, W=W, expected_Y=Y,
        claimed_dim=r, claimed_lower_bound=claimed,
        verified_dim=rank, verified_count=verified.count,
        rational_count=rational, expected_exact=(m == 2),
    )
    logger.info(
        "construction d=%d m=%d r=%d over GF(%d): dim=%d count=%d claim=%d",
        d, m, r, field.q, rank, verified.count, claimed,
    )
    return report


# =============================================================================
#               3. Plane complete-intersection grids
# =============================================================================

def build_ci_grid(a_roots: Sequence[int], b_roots: Sequence[int], field: FieldSpec) -> Tuple[HomPoly, HomPoly, PointSet]:
    """F = prod (x_1 - alpha x_0), G = prod (x_2 - beta x_0) and their a*b common points."""
    a_roots, b_roots = [int(v) for v in a_roots], [int(v) for v in b_roots]
    for name, rs in (("a", a_roots), ("b", b_roots)):
        if not rs:
            raise ConstructionError(f"{name}_roots is empty")
        if len(set(rs)) != len(rs):
            raise ConstructionError(f"{name}_roots {rs} are not distinct")
    F = HomPoly.from_poly(_root_product(1, a_roots, 3, field), len(a_roots), field)
    G = HomPoly.from_poly(_root_product(2, b_roots, 3, field), len(b_roots), field)
    return F, G, grid_points([a_roots, b_roots], field)


# =============================================================================
#               4. PRM generator matrices
# =============================================================================

@dataclass
class PRMCode:
    d: int
    m: int
    field: FieldSpec
    points: PointSet
    evaluation: np.ndarray  # pi_m(q) x C(m+d,d)
    dimension: int

    @property
    def length(self) -> int:
        return len(self.points)

    @property
    def generator(self) -> np.ndarray:
        """C(m+d,d) x pi_m(q); row j is the codeword of monomial j."""
        return self.evaluation.T


def prm_generator_matrix(d: int, m: int, field: FieldSpec, point_budget: Optional[int] = None) -> PRMCode:
    points = enumerate_projective_points(m, field, point_budget)
    E = evaluation_matrix(points, monomial_basis(d, m))
    dimension, _ = rref(E.T, field)
    if field.q >= d + 1 and dimension != omega_size(d, m):
        raise ConstructionError(f"PRM_{field.q}({d},{m}) has dimension {dimension}, expected {omega_size(d, m)}")
    logger.info("PRM_%d(%d,%d): [%d, %d]", field.q, d, m, len(points), dimension)
    return PRMCode(d=d, m=m, field=field, points=points, evaluation=E, dimension=dimension)
