"""
Plane check of the degree bound: for an r-dimensional W in S_d(2) with
omega_r(d,2) = (beta_1, beta_2, beta_3), deg_1 V(W) <= beta_1, and when
equality holds deg_0 V(W) <= beta_2.

deg_1 is the degree of gcd(W).  deg_0 is only seen through its rational
points off V(gcd), so a "true" verdict with deg_1 = beta_1 needs a Bezout
certificate on W/gcd; without one the verdict is indeterminate.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from typing import Dict, Iterable, Literal, Optional, Tuple

import numpy as np

from src.prmweights.combinatorics.binomial import binom
from src.prmweights.combinatorics.omega import omega_unrank
from src.prmweights.gf.field import FieldSpec
from src.prmweights.geometry.basis import monomial_basis
from src.prmweights.geometry.linalg import PolySubspace, evaluation_matrix, vanishing_mask
from src.prmweights.geometry.points import PointSet, enumerate_projective_points
from src.prmweights.polygcd.homgcd import HomPoly, exact_divide, find_coprime_pair, gcd_subspace
from src.prmweights.search.enumeration import iter_subspace_matrices
from src.prmweights.utils.errors import DomainError, SearchError

logger = logging.getLogger(__name__)

Verdict = Literal["true", "false", "indeterminate"]


@dataclass(frozen=True)
class BoguslavskyResult:
    r: int
    deg1: int
    rational_residual: int
    bound: Tuple[int, ...]
    within_bound: Verdict
    bezout: Optional[int] = None

    def to_dict(self) -> dict:
        return asdict(self)


def _bezout_certificate(W: PolySubspace, g: HomPoly, seed: int) -> Optional[int]:
    """Upper bound on |V(W/g)| from a coprime pair, 0 when W/g is all of S_{d-deg g}."""
    k = W.d - g.d
    if W.r == binom(k + 2, 2):
        return 0
    rows = [exact_divide(HomPoly(W.d, W.field, row), g).coeffs for row in W.coeffs]
    quotient = PolySubspace.from_rows(rows, k, 2, W.field)
    try:
        find_coprime_pair(quotient, seed=seed)
    except SearchError:
        return None
    return k * k


def boguslavsky_check_m2(
    W: PolySubspace,
    points: Optional[PointSet] = None,
    E: Optional[np.ndarray] = None,
    seed: int = 0,
) -> BoguslavskyResult:
    if W.m != 2:
        raise DomainError(f"the degree bound check is implemented for m=2, got m={W.m}")
    d, field = W.d, W.field
    beta = omega_unrank(d, 2, W.r).entries

    # a common factor of degree >= 1 caps dim W at C(d+1,2)
    g = gcd_subspace(W) if W.r <= binom(d + 1, 2) else HomPoly(0, field, np.array([1], dtype=np.int64))
    deg1 = g.d

    points = enumerate_projective_points(2, field) if points is None else points
    E = evaluation_matrix(points, W.basis) if E is None else E
    on_W = vanishing_mask(W.coeffs, E, field)
    if deg1 > 0:
        Eg = evaluation_matrix(points, monomial_basis(deg1, 2))
        on_g = vanishing_mask(g.coeffs[None, :], Eg, field)
        residual = int((on_W & ~on_g).sum())
    else:
        residual = int(on_W.sum())

    bezout = None
    if deg1 > beta[0] or (deg1 == beta[0] and residual > beta[1]):
        verdict: Verdict = "false"
    elif deg1 < beta[0]:
        verdict = "true"
    else:
        bezout = _bezout_certificate(W, g, seed)
        verdict = "true" if bezout is not None and bezout <= beta[1] else "indeterminate"
    return BoguslavskyResult(r=W.r, deg1=deg1, rational_residual=residual, bound=beta,
                             within_bound=verdict, bezout=bezout)


def boguslavsky_sweep(d: int, field: FieldSpec, ranks: Iterable[int], visit_budget: Optional[int] = None) -> Dict[str, int]:
    """Verdict counts over every subspace of the given ranks."""
    basis = monomial_basis(d, 2)
    points = enumerate_projective_points(2, field)
    E = evaluation_matrix(points, basis)
    tally = {"true": 0, "false": 0, "indeterminate": 0}
    for r in ranks:
        for coeffs in iter_subspace_matrices(len(basis), r, field, visit_budget):
            res = boguslavsky_check_m2(PolySubspace(d, 2, field, coeffs), points, E)
            tally[res.within_bound] += 1
            if res.within_bound == "false":
                logger.warning("degree bound violated at r=%d: %s", r, coeffs.tolist())
        logger.info("degree bound sweep d=%d q=%d r=%d: %s", d, field.q, r, tally)
    return tally
