"""
Dense linear algebra over GF(q) on numpy index arrays: RREF, evaluation
matrices, canonical subspaces of S_d and their vanishing sets.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from src.prmweights.gf.field import FieldSpec, field_from_json
from src.prmweights.geometry.basis import MonomialBasis, monomial_basis
from src.prmweights.geometry.points import PointSet, enumerate_projective_points
from src.prmweights.utils.errors import DomainError

logger = logging.getLogger(__name__)


def rref(M, field: FieldSpec) -> Tuple[int, np.ndarray]:
    """Reduced row-echelon form; pivots leftmost-first, pivot row = smallest usable row index.

    Returns (rank, R) where R keeps the input shape with zero rows at the bottom.
    """
    R = np.array(M, dtype=np.int64, copy=True)
    if R.ndim != 2:
        raise DomainError(f"rref needs a 2-d matrix, got shape {R.shape}")
    n_rows, n_cols = R.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        nz = np.nonzero(R[rank:, col])[0]
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            R[[rank, piv]] = R[[piv, rank]]
        R[rank] = field.vmul(R[rank], field.inv(int(R[rank, col])))
        factors = R[:, col].copy()
        factors[rank] = 0
        rows = np.nonzero(factors)[0]
        if rows.size:
            R[rows] = field.vsub(R[rows], field.vmul(factors[rows, None], R[rank][None, :]))
        rank += 1
    return rank, R


def power_table(field: FieldSpec, max_exp: int) -> np.ndarray:
    """P[a, k] = a^k with 0^0 = 1."""
    P = np.zeros((field.q, max_exp + 1), dtype=np.int64)
    P[:, 0] = 1
    for k in range(1, max_exp + 1):
        P[:, k] = field.vmul(P[:, k - 1], np.arange(field.q, dtype=np.int64))
    return P


def evaluation_matrix(X: PointSet, basis: MonomialBasis) -> np.ndarray:
    """|X| x C(m+d,d); entry (i, j) = monomial j at point i."""
    if X.m != basis.m:
        raise DomainError(f"points live in P^{X.m} but the basis is for m={basis.m}")
    field = X.field
    pts = X.coords
    P = power_table(field, basis.d)
    E = np.ones((len(X), len(basis)), dtype=np.int64)
    for c in range(basis.m + 1):
        E = field.vmul(E, P[pts[:, c][:, None], basis.exponents[:, c][None, :]])
    return E


@dataclass
class PolySubspace:
    """An r-dimensional subspace of S_d(m, F_q) held as its RREF coefficient matrix."""

    d: int
    m: int
    field: FieldSpec
    coeffs: np.ndarray

    @classmethod
    def from_rows(cls, rows, d: int, m: int, field: FieldSpec) -> "PolySubspace":
        rows = np.asarray(rows, dtype=np.int64).reshape(-1, len(monomial_basis(d, m)))
        rank, R = rref(rows, field)
        return cls(d=d, m=m, field=field, coeffs=R[:rank])

    @property
    def r(self) -> int:
        return int(self.coeffs.shape[0])

    @property
    def basis(self) -> MonomialBasis:
        return monomial_basis(self.d, self.m)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolySubspace)
            and (self.d, self.m, self.field) == (other.d, other.m, other.field)
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "m": self.m,
            "p": self.field.p,
            "e": self.field.e,
            "modulus": list(self.field.modulus),
            "rows": self.coeffs.tolist(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "PolySubspace":
        field = field_from_json(data)
        return cls.from_rows(data["rows"], int(data["d"]), int(data["m"]), field)


@dataclass
class VanishingResult:
    count: int
    points: PointSet


def vanishing_mask(coeffs: np.ndarray, E: np.ndarray, field: FieldSpec) -> np.ndarray:
    """Boolean mask over the rows of E (points) where every row of coeffs vanishes."""
    if coeffs.shape[0] == 0:
        return np.ones(E.shape[0], dtype=bool)
    values = field.matmul(E, coeffs.T)
    return ~values.any(axis=1)


def count_vanishing(W: PolySubspace, X: Optional[PointSet] = None) -> VanishingResult:
    """Points of X (default: all of P^m(F_q)) on which every element of W vanishes."""
    X = enumerate_projective_points(W.m, W.field) if X is None else X
    if X.m != W.m or X.field != W.field:
        raise DomainError("point set and subspace disagree on m or field")
    E = evaluation_matrix(X, W.basis)
    mask = vanishing_mask(W.coeffs, E, W.field)
    hits = X.subset(np.nonzero(mask)[0].tolist())
    return VanishingResult(count=len(hits), points=hits)
