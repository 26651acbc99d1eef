"""
GCDs of homogeneous polynomials in x_0, x_1, x_2 over GF(q).

gcd(f, g) = x_0^v * homogenize(gcd(f'(1,x_1,x_2), g'(1,x_1,x_2))) where x_0^v is
the common x_0 power and f', g' are f, g with their own x_0 powers removed.
The affine gcd is the primitive Euclidean algorithm in x_2 over GF(q)[x_1].
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np

from src.prmweights.gf.field import FieldSpec
from src.prmweights.geometry.basis import monomial_basis
from src.prmweights.geometry.linalg import PolySubspace
from src.prmweights.geometry.polynomials import Poly, from_vector, poly_mul, to_vector
from src.prmweights.polygcd import univariate as U
from src.prmweights.utils.errors import DomainError, SearchError

logger = logging.getLogger(__name__)

# bivariate in (x_1, x_2): index = power of x_2, entry = univariate in x_1
BiPoly = List[U.UPoly]


@dataclass
class HomPoly:
    """A degree-d form in x_0, x_1, x_2 with dense coefficients in the degree-d basis."""

    d: int
    field: FieldSpec
    coeffs: np.ndarray

    @classmethod
    def from_poly(cls, f: Poly, d: int, field: FieldSpec) -> "HomPoly":
        if any(sum(e) != d or len(e) != 3 for e in f):
            raise DomainError(f"polynomial is not a ternary form of degree {d}")
        return cls(d=d, field=field, coeffs=to_vector(f, monomial_basis(d, 2)))

    @classmethod
    def zero(cls, d: int, field: FieldSpec) -> "HomPoly":
        return cls(d=d, field=field, coeffs=np.zeros(len(monomial_basis(d, 2)), dtype=np.int64))

    def to_poly(self) -> Poly:
        return from_vector(self.coeffs, monomial_basis(self.d, 2))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def monic(self) -> "HomPoly":
        nz = np.nonzero(self.coeffs)[0]
        if nz.size == 0:
            return self
        inv = self.field.inv(int(self.coeffs[nz[0]]))
        return HomPoly(self.d, self.field, self.field.vmul(self.coeffs, inv))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HomPoly)
            and self.d == other.d
            and self.field == other.field
            and np.array_equal(self.coeffs, other.coeffs)
        )

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*x^{e}" for e, c in sorted(self.to_poly().items(), reverse=True))
        return f"HomPoly(d={self.d}, {terms or '0'})"


def degree(f: HomPoly) -> int:
    return -1 if f.is_zero() else f.d


def hom_mul(f: HomPoly, g: HomPoly) -> HomPoly:
    if f.field != g.field:
        raise DomainError("operands belong to different fields")
    return HomPoly.from_poly(poly_mul(f.to_poly(), g.to_poly(), f.field), f.d + g.d, f.field)


def exact_divide(f: HomPoly, g: HomPoly) -> HomPoly:
    """f / g, raising DomainError when g does not divide f.

    Lex-leading-term division; a single divisor is its own Groebner basis, so
    a non-divisible leading term proves g does not divide f.
    """
    if g.is_zero():
        raise DomainError("division by the zero polynomial")
    F = f.field
    if f.d < g.d:
        if f.is_zero():
            return HomPoly.zero(0, F)
        raise DomainError("divisor has larger degree")
    rem = dict(f.to_poly())
    gp = g.to_poly()
    g_lead = max(gp)
    g_inv = F.inv(gp[g_lead])
    quot: Poly = {}
    while rem:
        lead = max(rem)
        shift = tuple(a - b for a, b in zip(lead, g_lead))
        if min(shift) < 0:
            raise DomainError("divisor does not divide the dividend")
        c = F.mul(rem[lead], g_inv)
        quot[shift] = c
        for e, v in gp.items():
            t = tuple(a + b for a, b in zip(e, shift))
            nv = F.sub(rem.get(t, 0), F.mul(c, v))
            if nv:
                rem[t] = nv
            else:
                rem.pop(t, None)
    return HomPoly.from_poly(quot, f.d - g.d, F)


# ------------------------------------------------------------------
# Bivariate helpers
# ------------------------------------------------------------------
def _bi_trim(A: BiPoly) -> BiPoly:
    A = [U.trim(c) for c in A]
    while A and not A[-1]:
        A.pop()
    return A


def _split_x0(f: HomPoly) -> Tuple[int, BiPoly]:
    """(v, f/x_0^v evaluated at x_0 = 1)."""
    terms = f.to_poly()
    v = min(e[0] for e in terms)
    deg2 = max(e[2] for e in terms)
    deg1 = max(e[1] for e in terms)
    A: BiPoly = [[0] * (deg1 + 1) for _ in range(deg2 + 1)]
    for (a, b, c), coeff in terms.items():
        A[c][b] = coeff
    return v, _bi_trim(A)


def _content(A: BiPoly, F: FieldSpec) -> U.UPoly:
    c: U.UPoly = []
    for coeff in A:
        c = U.gcd(c, coeff, F)
        if len(c) == 1:
            break
    return c


def _primitive(A: BiPoly, F: FieldSpec) -> BiPoly:
    A = _bi_trim(A)
    if not A:
        return A
    c = _content(A, F)
    return _bi_trim([U.divmod_(coeff, c, F)[0] for coeff in A])


def _prem(A: BiPoly, B: BiPoly, F: FieldSpec) -> BiPoly:
    """Pseudo-remainder of A by B in x_2."""
    R = _bi_trim(A)
    lb = B[-1]
    while R and len(R) >= len(B):
        shift = len(R) - len(B)
        lr = R[-1]
        R = [U.mul(coeff, lb, F) for coeff in R]
        for i, bc in enumerate(B):
            R[shift + i] = U.sub(R[shift + i], U.mul(lr, bc, F), F)
        R = _bi_trim(R)
    return R


def _bi_gcd(A: BiPoly, B: BiPoly, F: FieldSpec) -> BiPoly:
    ca, cb = _content(A, F), _content(B, F)
    c = U.gcd(ca, cb, F)
    A, B = _primitive(A, F), _primitive(B, F)
    if len(A) < len(B):
        A, B = B, A
    while B:
        A, B = B, _primitive(_prem(A, B, F), F)
    return _bi_trim([U.mul(coeff, c, F) for coeff in A])


def _homogenize(A: BiPoly, v: int, F: FieldSpec) -> HomPoly:
    total = max((b + c for c, coeff in enumerate(A) for b, x in enumerate(coeff) if x), default=0)
    terms: Poly = {}
    for c, coeff in enumerate(A):
        for b, x in enumerate(coeff):
            if x:
                terms[(total - b - c + v, b, c)] = x
    return HomPoly.from_poly(terms, total + v, F).monic()


# ------------------------------------------------------------------
# Public API
# ------------------------------------------------------------------
def gcd_pair(f: HomPoly, g: HomPoly) -> HomPoly:
    """Monic gcd (first nonzero coefficient in basis order equal to 1)."""
    if f.field != g.field:
        raise DomainError("operands belong to different fields")
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd of two zero polynomials")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    F = f.field
    vf, A = _split_x0(f)
    vg, B = _split_x0(g)
    return _homogenize(_bi_gcd(A, B, F), min(vf, vg), F)


def _rows(W: PolySubspace) -> List[HomPoly]:
    if W.m != 2:
        raise DomainError(f"gcds are only available in the plane, got m={W.m}")
    if W.r == 0:
        raise DomainError("gcd of the zero subspace")
    return [HomPoly(W.d, W.field, row.copy()) for row in W.coeffs]


def gcd_subspace(W: PolySubspace) -> HomPoly:
    rows = _rows(W)
    g = rows[0].monic()
    for row in rows[1:]:
        if g.d == 0:
            break
        g = gcd_pair(g, row)
    return g


def find_coprime_pair(W: PolySubspace, seed: int = 0, attempts: int = 64) -> Tuple[HomPoly, HomPoly]:
    """Two elements of W with gcd 1: basis rows first, then seeded random combinations."""
    rows = _rows(W)
    if gcd_subspace(W).d != 0:
        raise DomainError("subspace has a nontrivial common factor")
    F = W.field
    first = rows[0]
    for other in rows[1:]:
        if gcd_pair(first, other).d == 0:
            return first, other

    rng = np.random.default_rng(seed)
    for attempt in range(attempts):
        combo = rng.integers(0, F.q, size=(2, W.r))
        if attempt < attempts // 2:
            combo[0] = 0
            combo[0, 0] = 1
        pair = F.matmul(combo, W.coeffs)
        a, b = HomPoly(W.d, F, pair[0]), HomPoly(W.d, F, pair[1])
        if a.is_zero() or b.is_zero():
            continue
        if gcd_pair(a, b).d == 0:
            logger.debug("coprime pair found after %d random attempts", attempt + 1)
            return a, b
    raise SearchError(f"no coprime pair found in {attempts} attempts (seed={seed})")
