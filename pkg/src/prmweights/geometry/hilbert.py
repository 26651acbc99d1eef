"""
Hilbert-function machinery for reduced point sets: dim I_k(X), g_X(k), the
closed form for plane complete intersections, and the Cayley-Bacharach
equality on reduced grids (residual = set difference).
"""

from dataclasses import dataclass

from src.prmweights.combinatorics.binomial import binom
from src.prmweights.geometry.basis import monomial_basis
from src.prmweights.geometry.linalg import evaluation_matrix, rref
from src.prmweights.geometry.points import PointSet
from src.prmweights.utils.errors import DomainError


def dim_I_k(X: PointSet, k: int) -> int:
    """Dimension of the degree-k forms vanishing on X."""
    if k < 0:
        return 0
    n = binom(X.m + k, k)
    if len(X) == 0:
        return n
    rank, _ = rref(evaluation_matrix(X, monomial_basis(k, X.m)), X.field)
    return n - rank


def g_X(X: PointSet, k: int) -> int:
    return dim_I_k(X, k) - binom(X.m + k, k) + len(X)


def hilbert_ci_formula(a: int, b: int, k: int) -> int:
    """dim S_k(Gamma) for a plane complete intersection of degrees a and b."""
    if a < 1 or b < 1 or k < 0:
        raise DomainError(f"need a, b >= 1 and k >= 0, got a={a}, b={b}, k={k}")
    return binom(k + 2, 2) - binom(k - a + 2, 2) - binom(k - b + 2, 2) + binom(k - a - b + 2, 2)


@dataclass(frozen=True)
class CBResult:
    lhs: int
    rhs: int

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


def _residual(gamma: PointSet, gamma_prime: PointSet) -> PointSet:
    if not gamma_prime.is_subset_of(gamma):
        raise DomainError("Gamma' is not contained in Gamma")
    return gamma.difference(gamma_prime)


def cayley_bacharach_check(gamma: PointSet, gamma_prime: PointSet, k: int, a: int, b: int) -> CBResult:
    """dim I_k(Gamma') - dim I_k(Gamma) against g_{Gamma''}(a+b-3-k)."""
    s = a + b - 3
    if k < 0 or s - k < 0:
        raise DomainError(f"need 0 <= k <= {s}, got k={k}")
    gamma_pp = _residual(gamma, gamma_prime)
    lhs = dim_I_k(gamma_prime, k) - dim_I_k(gamma, k)
    return CBResult(lhs=lhs, rhs=g_X(gamma_pp, s - k))


def residual_check(gamma: PointSet, gamma_prime: PointSet, k: int, a: int, b: int) -> CBResult:
    """g_{Gamma'}(k) against dim I_{s-k}(Gamma''), valid for max(a,b)-2 <= k <= s."""
    s = a + b - 3
    if not max(a, b) - 2 <= k <= s:
        raise DomainError(f"need {max(a, b) - 2} <= k <= {s}, got k={k}")
    gamma_pp = _residual(gamma, gamma_prime)
    return CBResult(lhs=g_X(gamma_prime, k), rhs=dim_I_k(gamma_pp, s - k))
