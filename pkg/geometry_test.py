import numpy as np
import pytest

from src.prmweights.combinatorics import binom, pi
from src.prmweights.geometry import (
    PointSet,
    PolySubspace,
    ProjectivePoint,
    cayley_bacharach_check,
    count_vanishing,
    dim_I_k,
    enumerate_projective_points,
    evaluation_matrix,
    g_X,
    grid_points,
    hilbert_ci_formula,
    monomial_basis,
    residual_check,
    rref,
)
from src.prmweights.geometry.polynomials import from_vector, linear_form, poly_mul, to_vector
from src.prmweights.gf import field_new
from src.prmweights.utils.errors import BudgetExceededError, DomainError

GF3 = field_new(3)
GF5 = field_new(5)


# ------------------------------------------------------------------
# Points
# ------------------------------------------------------------------
def test_projective_points_are_canonical():
    with pytest.raises(DomainError):
        ProjectivePoint((2, 1), GF3)
    with pytest.raises(DomainError):
        ProjectivePoint((0, 0), GF3)
    assert ProjectivePoint.normalize((2, 1), GF3).coords == (1, 2)
    assert ProjectivePoint.normalize((0, 2, 2), GF3).coords == (0, 1, 1)


def test_enumerate_plane_over_gf3():
    P = enumerate_projective_points(2, GF3)
    assert len(P) == 13
    assert P.points[0] == (1, 0, 0)
    assert P.points[-1] == (0, 0, 1)
    assert len(set(P.points)) == 13
    with pytest.raises(BudgetExceededError):
        enumerate_projective_points(2, GF3, budget=5)


@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)])
def test_point_count_is_pi(m, p, e):
    field = field_new(p, e)
    assert len(enumerate_projective_points(m, field)) == pi(m, field.q)


def test_point_set_operations():
    X = grid_points([[0, 1], [0, 1, 2]], GF3)
    assert len(X) == 6 and X.m == 2
    Y = X.subset([0, 2, 4])
    assert Y.is_subset_of(X)
    assert len(X.difference(Y)) == 3
    assert X.difference(Y).union(Y).points == X.points
    assert X.contains((1, 1, 2)) and not X.contains((0, 1, 0))
    assert PointSet.from_json(X.to_json()).points == X.points
    with pytest.raises(DomainError):
        PointSet(m=1, field=GF3, points=[(1, 0), (1, 0)])


def test_from_points_normalizes_and_dedups():
    X = PointSet.from_points([(2, 2), (1, 1), (0, 2)], m=1, field=GF3, normalize=True)
    assert X.points == [(1, 1), (0, 1)]


# ------------------------------------------------------------------
# Linear algebra
# ------------------------------------------------------------------
def test_rref_dependent_rows_over_gf3():
    rank, R = rref([[1, 2], [2, 1]], GF3)
    assert rank == 1
    assert R.tolist() == [[1, 2], [0, 0]]


def test_rref_is_canonical():
    rng = np.random.default_rng(3)
    for _ in range(20):
        M = rng.integers(0, 5, size=(4, 7))
        rank, R = rref(M, GF5)
        assert rank <= 4
        rank2, R2 = rref(R, GF5)
        assert rank2 == rank and np.array_equal(R, R2)
        # row space is unchanged: the same RREF from a shuffled basis
        perm = rng.permutation(4)
        assert np.array_equal(rref(M[perm], GF5)[1][:rank], R[:rank])


def test_rref_over_extension_field():
    F = field_new(2, 2)
    rank, R = rref([[2, 3, 1], [3, 1, 2]], F)
    # second row is x * first row (x = 2): 2*2=3, 2*3=1, 2*1=2
    assert rank == 1
    assert R[0, 0] == 1


def test_monomial_basis_order():
    B = monomial_basis(2, 2)
    assert len(B) == 6
    assert B.exponent(0) == (2, 0, 0)
    assert B.index((0, 2, 0)) == 3


def test_linear_evaluation_matrix_is_coordinates():
    X = enumerate_projective_points(2, GF3)
    E = evaluation_matrix(X, monomial_basis(1, 2))
    assert np.array_equal(E, X.coords)


def test_polynomials_expand_into_basis():
    B = monomial_basis(2, 2)
    f = poly_mul(linear_form(3, 1, 1, GF3), linear_form(3, 1, 2, GF3), GF3)
    # (x1 - x0)(x1 - 2x0) = x1^2 - 3x0x1 + 2x0^2 = x1^2 + 2x0^2 over GF(3)
    assert f == {(0, 2, 0): 1, (2, 0, 0): 2}
    assert from_vector(to_vector(f, B), B) == f


def test_count_vanishing_of_a_line():
    B = monomial_basis(1, 2)
    W = PolySubspace.from_rows([to_vector({(0, 1, 0): 1}, B)], 1, 2, GF3)
    res = count_vanishing(W)
    assert res.count == 4
    assert all(p[1] == 0 for p in res.points)


@pytest.mark.parametrize("d,m,r,p,e", [(2, 2, 3, 3, 1), (2, 2, 2, 2, 2), (1, 3, 2, 3, 1), (3, 2, 4, 5, 1)])
def test_count_vanishing_ignores_the_choice_of_basis(d, m, r, p, e):
    field = field_new(p, e)
    rng = np.random.default_rng(d * 100 + r)
    n = len(monomial_basis(d, m))
    for _ in range(10):
        W = PolySubspace.from_rows(rng.integers(0, field.q, size=(r, n)), d, m, field)
        while True:
            A = rng.integers(0, field.q, size=(W.r, W.r))
            if rref(A, field)[0] == W.r:
                break
        mixed = PolySubspace(d=d, m=m, field=field, coeffs=field.matmul(A, W.coeffs))
        assert count_vanishing(mixed).count == count_vanishing(W).count
        assert count_vanishing(mixed).points.points == count_vanishing(W).points.points


def test_subspace_json_round_trip():
    W = PolySubspace.from_rows([[1, 2, 0, 0, 1, 1], [2, 1, 1, 0, 0, 0]], 2, 2, GF3)
    assert PolySubspace.from_json(W.to_json()) == W
    assert W.r == 2


# ------------------------------------------------------------------
# Hilbert functions
# ------------------------------------------------------------------
@pytest.mark.parametrize("a,b", [(1, 1), (2, 3), (3, 3), (4, 2)])
def test_noether_closed_form_on_grids(a, b):
    gamma = grid_points([list(range(a)), list(range(b))], field_new(7))
    for k in range(0, a + b + 1):
        assert len(gamma) - g_X(gamma, k) == hilbert_ci_formula(a, b, k)


def test_empty_set_imposes_nothing():
    empty = PointSet(m=2, field=GF3)
    assert dim_I_k(empty, 3) == binom(5, 3)
    assert g_X(empty, 3) == 0


def test_few_points_impose_independent_conditions():
    rng = np.random.default_rng(4)
    pool = enumerate_projective_points(2, GF5)
    for d in range(1, 4):
        for _ in range(20):
            idx = sorted(rng.choice(len(pool), size=d + 1, replace=False).tolist())
            assert g_X(pool.subset(idx), d) == 0


def test_cayley_bacharach_on_3x3_grid():
    gamma = grid_points([[0, 1, 2], [0, 1, 2]], GF5)
    gamma_prime = gamma.subset([0, 1, 4, 8])
    for k in range(0, 4):
        assert cayley_bacharach_check(gamma, gamma_prime, k, 3, 3).equal
    for k in range(1, 4):
        assert residual_check(gamma, gamma_prime, k, 3, 3).equal


def test_cayley_bacharach_preconditions():
    gamma = grid_points([[0, 1], [0, 1]], GF5)
    outside = grid_points([[3], [3]], GF5)
    with pytest.raises(DomainError):
        cayley_bacharach_check(gamma, outside, 0, 2, 2)
    with pytest.raises(DomainError):
        residual_check(gamma, gamma.subset([0]), 2, 2, 2)
