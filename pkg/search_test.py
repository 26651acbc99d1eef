import numpy as np
import pytest

from src.prmweights.combinatorics import H_prime, f
from src.prmweights.constructions import build_lower_bound_subspace, prm_generator_matrix
from src.prmweights.geometry import PolySubspace, rref
from src.prmweights.gf import field_new
from src.prmweights.search import (
    boguslavsky_check_m2,
    boguslavsky_sweep,
    enumerate_subspaces,
    exhaustive_e_r,
    exhaustive_u_r_rational,
    gaussian_binomial,
    ghw,
    ghw_table,
    iter_subspace_matrices,
    randomized_search,
)
from src.prmweights.search.exhaustive import ChunkResult, merge
from src.prmweights.utils.errors import BudgetExceededError, DomainError

GF2 = field_new(2)
GF3 = field_new(3)


# ------------------------------------------------------------------
# Subspace enumeration
# ------------------------------------------------------------------
def test_gaussian_binomials():
    assert gaussian_binomial(6, 1, 3) == 364
    assert gaussian_binomial(6, 2, 3) == 11011
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(5, 0, 7) == 1


def test_enumeration_visits_each_subspace_once():
    seen = set()
    for M in iter_subspace_matrices(4, 2, GF2):
        rank, R = rref(M, GF2)
        assert rank == 2 and np.array_equal(R, M)
        seen.add(tuple(M.ravel().tolist()))
    assert len(seen) == 35


def test_chunks_partition_the_stream():
    whole = {tuple(M.ravel().tolist()) for M in iter_subspace_matrices(5, 2, GF3)}
    parts = []
    for i in range(3):
        for block in enumerate_subspaces(5, 2, GF3, chunk=(i, 3), batch_size=50):
            parts.extend(tuple(M.ravel().tolist()) for M in block)
    assert len(parts) == len(whole) == gaussian_binomial(5, 2, 3)
    assert set(parts) == whole


def test_budget_refusal():
    with pytest.raises(BudgetExceededError) as exc:
        exhaustive_e_r(2, 2, GF3, 3, visit_budget=1000)
    assert exc.value.required == gaussian_binomial(6, 3, 3)


def test_merge_prefers_value_then_lex_witness():
    a = ChunkResult(best=5, witness=(1, 2), visited=10)
    b = ChunkResult(best=5, witness=(1, 1), visited=7)
    c = ChunkResult(best=4, witness=(0, 0), visited=3)
    merged = merge([a, c, b])
    assert (merged.best, merged.witness, merged.visited) == (5, (1, 1), 20)


# ------------------------------------------------------------------
# e_r and u_r
# ------------------------------------------------------------------
@pytest.mark.parametrize("r,expected", [(1, 7), (2, 5), (3, 4), (4, 2), (5, 1), (6, 0)])
def test_exhaustive_e_r_plane_conics_gf3(r, expected):
    report = exhaustive_e_r(2, 2, GF3, r)
    assert report.best_value == expected
    assert report.expected == f(2, 2, 3, r)
    assert report.match and report.theorem_range
    assert report.visited == gaussian_binomial(6, r, 3)
    assert len(report.witness) == r


@pytest.mark.parametrize("p", [2, 3])
def test_exhaustive_e_r_lines(p):
    field = field_new(p)
    for r in range(1, 4):
        report = exhaustive_e_r(1, 2, field, r)
        assert report.best_value == f(1, 2, p, r)


def test_parallel_chunks_give_the_same_answer():
    one = exhaustive_e_r(2, 2, GF3, 2, workers=1)
    two = exhaustive_e_r(2, 2, GF3, 2, workers=2)
    assert one.model_dump() == two.model_dump()


@pytest.mark.parametrize("r", [4, 5, 6])
def test_exhaustive_u_r_without_gcd_work(r):
    report = exhaustive_u_r_rational(2, GF3, r)
    assert report.best_value == H_prime(2, 2, r - 1)
    assert report.match


@pytest.mark.slow
@pytest.mark.parametrize("r,expected", [(2, 4), (3, 3)])
def test_exhaustive_u_r_with_gcd_filter(r, expected):
    report = exhaustive_u_r_rational(2, GF3, r)
    assert report.best_value == expected
    assert report.match


def test_u_r_warns_below_the_proven_field_size(caplog):
    report = exhaustive_u_r_rational(3, GF2, 9)
    assert not report.theorem_range
    assert "outside the proven range" in caplog.text


def test_u_r_is_plane_only():
    with pytest.raises(DomainError):
        exhaustive_u_r_rational(2, GF3, 3, m=3)
    with pytest.raises(DomainError):
        randomized_search("u_r_rational", 2, 3, GF3, 3)


def test_randomized_search_is_deterministic():
    a = randomized_search("e_r", 2, 2, GF3, 2, seed=7, iterations=150)
    b = randomized_search("e_r", 2, 2, GF3, 2, seed=7, iterations=150)
    assert a.model_dump_json() == b.model_dump_json()
    # starts from the construction and never exceeds the proven optimum
    assert H_prime(2, 2, 1) <= a.best_value <= f(2, 2, 3, 2)
    assert a.match


@pytest.mark.parametrize("d,m,p,r", [(1, 2, 2, 1), (1, 2, 3, 2), (2, 2, 3, 2), (2, 2, 3, 4), (1, 3, 2, 2)])
def test_randomized_never_beats_exhaustive(d, m, p, r):
    field = field_new(p)
    exact = exhaustive_e_r(d, m, field, r).best_value
    for seed in range(3):
        assert randomized_search("e_r", d, m, field, r, seed=seed, iterations=60).best_value <= exact


def test_randomized_chains_merge():
    report = randomized_search("e_r", 2, 2, GF3, 3, seed=1, iterations=50, chains=3)
    assert report.best_value <= f(2, 2, 3, 3)
    assert report.visited >= 3


# ------------------------------------------------------------------
# Generalized Hamming weights
# ------------------------------------------------------------------
def test_ghw_of_prm_3_2_2_two_ways():
    code = prm_generator_matrix(2, 2, GF3)
    e_r = {r: exhaustive_e_r(2, 2, GF3, r).best_value for r in range(1, 7)}
    rows = ghw_table(code, range(1, 7), e_r_values=e_r)
    assert [row.d_r for row in rows] == [6, 8, 9, 11, 12, 13]
    assert all(row.match for row in rows)
    assert all(row.via_e_r == row.d_r for row in rows)


def test_ghw_of_the_3_2_code():
    code = prm_generator_matrix(1, 1, GF2)
    assert [ghw(code, r) for r in (1, 2)] == [2, 3]
    with pytest.raises(DomainError):
        ghw(code, 3)


# ------------------------------------------------------------------
# Plane degree bound
# ------------------------------------------------------------------
def test_degree_bound_single_form():
    W = build_lower_bound_subspace(2, 2, 2, GF3).W
    single = PolySubspace(2, 2, GF3, W.coeffs[:1])
    res = boguslavsky_check_m2(single)
    assert res.bound == (2, 0, 0)
    assert res.deg1 == 2
    assert res.within_bound == "true"


def test_degree_bound_common_line():
    # <x1 x2, x2^2>: common factor x2, residual point (1,0,0) lies on it
    W = PolySubspace.from_rows([[0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]], 2, 2, GF3)
    res = boguslavsky_check_m2(W)
    assert res.bound == (1, 1, 0)
    assert (res.deg1, res.rational_residual) == (1, 0)
    assert res.bezout == 1
    assert res.within_bound == "true"


def test_degree_bound_finite_intersection():
    W = build_lower_bound_subspace(2, 2, 4, GF3).W
    res = boguslavsky_check_m2(W)
    assert res.deg1 == 0
    assert res.rational_residual == 2
    assert res.within_bound in ("true", "indeterminate")


def test_degree_bound_sweep_lines():
    tally = boguslavsky_sweep(1, GF2, range(1, 4))
    assert tally["false"] == 0
    assert sum(tally.values()) == 7 + 7 + 1


@pytest.mark.slow
def test_degree_bound_sweep_conics_gf3():
    tally = boguslavsky_sweep(2, GF3, range(1, 7))
    assert tally["false"] == 0


def test_degree_bound_is_plane_only():
    W = PolySubspace.from_rows([[1, 0, 0, 0]], 1, 3, GF3)
    with pytest.raises(DomainError):
        boguslavsky_check_m2(W)
