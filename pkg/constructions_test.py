import pytest

from src.prmweights.combinatorics import H_prime, omega_size
from src.prmweights.constructions import (
    build_ci_grid,
    build_grid_Y,
    build_lower_bound_subspace,
    default_roots,
    prm_generator_matrix,
)
from src.prmweights.gf import field_new
from src.prmweights.utils.errors import ConstructionError, DomainError

GF3 = field_new(3)
GF5 = field_new(5)


def test_plane_rank_four_example():
    report = build_lower_bound_subspace(2, 2, 4, GF5)
    assert report.verified_dim == 4
    assert report.verified_count == 2
    assert report.rational_count == 2
    assert report.claimed_lower_bound == H_prime(2, 2, 3) == 2
    assert report.ok
    assert len(report.expected_Y) == 2


@pytest.mark.parametrize("d,m,p", [(2, 2, 3), (3, 2, 5), (2, 3, 3), (3, 3, 5)])
def test_m_forms_meet_in_d_to_the_m_points(d, m, p):
    report = build_lower_bound_subspace(d, m, m, field_new(p))
    assert report.verified_count == d**m
    assert report.ok


def test_full_space_has_no_zeros():
    report = build_lower_bound_subspace(2, 2, 6, GF3)
    assert report.verified_dim == 6
    assert report.verified_count == 0
    assert report.claimed_lower_bound == 0


def test_small_field_is_refused():
    with pytest.raises(DomainError):
        build_lower_bound_subspace(4, 2, 3, GF3)
    with pytest.raises(DomainError):
        build_lower_bound_subspace(2, 2, 1, GF5)


def test_roots_are_validated():
    assert default_roots(3, GF5) == [1, 2, 0]
    assert build_lower_bound_subspace(2, 2, 3, GF5, roots=[3, 0]).ok
    with pytest.raises(ConstructionError):
        build_lower_bound_subspace(2, 2, 3, GF5, roots=[1, 2])
    with pytest.raises(ConstructionError):
        build_lower_bound_subspace(2, 2, 3, GF5, roots=[0, 0])
    with pytest.raises(ConstructionError):
        build_lower_bound_subspace(3, 2, 3, GF5, roots=[1, 0])


def test_grid_y_for_rank_four():
    Y = build_grid_Y(2, 2, 4, GF5)
    assert sorted(Y.points) == [(1, 1, 0), (1, 1, 1)]


def test_plane_sweep_is_exact():
    for d in range(1, 4):
        field = field_new(5)
        for r in range(2, omega_size(d, 2) + 1):
            report = build_lower_bound_subspace(d, 2, r, field)
            assert report.ok, (d, r)
            expected = 0 if r == omega_size(d, 2) else H_prime(d, 2, r - 1)
            assert report.verified_count == expected


@pytest.mark.slow
def test_construction_sweep():
    for d in range(1, 5):
        field = field_new({1: 2, 2: 3, 3: 5, 4: 5}[d])
        for m in range(1, 4):
            for r in range(m, omega_size(d, m) + 1):
                report = build_lower_bound_subspace(d, m, r, field)
                assert report.verified_dim == r
                assert report.ok, (d, m, r)


def test_report_serializes():
    data = build_lower_bound_subspace(2, 2, 4, GF5).to_json()
    assert data["verified_count"] == 2
    assert data["field"] == {"p": 5, "e": 1, "modulus": [0, 1]}
    assert len(data["W"]["rows"]) == 4


def test_complete_intersection_grid():
    F, G, gamma = build_ci_grid([0, 1, 2], [0, 1], GF5)
    assert (F.d, G.d) == (3, 2)
    assert len(gamma) == 6
    with pytest.raises(ConstructionError):
        build_ci_grid([0, 0], [1], GF5)


def test_prm_generator_matrix():
    code = prm_generator_matrix(2, 2, GF3)
    assert code.length == 13
    assert code.dimension == 6
    assert code.generator.shape == (6, 13)
