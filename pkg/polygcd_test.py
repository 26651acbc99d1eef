import numpy as np
import pytest

from src.prmweights.constructions import build_lower_bound_subspace
from src.prmweights.geometry import PolySubspace, enumerate_projective_points, evaluation_matrix, monomial_basis
from src.prmweights.geometry.linalg import vanishing_mask
from src.prmweights.geometry.polynomials import linear_form, poly_mul, to_vector
from src.prmweights.gf import field_new
from src.prmweights.polygcd import (
    HomPoly,
    degree,
    exact_divide,
    find_coprime_pair,
    gcd_pair,
    gcd_subspace,
    hom_mul,
)
from src.prmweights.polygcd import univariate as U
from src.prmweights.utils.errors import DomainError

GF3 = field_new(3)
GF5 = field_new(5)

# F = x0*x1 + x2^2
F_CONIC = {(1, 1, 0): 1, (0, 0, 2): 1}


def hp(poly, d, field=GF5):
    return HomPoly.from_poly(poly, d, field)


def test_univariate_gcd():
    # (x-1)(x-2) and (x-1)(x-3) over GF(5)
    a = U.mul([4, 1], [3, 1], GF5)
    b = U.mul([4, 1], [2, 1], GF5)
    assert U.gcd(a, b, GF5) == [4, 1]
    q, r = U.divmod_(a, [4, 1], GF5)
    assert q == [3, 1] and r == []


def test_common_conic_factor():
    F = hp(F_CONIC, 2)
    f = hp(poly_mul(F_CONIC, {(0, 1, 0): 1}, GF5), 3)
    g = hp(poly_mul(F_CONIC, {(0, 0, 1): 1}, GF5), 3)
    assert gcd_pair(f, g) == F


def test_gcd_keeps_common_x0_power():
    x0 = {(1, 0, 0): 1}
    f = hp(poly_mul(x0, {(0, 1, 0): 1}, GF5), 2)
    g = hp(poly_mul(x0, {(0, 0, 1): 1}, GF5), 2)
    assert gcd_pair(f, g) == hp(x0, 1)


def test_coprime_lines():
    f = hp({(0, 1, 0): 1}, 1)
    g = hp({(0, 0, 1): 1}, 1)
    assert degree(gcd_pair(f, g)) == 0


def test_gcd_is_monic_up_to_scalars():
    F = hp(F_CONIC, 2)
    f = hp(poly_mul(F_CONIC, {(0, 1, 0): 3}, GF5), 3)
    g = hp(poly_mul(F_CONIC, {(1, 0, 0): 2, (0, 0, 1): 4}, GF5), 3)
    assert gcd_pair(f, g) == F


def test_zero_inputs():
    f = hp({(0, 1, 0): 2}, 1)
    assert gcd_pair(f, HomPoly.zero(1, GF5)) == f.monic()
    with pytest.raises(DomainError):
        gcd_pair(HomPoly.zero(1, GF5), HomPoly.zero(2, GF5))


def test_multiply_then_divide():
    rng = np.random.default_rng(5)
    for _ in range(10):
        a = HomPoly(2, GF5, rng.integers(0, 5, size=6))
        b = HomPoly(1, GF5, rng.integers(1, 5, size=3))
        if a.is_zero():
            continue
        assert exact_divide(hom_mul(a, b), b) == a


def test_exact_divide_refuses_non_divisors():
    f = hp({(0, 1, 0): 1}, 1)
    g = hp({(0, 0, 1): 1}, 1)
    with pytest.raises(DomainError):
        exact_divide(f, g)


def test_gcd_of_subspaces():
    B = monomial_basis(3, 2)
    rows = [to_vector(poly_mul(F_CONIC, {e: 1}, GF3), B) for e in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
    W = PolySubspace.from_rows(rows, 3, 2, GF3)
    assert gcd_subspace(W) == hp(F_CONIC, 2, GF3)
    with pytest.raises(DomainError):
        find_coprime_pair(W)


def test_construction_has_a_coprime_pair():
    W = build_lower_bound_subspace(2, 2, 4, GF5).W
    assert gcd_subspace(W).d == 0
    a, b = find_coprime_pair(W, seed=1)
    assert gcd_pair(a, b).d == 0


def test_gcd_needs_plane_subspaces():
    W = PolySubspace.from_rows([[1, 0, 0, 0]], 1, 3, GF3)
    with pytest.raises(DomainError):
        gcd_subspace(W)


def test_products_of_lines():
    l1 = linear_form(3, 1, 1, GF5)
    l2 = linear_form(3, 2, 3, GF5)
    l3 = linear_form(3, 1, 4, GF5)
    f = hp(poly_mul(l1, l2, GF5), 2)
    g = hp(poly_mul(l1, l3, GF5), 2)
    assert gcd_pair(f, g) == hp(l1, 1).monic()


# ------------------------------------------------------------------
# Random sweeps
# ------------------------------------------------------------------
def random_form(rng, d, field):
    while True:
        f = HomPoly(d, field, rng.integers(0, field.q, size=len(monomial_basis(d, 2))))
        if not f.is_zero():
            return f


@pytest.mark.parametrize(
    "p,pairs",
    [(3, 20), (5, 20), (7, 20), pytest.param(3, 170, marks=pytest.mark.slow),
     pytest.param(5, 165, marks=pytest.mark.slow), pytest.param(7, 165, marks=pytest.mark.slow)],
)
def test_gcd_divides_both_and_keeps_common_factors(p, pairs):
    field = field_new(p)
    rng = np.random.default_rng(p * 1000 + pairs)
    for _ in range(pairs):
        c = int(rng.integers(0, 3))
        a, b = (int(v) for v in rng.integers(0, 7 - c, size=2))
        h = random_form(rng, c, field)
        f = hom_mul(h, random_form(rng, a, field))
        g = hom_mul(h, random_form(rng, b, field))
        common = gcd_pair(f, g)
        exact_divide(f, common)
        exact_divide(g, common)
        exact_divide(common, h)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_gcd_scales_with_a_common_multiplier(p):
    field = field_new(p)
    rng = np.random.default_rng(p)
    for _ in range(25):
        c, a, b = (int(v) for v in rng.integers(1, 3, size=3))
        h = random_form(rng, c, field)
        f = random_form(rng, a, field)
        g = random_form(rng, b, field)
        assert gcd_pair(hom_mul(h, f), hom_mul(h, g)) == hom_mul(h, gcd_pair(f, g)).monic()


@pytest.mark.parametrize("e", [1, 2])
def test_coprime_forms_meet_in_at_most_ab_points(e):
    base = field_new(3)
    ext = field_new(3, e)
    X = enumerate_projective_points(2, ext)
    rng = np.random.default_rng(11 + e)
    checked = 0
    while checked < 15:
        a, b = (int(v) for v in rng.integers(1, 4, size=2))
        f, g = random_form(rng, a, base), random_form(rng, b, base)
        if gcd_pair(f, g).d != 0:
            continue
        # GF(3) coefficient indices are the same elements inside GF(3^e)
        on_f = vanishing_mask(f.coeffs[None, :], evaluation_matrix(X, monomial_basis(a, 2)), ext)
        on_g = vanishing_mask(g.coeffs[None, :], evaluation_matrix(X, monomial_basis(b, 2)), ext)
        assert int((on_f & on_g).sum()) <= a * b
        checked += 1
