import itertools

import numpy as np
import pytest

from src.prmweights.gf import FieldSpec, field_from_json, field_new
from src.prmweights.gf.field import default_modulus, is_irreducible
from src.prmweights.utils.errors import FieldError


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (7, 1), (2, 2), (2, 3), (3, 2), (5, 2), (2, 4)])
def test_field_axioms(p, e):
    F = field_new(p, e)
    q = F.q
    assert q == p**e
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0
        assert F.pow(a, q - 1) == 1
    for a, b, c in itertools.product(range(q), repeat=3):
        if q > 9 and (a + b + c) % 3:
            continue
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


def test_gf4_tables():
    F = field_new(2, 2)
    # x^2 + x + 1, x has index 2
    assert F.modulus == [1, 1, 1]
    assert F.mul(2, 2) == 3
    assert F.mul(2, 3) == 1
    assert F.add(2, 3) == 1
    assert F.inv(2) == 3


def test_default_modulus_is_irreducible():
    for p, e in [(2, 2), (2, 5), (3, 3), (5, 2), (7, 2)]:
        mod = default_modulus(p, e)
        assert len(mod) == e + 1 and mod[-1] == 1
        assert is_irreducible(mod, p)


def test_rejects_bad_parameters():
    with pytest.raises(FieldError):
        FieldSpec(6)
    with pytest.raises(FieldError):
        FieldSpec(2, 2, modulus=[1, 0, 1])      # (x+1)^2
    with pytest.raises(FieldError):
        FieldSpec(2, 17)                        # over the table cap
    with pytest.raises(FieldError):
        field_new(5).inv(0)


@pytest.mark.parametrize("p,e", [(3, 1), (2, 3), (3, 2), (2, 9)])
def test_vectorized_ops_match_scalar(p, e):
    F = field_new(p, e)
    rng = np.random.default_rng(1)
    a = rng.integers(0, F.q, size=200)
    b = rng.integers(0, F.q, size=200)
    assert F.vadd(a, b).tolist() == [F.add(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vsub(a, b).tolist() == [F.sub(int(x), int(y)) for x, y in zip(a, b)]
    assert F.vmul(a, b).tolist() == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    nz = a[a != 0]
    assert F.vinv(nz).tolist() == [F.inv(int(x)) for x in nz]


def test_matmul_matches_naive():
    F = field_new(3, 2)
    rng = np.random.default_rng(2)
    A = rng.integers(0, 9, size=(4, 5))
    B = rng.integers(0, 9, size=(5, 3))
    C = F.matmul(A, B)
    for i in range(4):
        for j in range(3):
            acc = 0
            for k in range(5):
                acc = F.add(acc, F.mul(int(A[i, k]), int(B[k, j])))
            assert C[i, j] == acc


def test_field_elements_refuse_mixed_fields():
    a = field_new(3).element(1)
    b = field_new(5).element(1)
    with pytest.raises(FieldError):
        a + b
    x = field_new(2, 2).element(2)
    assert (x * x).index == 3
    assert (x * x.inverse()).index == 1


def test_json_round_trip_and_caching():
    F = field_new(2, 3)
    assert field_from_json(F.to_json()) == F
    assert field_new(2, 3) is F


@pytest.mark.parametrize(
    "p,e", [(11, 1), (31, 1), (61, 1), (2, 5), (2, 6), (3, 3), (5, 2), (7, 2)]
)
def test_field_axioms_on_every_triple(p, e):
    F = field_new(p, e)
    idx = np.arange(F.q, dtype=np.int64)
    a, b, c = idx[:, None, None], idx[None, :, None], idx[None, None, :]
    assert np.array_equal(F.vmul(a, F.vadd(b, c)), F.vadd(F.vmul(a, b), F.vmul(a, c)))
    assert np.array_equal(F.vadd(F.vadd(a, b), c), F.vadd(a, F.vadd(b, c)))
    assert np.array_equal(F.vmul(F.vmul(a, b), c), F.vmul(a, F.vmul(b, c)))
    assert np.array_equal(F.vadd(a[:, :, 0], b[:, :, 0]), F.vadd(b[:, :, 0], a[:, :, 0]))
    assert np.array_equal(F.vmul(a[:, :, 0], b[:, :, 0]), F.vmul(b[:, :, 0], a[:, :, 0]))


@pytest.mark.parametrize(
    "p,e",
    [(2, 8), (3, 5), (257, 1), (2, 10), (5, 4),
     pytest.param(2, 12, marks=pytest.mark.slow), pytest.param(3, 7, marks=pytest.mark.slow),
     pytest.param(7, 4, marks=pytest.mark.slow), pytest.param(4093, 1, marks=pytest.mark.slow)],
)
def test_every_nonzero_element_has_an_inverse(p, e):
    F = field_new(p, e)
    a = np.arange(1, F.q, dtype=np.int64)
    assert np.all(F.vmul(a, F.vinv(a)) == 1)
    assert all(F.mul(int(v), F.inv(int(v))) == 1 for v in a[:: max(1, F.q // 257)])
