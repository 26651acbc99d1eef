"""
Sparse homogeneous polynomials over GF(q): ``{exponent tuple: coefficient index}``.

Only what the builders need: products of linear forms and
expansion into the dense coefficient vector of a MonomialBasis.
"""

from typing import Dict, Iterable, Tuple

import numpy as np

from src.prmweights.gf.field import FieldSpec

Poly = Dict[Tuple[int, ...], int]


def one(n_vars: int) -> Poly:
    return {(0,) * n_vars: 1}


def linear_form(n_vars: int, i: int, a: int, field: FieldSpec) -> Poly:
    """x_i - a*x_0."""
    xi = [0] * n_vars
    xi[i] = 1
    out = {tuple(xi): 1}
    if a:
        x0 = [0] * n_vars
        x0[0] = 1
        out[tuple(x0)] = field.neg(a)
    return out


def poly_mul(f: Poly, g: Poly, field: FieldSpec) -> Poly:
    out: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            v = field.add(out.get(e, 0), field.mul(c1, c2))
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    return out


def poly_prod(factors: Iterable[Poly], n_vars: int, field: FieldSpec) -> Poly:
    out = one(n_vars)
    for g in factors:
        out = poly_mul(out, g, field)
    return out


def degree(f: Poly) -> int:
    """Total degree of a homogeneous polynomial; -1 for the zero polynomial."""
    if not f:
        return -1
    return sum(next(iter(f)))


def to_vector(f: Poly, basis) -> np.ndarray:
    """Dense coefficient row in the basis order."""
    row = np.zeros(len(basis), dtype=np.int64)
    for e, c in f.items():
        row[basis.index(e)] = c
    return row


def from_vector(row, basis) -> Poly:
    return {basis.exponent(i): int(c) for i, c in enumerate(row) if c}
