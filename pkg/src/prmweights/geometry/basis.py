from functools import lru_cache
from typing import Dict, Tuple

import numpy as np

from src.prmweights.combinatorics.omega import iter_omega, omega_size


class MonomialBasis:
    """Degree-d monomials in x_0..x_m, lex-descending; column j holds omega_{j+1}(d,m)."""

    def __init__(self, d: int, m: int) -> None:
        self.d = d
        self.m = m
        self.exponents = np.array([t.entries for t in iter_omega(d, m)], dtype=np.int64).reshape(-1, m + 1)
        self._index: Dict[Tuple[int, ...], int] = {
            tuple(int(v) for v in row): i for i, row in enumerate(self.exponents)
        }
        assert len(self._index) == omega_size(d, m)

    def __len__(self) -> int:
        return len(self._index)

    def index(self, exponent) -> int:
        return self._index[tuple(exponent)]

    def exponent(self, i: int) -> Tuple[int, ...]:
        return tuple(int(v) for v in self.exponents[i])

    def __repr__(self) -> str:
        return f"MonomialBasis(d={self.d}, m={self.m}, size={len(self)})"


@lru_cache(maxsize=128)
def monomial_basis(d: int, m: int) -> MonomialBasis:
    return MonomialBasis(d, m)
