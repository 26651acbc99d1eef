"""
Integer formulas built on the lex-ordered tuples: H, H', the index profile
(l, c, j, s), the conjectured extremal value f (two routes), the piecewise
form of H' in the plane, and the difference identity for consecutive H.
"""

from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from typing import Iterable, List, Optional, Tuple

from src.prmweights.combinatorics.binomial import binom, pi
from src.prmweights.combinatorics.omega import (
    omega_prime_unrank,
    omega_size,
    omega_unrank,
    shifted_rank,
)
from src.prmweights.utils.errors import DomainError, FormulaMismatchError

logger = logging.getLogger(__name__)


def _weighted(entries, m: int, base: int) -> int:
    return sum(entries[i] * base ** (m - 1 - i) for i in range(m))


def H(d: int, m: int, q: int, r: int) -> int:
    """H_r(d,m;q) = sum_{i<=m} beta_i q^{m-i} for (beta) = omega_r(d,m)."""
    if q < 2:
        raise DomainError(f"q must be >= 2, got {q}")
    return _weighted(omega_unrank(d, m, r).entries, m, q)


def H_prime(d: int, m: int, r_prime: int) -> int:
    """H'_{r'}(d,m) = sum_{i<=m} alpha_i d^{m-i} for (alpha) = omega'_{r'}(d,m)."""
    return _weighted(omega_prime_unrank(d, m, r_prime).entries, m, d)


def u_rank_m(d: int, m: int) -> int:
    """Maximal zero-dimensional intersection of m forms: H'_1(d,m) = d^m.

    The statement of the r = m case writes H'_1(d,1); its proof computes
    d^m = H'_1(d,m), which is what is returned here.
    """
    return H_prime(d, m, 1)


# ------------------------------------------------------------------
# Index profile
# ------------------------------------------------------------------
@dataclass(frozen=True)
class IndexProfile:
    r: int
    l: int
    c: int
    j: int
    s: Optional[int]
    tuple: Tuple[int, ...]

    def to_dict(self) -> dict:
        return asdict(self)


def bracket_l(d: int, m: int, r: int) -> int:
    """The unique l in [1, m+1] with C(m+d,d)-C(m+d+1-l,d) < r <= C(m+d,d)-C(m+d-l,d)."""
    total = omega_size(d, m)
    for l in range(1, m + 2):
        if total - binom(m + d + 1 - l, d) < r <= total - binom(m + d - l, d):
            return l
    raise DomainError(f"rank {r} outside [1, {total}]")


def c_bracket(d: int, m: int, s: int) -> Tuple[int, int]:
    """Bounds (lo, hi] for s given l and c = alpha_l of omega_s(d,m)."""
    t = omega_unrank(d, m, s)
    l = t.first_nonzero
    c = t.entries[l - 1]
    base = omega_size(d, m) - binom(m + d + 1 - l, d)
    return base + binom(m + d - l - c, d - c - 1), base + binom(m + d - l - c + 1, d - c)


def profile(d: int, m: int, r: int) -> IndexProfile:
    if d < 1:
        raise DomainError(f"profile needs d >= 1, got d={d}")
    t = omega_unrank(d, m, r)
    l = bracket_l(d, m, r)
    if l != t.first_nonzero:
        raise FormulaMismatchError(
            f"bracketing gives l={l} but omega_{r}({d},{m})={t.entries} starts at {t.first_nonzero}",
            d=d, m=m, r=r,
        )
    c = t.entries[l - 1]
    lo, hi = c_bracket(d, m, r)
    if not lo < r <= hi:
        raise FormulaMismatchError(f"rank {r} outside the (l,c) bracket ({lo}, {hi}]", d=d, m=m, r=r)
    total = omega_size(d, m)
    j = r - total + binom(m + d + 1 - l, d)
    if not 0 < j <= binom(m + d - l, d - 1):
        raise FormulaMismatchError(f"j={j} outside (0, C({m + d - l},{d - 1})]", d=d, m=m, r=r)

    s = None
    if d >= 1 and m >= 1 and m <= r:
        s = shifted_rank(d, m, r)
        lp = omega_unrank(d, m, s).first_nonzero
        expected = r if r == total else r - (m - lp)
        if s != expected:
            raise FormulaMismatchError(f"shifted rank {s} != {expected}", d=d, m=m, r=r)
    return IndexProfile(r=r, l=l, c=c, j=j, s=s, tuple=t.entries)


# ------------------------------------------------------------------
# f_r(d,m;q)
# ------------------------------------------------------------------
def f_routes(d: int, m: int, q: int, r: int) -> Tuple[int, int]:
    """(via l and j, via the first nonzero index of omega_r)."""
    if q < d + 1:
        raise DomainError(f"f_r needs q >= d+1, got q={q}, d={d}")
    l = bracket_l(d, m, r)
    j = r - omega_size(d, m) + binom(m + d + 1 - l, d)
    via_j = H(d - 1, m - l + 1, q, j) + pi(m - l, q)

    first = omega_unrank(d, m, r).first_nonzero
    via_first = H(d, m, q, r) + pi(m - first - 1, q)
    return via_j, via_first


def f(d: int, m: int, q: int, r: int) -> int:
    via_j, via_first = f_routes(d, m, q, r)
    if via_j != via_first:
        raise FormulaMismatchError(
            f"f_{r}({d},{m};{q}): {via_j} via (l,j) but {via_first} via first nonzero index",
            d=d, m=m, q=q, r=r,
        )
    return via_j


# ------------------------------------------------------------------
# Plane case and difference identity
# ------------------------------------------------------------------
def H_prime_piecewise_m2(d: int, r: int) -> int:
    """Closed form of H'_{r-1}(d,2), checked against H_prime."""
    top = binom(d + 2, 2)
    if not 2 <= r <= top:
        raise DomainError(f"r must lie in [2, {top}], got {r}")
    value = None
    for t in range(d, 0, -1):
        if binom(d - t + 1, 2) < r - 1 <= binom(d - t + 2, 2):
            value = t * d + binom(d - t + 2, 2) - r + 1
            break
    if value is None:
        value = top - r
    direct = H_prime(d, 2, r - 1)
    if value != direct:
        raise FormulaMismatchError(f"piecewise H'_{r - 1}({d},2)={value} but direct={direct}", d=d, r=r)
    return value


def _floor_power(base: int, exponent: int) -> int:
    return base**exponent if exponent >= 0 else 0


@dataclass(frozen=True)
class DiffIdentity:
    s: int
    j: int
    k: int
    sigma: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def diff_ws(d: int, m: int, s: int, j: int) -> DiffIdentity:
    """H_s(d,m;d+1) - H_{s+j}(d,m;d+1) against (sigma+1)(d+1)^{m-k-1} - floor((d+1)^{m-k-j}).

    k is the last nonzero index among the first m entries of omega_s(d,m).
    When k = m the power (d+1)^{-1} appears in both terms of the expansion
    (d+1)^{m-k} - (d-sigma)(d+1)^{m-k-1}; every negative power is floored to 0.
    """
    t = omega_unrank(d, m, s)
    k = t.last_nonzero_head
    if k is None:
        raise DomainError(f"omega_{s}({d},{m}) has no nonzero entry among the first {m}")
    if not 1 <= j <= m + 1 - k:
        raise DomainError(f"j={j} outside [1, {m + 1 - k}]")
    sigma = d - t.entries[m]
    q = d + 1
    lhs = H(d, m, q, s) - H(d, m, q, s + j)
    if k < m:
        rhs = (sigma + 1) * q ** (m - k - 1) - _floor_power(q, m - k - j)
    else:
        rhs = q ** (m - k) - (d - sigma) * _floor_power(q, m - k - 1) - _floor_power(q, m - k - j)
    return DiffIdentity(s=s, j=j, k=k, sigma=sigma, lhs=lhs, rhs=rhs)


def u_top_range(d: int, m: int, r: int) -> int:
    """For C(m+d,d)-d <= r <= C(m+d,d): H'_{r-(m-1)}(d,m) = C(m+d,d) - r."""
    total = omega_size(d, m)
    if not max(m, total - d) <= r <= total:
        raise DomainError(f"r={r} outside the top range [{max(m, total - d)}, {total}]")
    value = H_prime(d, m, r - (m - 1))
    if value != total - r:
        raise FormulaMismatchError(f"H'_{r - (m - 1)}({d},{m})={value} but C(m+d,d)-r={total - r}", d=d, m=m, r=r)
    return value


# ------------------------------------------------------------------
# Table rows
# ------------------------------------------------------------------
@dataclass(frozen=True)
class FormulaRow:
    d: int
    m: int
    q: int
    r: int
    omega: str
    l: int
    c: int
    j: int
    H: int
    H_prime: Optional[int]
    f: int

    def to_dict(self) -> dict:
        return asdict(self)


def formula_table(d: int, m: int, q: int, ranks: Iterable[int]) -> List[FormulaRow]:
    rows = []
    for r in ranks:
        prof = profile(d, m, r)
        hp = H_prime(d, m, r - (m - 1)) if m <= r and m >= 1 else None
        rows.append(
            FormulaRow(
                d=d, m=m, q=q, r=r,
                omega="(" + ",".join(map(str, prof.tuple)) + ")",
                l=prof.l, c=prof.c, j=prof.j,
                H=H(d, m, q, r), H_prime=hp, f=f(d, m, q, r),
            )
        )
    logger.debug("formula table d=%d m=%d q=%d: %d rows", d, m, q, len(rows))
    return rows
