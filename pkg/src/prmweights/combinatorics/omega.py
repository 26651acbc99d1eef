"""
Rank / unrank for Omega(d,m) (compositions of d into m+1 parts) and for
Omega'(d,m), both ordered lexicographically from the largest tuple down.

Ranks are 1-based: rank 1 is (d,0,...,0).  Nothing here materializes the
tuple lists; unranking walks down the positions subtracting binomial counts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Tuple

from src.prmweights.utils.errors import DomainError
from src.prmweights.combinatorics.binomial import binom


@dataclass(frozen=True)
class ExponentTuple:
    entries: Tuple[int, ...]
    d: int
    m: int

    def __post_init__(self):
        if len(self.entries) != self.m + 1:
            raise DomainError(f"expected {self.m + 1} entries, got {len(self.entries)}")
        if any(v < 0 for v in self.entries) or sum(self.entries) != self.d:
            raise DomainError(f"{self.entries} is not a composition of {self.d}")

    @classmethod
    def of(cls, entries, d: Optional[int] = None) -> "ExponentTuple":
        entries = tuple(int(v) for v in entries)
        return cls(entries, sum(entries) if d is None else d, len(entries) - 1)

    @property
    def in_omega_prime(self) -> bool:
        # d must not sit at positions 2..m (1-indexed)
        return self.d not in self.entries[1:self.m]

    @property
    def first_nonzero(self) -> int:
        """1-based index of the first nonzero entry."""
        for i, v in enumerate(self.entries):
            if v:
                return i + 1
        return self.m + 1  # only when d == 0

    @property
    def last_nonzero_head(self) -> Optional[int]:
        """Largest 1-based k <= m with a nonzero entry, None if entries 1..m vanish."""
        for k in range(self.m, 0, -1):
            if self.entries[k - 1]:
                return k
        return None

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def omega_size(d: int, m: int) -> int:
    return binom(m + d, d)


def omega_prime_size(d: int, m: int) -> int:
    if d < 1 or m < 1:
        raise DomainError(f"Omega'(d,m) needs d, m >= 1, got d={d}, m={m}")
    return binom(m + d, d) - (m - 1)


def _check_dm(d: int, m: int) -> None:
    if d < 0 or m < 0:
        raise DomainError(f"need d, m >= 0, got d={d}, m={m}")


def omega_unrank(d: int, m: int, r: int) -> ExponentTuple:
    """omega_r(d,m): the r-th largest tuple of Omega(d,m)."""
    _check_dm(d, m)
    total = omega_size(d, m)
    if not 1 <= r <= total:
        raise DomainError(f"rank {r} outside [1, {total}] for Omega({d},{m})")
    before = r - 1
    rest = d
    entries = []
    for pos in range(m):
        tail = m - pos  # positions still open after this one
        for v in range(rest, -1, -1):
            count = binom(rest - v + tail - 1, tail - 1)
            if before < count:
                entries.append(v)
                rest -= v
                break
            before -= count
    entries.append(rest)
    return ExponentTuple(tuple(entries), d, m)


def omega_rank(t: ExponentTuple) -> int:
    """r = 1 + sum_k C(m-k+d-(b_1+..+b_k), m-k+1)."""
    d, m = t.d, t.m
    r, prefix = 1, 0
    for k in range(1, m + 1):
        prefix += t.entries[k - 1]
        r += binom(m - k + d - prefix, m - k + 1)
    return r


def iter_omega(d: int, m: int) -> Iterator[ExponentTuple]:
    """All of Omega(d,m) in rank order (lex descending)."""

    def rec(rest: int, slots: int):
        if slots == 1:
            yield (rest,)
            return
        for v in range(rest, -1, -1):
            for tail in rec(rest - v, slots - 1):
                yield (v,) + tail

    for entries in rec(d, m + 1):
        yield ExponentTuple(entries, d, m)


def omega_prime_unrank(d: int, m: int, r_prime: int) -> ExponentTuple:
    """omega'_{r'}(d,m), via the Omega rank shift s = r' + l - 1 (top rank: s = r' + m - 1)."""
    _check_dm(d, m)
    total = omega_prime_size(d, m)
    if not 1 <= r_prime <= total:
        raise DomainError(f"rank {r_prime} outside [1, {total}] for Omega'({d},{m})")
    if r_prime == total:
        return omega_unrank(d, m, omega_size(d, m))
    for l in range(1, m + 1):
        t = omega_unrank(d, m, r_prime + l - 1)
        if t.first_nonzero == l and t.in_omega_prime:
            return t
    raise DomainError(f"no Omega' tuple of rank {r_prime} for d={d}, m={m}")


def omega_prime_rank(t: ExponentTuple) -> int:
    if not t.in_omega_prime:
        raise DomainError(f"{t.entries} is not in Omega'({t.d},{t.m})")
    s = omega_rank(t)
    l = t.first_nonzero
    if l == t.m + 1:
        return s - (t.m - 1)
    return s - l + 1


def shifted_rank(d: int, m: int, r: int) -> int:
    """The s with omega'_{r-(m-1)}(d,m) = omega_s(d,m), for m <= r <= C(m+d,d)."""
    if not m <= r <= omega_size(d, m):
        raise DomainError(f"rank {r} outside [{m}, {omega_size(d, m)}]")
    return omega_rank(omega_prime_unrank(d, m, r - (m - 1)))
