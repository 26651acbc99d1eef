"""
Integer inequalities used to compare H' against H, plus the degree-shift
bound used in the plane proof.  Each helper returns (lhs, rhs) so sweeps can
report the failing pair instead of a bare boolean.
"""

from typing import Tuple

from src.prmweights.combinatorics.formulas import H
from src.prmweights.combinatorics.omega import omega_size, omega_unrank
from src.prmweights.utils.errors import DomainError


def power_sum_bound(d: int, a: int, b: int) -> Tuple[int, int]:
    """(d+1)^{a-1} + (d+1)^{b-1} <= (d+1)^{a+b-1} for a, b >= 1."""
    if a < 1 or b < 1:
        raise DomainError(f"need a, b >= 1, got a={a}, b={b}")
    q = d + 1
    return q ** (a - 1) + q ** (b - 1), q ** (a + b - 1)


def power_sum_minus_bound(d: int, a: int, b: int, c: int) -> Tuple[int, int]:
    """(d+1)^{a-1} + (d+1)^{b-1} - (d+1)^{c-1} <= (d+1)^{a+b-c-1} for 1 <= c <= a, b."""
    if not 1 <= c <= min(a, b):
        raise DomainError(f"need 1 <= c <= min(a, b), got a={a}, b={b}, c={c}")
    q = d + 1
    return q ** (a - 1) + q ** (b - 1) - q ** (c - 1), q ** (a + b - c - 1)


def power_gap_bound(d: int, k: int) -> Tuple[int, int]:
    """d^k <= 1 + (d-1)(d+1)^{k-1} for d, k >= 1."""
    if d < 1 or k < 1:
        raise DomainError(f"need d, k >= 1, got d={d}, k={k}")
    return d**k, 1 + (d - 1) * (d + 1) ** (k - 1)


def scaled_gap_bound(d: int, k: int, beta: int) -> Tuple[int, int]:
    """(beta+1)(d+1)^{k-1} - 1 <= beta((d+1)^k - d^k) for beta, k, d >= 1."""
    if min(d, k, beta) < 1:
        raise DomainError(f"need d, k, beta >= 1, got d={d}, k={k}, beta={beta}")
    q = d + 1
    return (beta + 1) * q ** (k - 1) - 1, beta * (q**k - d**k)


def shift_drop_bound(d: int, m: int, s: int) -> Tuple[int, int]:
    """H_s - H_{s+(m-l)} at q = d+1 against (beta_l + 1)(d+1)^{m-l-1} - 1, for l < m."""
    t = omega_unrank(d, m, s)
    l = t.first_nonzero
    if l >= m:
        raise DomainError(f"first nonzero index {l} of omega_{s}({d},{m}) must be < m")
    if s + (m - l) > omega_size(d, m):
        raise DomainError(f"rank {s + (m - l)} past the end of Omega({d},{m})")
    q = d + 1
    lhs = H(d, m, q, s) - H(d, m, q, s + (m - l))
    return lhs, (t.entries[l - 1] + 1) * q ** (m - l - 1) - 1


def degree_shift_bound(d: int, m: int, c: int, r: int, q: int) -> Tuple[int, int]:
    """H_r(d-c,m;q) + c q^{m-1} <= H_r(d,m;q) for 1 <= c <= d-1, 1 <= r <= C(m+d-c,d-c)."""
    if m < 1 or not 1 <= c <= d - 1:
        raise DomainError(f"need m >= 1 and 1 <= c <= d-1, got m={m}, c={c}, d={d}")
    if not 1 <= r <= omega_size(d - c, m):
        raise DomainError(f"rank {r} outside [1, {omega_size(d - c, m)}]")
    return H(d - c, m, q, r) + c * q ** (m - 1), H(d, m, q, r)
