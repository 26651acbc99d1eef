from math import comb


def binom(n: int, k: int) -> int:
    """C(n,k), taken to be 0 whenever k < 0 or k > n (negative n included)."""
    if k < 0 or n < k:
        return 0
    return comb(n, k)


def pi(m: int, q: int) -> int:
    """pi_m(q) = |P^m(F_q)| = (q^{m+1}-1)/(q-1); 0 for m < 0."""
    if m < 0:
        return 0
    return (q ** (m + 1) - 1) // (q - 1)
