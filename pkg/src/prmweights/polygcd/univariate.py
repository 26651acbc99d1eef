"""
Dense univariate polynomials over GF(q) as lists of coefficient indices,
lowest degree first.  The zero polynomial is ``[]``.
"""

from typing import List, Sequence, Tuple

from src.prmweights.gf.field import FieldSpec

UPoly = List[int]


def trim(a: Sequence[int]) -> UPoly:
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out


def deg(a: Sequence[int]) -> int:
    return len(a) - 1


def add(a: Sequence[int], b: Sequence[int], F: FieldSpec) -> UPoly:
    n = max(len(a), len(b))
    out = [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return trim(out)


def sub(a: Sequence[int], b: Sequence[int], F: FieldSpec) -> UPoly:
    n = max(len(a), len(b))
    out = [F.sub(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
    return trim(out)


def scale(a: Sequence[int], c: int, F: FieldSpec) -> UPoly:
    if c == 0:
        return []
    return trim([F.mul(v, c) for v in a])


def mul(a: Sequence[int], b: Sequence[int], F: FieldSpec) -> UPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return trim(out)


def divmod_(a: Sequence[int], b: Sequence[int], F: FieldSpec) -> Tuple[UPoly, UPoly]:
    b = trim(b)
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    r = trim(a)
    if len(r) < len(b):
        return [], r
    quot = [0] * (len(r) - len(b) + 1)
    lead_inv = F.inv(b[-1])
    while r and len(r) >= len(b):
        c = F.mul(r[-1], lead_inv)
        shift = len(r) - len(b)
        quot[shift] = c
        for i, bc in enumerate(b):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, bc))
        r = trim(r)
    return trim(quot), r


def monic(a: Sequence[int], F: FieldSpec) -> UPoly:
    a = trim(a)
    if not a:
        return []
    return scale(a, F.inv(a[-1]), F)


def gcd(a: Sequence[int], b: Sequence[int], F: FieldSpec) -> UPoly:
    a, b = trim(a), trim(b)
    while b:
        a, b = b, divmod_(a, b, F)[1]
    return monic(a, F)
