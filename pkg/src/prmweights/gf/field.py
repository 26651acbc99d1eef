"""GF(q) finite field arithmetic, q = p^e <= 2^16.

Elements are plain integer indices in [0, q).  For a prime field the index is
the residue.  For e > 1 the index is the base-p digit vector of the polynomial
representative, least significant coefficient first, so ``x`` has index ``p``.

All state lives in :class:`FieldSpec`; a spec is immutable after construction
and may be shared by any number of workers.

Scalar ops (``add``, ``mul``, ...) take ints.  The ``v*`` ops take numpy
integer arrays of indices and broadcast like numpy.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Optional, Sequence

import numpy as np

from src.prmweights.config.settings import FULL_TABLE_ORDER, MAX_FIELD_ORDER
from src.prmweights.utils.errors import FieldError

logger = logging.getLogger(__name__)


# ------------------------------------------------------------------
# Helpers over GF(p)[x] (coefficient lists, low degree first)
# ------------------------------------------------------------------
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> List[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def _trim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_rem(a: Sequence[int], b: Sequence[int], p: int) -> List[int]:
    """Remainder of a by b over GF(p); b must have a nonzero leading coefficient."""
    r = _trim(list(a))
    lead_inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        c = (r[-1] * lead_inv) % p
        shift = len(r) - 1 - db
        for i, bc in enumerate(b):
            r[shift + i] = (r[shift + i] - c * bc) % p
        _trim(r)
    return r


def _poly_mulmod(a: Sequence[int], b: Sequence[int], mod: Sequence[int], p: int) -> List[int]:
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ac in enumerate(a):
        if ac:
            for j, bc in enumerate(b):
                prod[i + j] = (prod[i + j] + ac * bc) % p
    return _poly_rem(prod, mod, p)


def _digits(v: int, p: int, e: int) -> List[int]:
    out = []
    for _ in range(e):
        out.append(v % p)
        v //= p
    return out


def _from_digits(ds: Sequence[int], p: int) -> int:
    v = 0
    for c in reversed(ds):
        v = v * p + c
    return v


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    e = len(modulus) - 1
    for k in range(1, e // 2 + 1):
        for low in range(p**k):
            divisor = _digits(low, p, k) + [1]
            if not _poly_rem(modulus, divisor, p):
                return False
    return True


def default_modulus(p: int, e: int) -> List[int]:
    """Lexicographically smallest irreducible monic polynomial of degree e over GF(p)."""
    if e == 1:
        return [0, 1]
    for low in range(p**e):
        candidate = _digits(low, p, e) + [1]
        if candidate[0] == 0:
            continue
        if is_irreducible(candidate, p):
            return candidate
    raise FieldError(f"no irreducible polynomial of degree {e} over GF({p})")


# ------------------------------------------------------------------
# FieldSpec
# ------------------------------------------------------------------
class FieldSpec:
    """The finite field GF(p^e).

    Parameters
    ----------
    p : int
        Characteristic, must be prime.
    e : int
        Extension degree, e >= 1.
    modulus : list of int, optional
        e+1 coefficients (low degree first) of an irreducible polynomial.
        Ignored for e = 1.  Defaults to :func:`default_modulus`.
    """

    def __init__(self, p: int, e: int = 1, modulus: Optional[Sequence[int]] = None) -> None:
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if e < 1:
            raise FieldError(f"extension degree must be >= 1, got {e}")
        if p**e > MAX_FIELD_ORDER:
            raise FieldError(f"field order {p}^{e} exceeds the table cap {MAX_FIELD_ORDER}")

        self.characteristic = p
        self.extension_degree = e
        self.order = p**e

        if e == 1:
            self.modulus = [0, 1]
        elif modulus is None:
            self.modulus = default_modulus(p, e)
        else:
            mod = [int(c) % p for c in modulus]
            if len(mod) != e + 1 or mod[-1] == 0:
                raise FieldError(f"modulus must have exactly {e + 1} coefficients with nonzero leading term")
            lead_inv = pow(mod[-1], p - 2, p)
            mod = [(c * lead_inv) % p for c in mod]
            if not is_irreducible(mod, p):
                raise FieldError(f"modulus {mod} is reducible over GF({p})")
            self.modulus = mod

        self._build_tables()
        logger.debug("built GF(%d) with modulus %s", self.order, self.modulus)

    # aliases used all over the package
    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def e(self) -> int:
        return self.extension_degree

    @property
    def q(self) -> int:
        return self.order

    @property
    def is_prime_field(self) -> bool:
        return self.extension_degree == 1

    # ------------------------------------------------------------------
    # Table construction
    # ------------------------------------------------------------------
    def _build_tables(self) -> None:
        p, e, q = self.p, self.e, self.order
        self._neg = np.array([(-v) % p for v in range(q)], dtype=np.int64) if e == 1 else None
        self._add_table = None
        self._mul_table = None

        if e == 1:
            inv = np.zeros(q, dtype=np.int64)
            for a in range(1, q):
                inv[a] = pow(a, p - 2, p)
            self._inv = inv
            return

        # digit decomposition of every index, for vectorized addition
        self._place = p ** np.arange(e, dtype=np.int64)
        self._digit_table = (np.arange(q, dtype=np.int64)[:, None] // self._place) % p
        self._neg = (((-self._digit_table) % p) * self._place).sum(axis=1)

        gen = self._find_generator()
        # multiplication by gen as a linear map on digit vectors
        gen_digits = _digits(gen, p, e)
        images = np.array(
            [(_poly_mulmod(gen_digits, [0] * i + [1], self.modulus, p) + [0] * e)[:e] for i in range(e)],
            dtype=np.int64,
        )
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        cur = np.zeros(e, dtype=np.int64)
        cur[0] = 1
        for k in range(q - 1):
            v = int((cur * self._place).sum())
            exp[k] = v
            log[v] = k
            cur = (cur @ images) % p
        exp[q - 1:] = exp[: q - 1]
        self._exp, self._log = exp, log

        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
        self._inv = inv

        if q <= FULL_TABLE_ORDER:
            idx = np.arange(q, dtype=np.int64)
            self._add_table = self._vadd_digits(idx[:, None], idx[None, :])
            self._mul_table = self._vmul_log(idx[:, None], idx[None, :])

    def _find_generator(self) -> int:
        p, e, q = self.p, self.e, self.order
        cofactors = [(q - 1) // f for f in _prime_factors(q - 1)]
        for g in range(2, q):
            gd = _digits(g, p, e)
            if all(self._poly_pow(gd, c) != [1] for c in cofactors):
                return g
        raise FieldError("no multiplicative generator found")  # unreachable for a field

    def _poly_pow(self, base: List[int], n: int) -> List[int]:
        result, b = [1], list(base)
        while n:
            if n & 1:
                result = _poly_mulmod(result, b, self.modulus, self.p)
            b = _poly_mulmod(b, b, self.modulus, self.p)
            n >>= 1
        return _trim(result) or [0]

    def _vadd_digits(self, a, b):
        s = (self._digit_table[a] + self._digit_table[b]) % self.p
        return (s * self._place).sum(axis=-1)

    def _vmul_log(self, a, b):
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        out = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, out)

    # ------------------------------------------------------------------
    # Scalar arithmetic on indices
    # ------------------------------------------------------------------
    def _check(self, *vals: int) -> None:
        for v in vals:
            if not 0 <= v < self.order:
                raise FieldError(f"{v} is not an element index of GF({self.order})")

    def add(self, a: int, b: int) -> int:
        if self.is_prime_field:
            return (a + b) % self.p
        if self._add_table is not None:
            return int(self._add_table[a, b])
        return int(self._vadd_digits(a, b))

    def neg(self, a: int) -> int:
        return int(self._neg[a])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.is_prime_field:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return int(self._exp[self._log[a] + self._log[b]])

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError(f"zero has no multiplicative inverse in GF({self.order})")
        return int(self._inv[a])

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            return self.pow(self.inv(a), -n)
        if a == 0:
            return 1 if n == 0 else 0
        if self.is_prime_field:
            return pow(a, n, self.p)
        return int(self._exp[(int(self._log[a]) * n) % (self.order - 1)])

    # ------------------------------------------------------------------
    # Vectorized arithmetic on numpy index arrays
    # ------------------------------------------------------------------
    def vadd(self, a, b):
        if self.is_prime_field:
            return (np.asarray(a, dtype=np.int64) + b) % self.p
        if self._add_table is not None:
            return self._add_table[a, b]
        return self._vadd_digits(a, b)

    def vneg(self, a):
        return self._neg[a]

    def vsub(self, a, b):
        if self.is_prime_field:
            return (np.asarray(a, dtype=np.int64) - b) % self.p
        return self.vadd(a, self._neg[b])

    def vmul(self, a, b):
        if self.is_prime_field:
            return (np.asarray(a, dtype=np.int64) * b) % self.p
        if self._mul_table is not None:
            return self._mul_table[a, b]
        return self._vmul_log(a, b)

    def vinv(self, a):
        a = np.asarray(a, dtype=np.int64)
        if np.any(a == 0):
            raise FieldError(f"zero has no multiplicative inverse in GF({self.order})")
        return self._inv[a]

    def matmul(self, A, B):
        """Matrix product over the field; supports numpy batch dimensions like ``@``."""
        A = np.asarray(A, dtype=np.int64)
        B = np.asarray(B, dtype=np.int64)
        if self.is_prime_field:
            return (A @ B) % self.p
        out = None
        for k in range(A.shape[-1]):
            term = self.vmul(A[..., :, k:k + 1], B[..., k:k + 1, :])
            out = term if out is None else self.vadd(out, term)
        if out is None:
            return np.zeros(A.shape[:-1] + B.shape[-1:], dtype=np.int64)
        return out

    # ------------------------------------------------------------------
    # Identity / serialization
    # ------------------------------------------------------------------
    def key(self):
        return (self.p, self.e, tuple(self.modulus))

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldSpec) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __repr__(self) -> str:
        if self.is_prime_field:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.e}, modulus={self.modulus})"

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}

    def element(self, index: int) -> "FieldElement":
        self._check(index)
        return FieldElement(self, index)


@lru_cache(maxsize=64)
def _cached_field(p: int, e: int, modulus: Optional[tuple]) -> FieldSpec:
    return FieldSpec(p, e, list(modulus) if modulus is not None else None)


def field_new(p: int, e: int = 1, modulus: Optional[Iterable[int]] = None) -> FieldSpec:
    """Build (or reuse) the field GF(p^e); construction is deterministic."""
    return _cached_field(p, e, tuple(modulus) if modulus is not None else None)


def field_from_json(data: dict) -> FieldSpec:
    return field_new(int(data["p"]), int(data["e"]), data.get("modulus") if int(data["e"]) > 1 else None)


# ------------------------------------------------------------------
# FieldElement: a checked wrapper for user-facing arithmetic
# ------------------------------------------------------------------
@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    index: int

    def _same(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldError("operands belong to different fields")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.field, self.field.add(self.index, other.index))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.field, self.field.sub(self.index, other.index))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.field, self.field.mul(self.index, other.index))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._same(other)
        return FieldElement(self.field, self.field.div(self.index, other.index))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.index))

    def __pow__(self, n: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.index, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.index))

    def is_zero(self) -> bool:
        return self.index == 0

    def __repr__(self) -> str:
        return f"{self.index}@{self.field!r}"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()
