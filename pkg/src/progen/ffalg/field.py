"""Small finite fields F_q (q = p**e <= 256) with table arithmetic.

Elements are encoded as integers 0..q-1 in base p: digit i is the
coefficient of the i-th power of the generator. Arrays of elements use
dtype uint8.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

MAX_TABLE_Q = 256
DTYPE = np.uint8


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


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p**e, or raise ValueError."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    e, m = 0, q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


def _poly_divides(d: list[int], f: list[int], p: int) -> bool:
    # d monic; coefficient lists low -> high
    r = list(f)
    dd = len(d) - 1
    for i in range(len(r) - 1, dd - 1, -1):
        c = r[i] % p
        if c:
            for j in range(dd + 1):
                r[i - dd + j] = (r[i - dd + j] - c * d[j]) % p
    return not any(x % p for x in r[:dd])


def _monic_polys(p: int, deg: int):
    for m in range(p**deg):
        coeffs = []
        for _ in range(deg):
            coeffs.append(m % p)
            m //= p
        yield coeffs + [1]


def is_irreducible(modulus, p: int) -> bool:
    """Trial-division irreducibility test for a monic polynomial over F_p."""
    f = [int(c) % p for c in modulus]
    e = len(f) - 1
    if e < 1 or f[-1] != 1:
        return False
    if e == 1:
        return True
    for d in range(1, e // 2 + 1):
        for g in _monic_polys(p, d):
            if _poly_divides(g, f, p):
                return False
    return True


@lru_cache(maxsize=None)
def canonical_modulus(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically least monic irreducible of degree e over F_p.

    Candidates are ordered by the integer whose base-p digits are the
    non-leading coefficients, so the x^(e-1) coefficient is compared first.
    """
    if not is_prime(p) or e < 1:
        raise ValueError(f"bad field parameters p={p}, e={e}")
    for coeffs in _monic_polys(p, e):
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise AssertionError("no irreducible polynomial found")


@dataclass(frozen=True)
class FieldSpec:
    p: int
    e: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.e

    @classmethod
    def canonical(cls, q: int) -> "FieldSpec":
        p, e = prime_power(q)
        return cls(p, e, canonical_modulus(p, e))

    def validate(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if len(self.modulus) != self.e + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree e")
        if not is_irreducible(self.modulus, self.p):
            raise ValueError(f"modulus {self.modulus} is reducible over F_{self.p}")


class GF:
    """The field F_q. Use :func:`gf` to obtain the canonical instance."""

    def __init__(self, spec: FieldSpec):
        spec.validate()
        if spec.q > MAX_TABLE_Q:
            raise ValueError(f"fields larger than {MAX_TABLE_Q} elements are not supported")
        self.spec = spec
        self.p, self.e, self.q = spec.p, spec.e, spec.q
        self.is_prime = spec.e == 1
        p, e, q = self.p, self.e, self.q

        ints = np.arange(q)
        self.digits = np.stack([(ints // p**i) % p for i in range(e)], axis=1).astype(np.int64)
        self._place = np.array([p**i for i in range(e)], dtype=np.int64)

        # x^k reduced mod the modulus, for k < 2e-1, as digit vectors
        mod = np.array(spec.modulus[:-1], dtype=np.int64)
        red = np.zeros((max(2 * e - 1, 1), e), dtype=np.int64)
        cur = np.zeros(e, dtype=np.int64)
        cur[0] = 1
        for k in range(red.shape[0]):
            red[k] = cur
            top = cur[-1]
            cur = np.roll(cur, 1)
            cur[0] = 0
            cur = (cur - top * mod) % p
        self._reduce_powers = red

        self.add_table = self.from_digits((self.digits[:, None, :] + self.digits[None, :, :]) % p)
        self.neg_table = self.from_digits((-self.digits) % p)
        self.sub_table = self.add_table[:, self.neg_table]
        prod = np.zeros((q, q, e), dtype=np.int64)
        for s in range(e):
            for t in range(e):
                prod += np.multiply.outer(self.digits[:, s], self.digits[:, t])[:, :, None] * red[s + t]
        self.mul_table = self.from_digits(prod % p)
        inv = np.zeros(q, dtype=DTYPE)
        for a in range(1, q):
            inv[a] = int(np.flatnonzero(self.mul_table[a] == 1)[0])
        self.inv_table = inv
        self.frob_table = np.array([self.pow(int(a), p) for a in range(q)], dtype=DTYPE)
        self._gen = None

    # -- encoding -------------------------------------------------------
    def from_digits(self, d: np.ndarray) -> np.ndarray:
        return (np.asarray(d, dtype=np.int64) @ self._place).astype(DTYPE)

    def to_digits(self, a) -> np.ndarray:
        return self.digits[np.asarray(a, dtype=np.int64)]

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GF) and other.spec == self.spec

    def __hash__(self) -> int:
        return hash(self.spec)

    def __reduce__(self):
        return (gf, (self.q,)) if self.spec == FieldSpec.canonical(self.q) else (GF, (self.spec,))

    # -- scalar helpers ---------------------------------------------------
    def pow(self, a: int, k: int) -> int:
        if k < 0:
            a, k = int(self.inv_table[a]), -k
        r = 1
        while k:
            if k & 1:
                r = int(self.mul_table[r, a])
            a = int(self.mul_table[a, a])
            k >>= 1
        return r

    def primitive_element(self) -> int:
        if self._gen is None:
            order = self.q - 1
            primes = [f for f in range(2, order + 1) if order % f == 0 and is_prime(f)]
            for g in range(1, self.q):
                if all(self.pow(g, order // f) != 1 for f in primes):
                    self._gen = g
                    break
        return self._gen

    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=DTYPE)

    # -- elementwise arrays ---------------------------------------------------
    def asarray(self, a) -> np.ndarray:
        a = np.asarray(a)
        if a.dtype != DTYPE:
            a = np.asarray(a, dtype=np.int64)
            if a.size and (a.min() < 0 or a.max() >= self.q):
                if self.is_prime:
                    a = a % self.p
                else:
                    raise ValueError("entries out of range for the field")
            a = a.astype(DTYPE)
        return a

    def add(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b).astype(DTYPE)
        if self.is_prime:
            return ((np.asarray(a, np.int64) + b) % self.p).astype(DTYPE)
        return self.add_table[a, b]

    def sub(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b).astype(DTYPE)
        if self.is_prime:
            return ((np.asarray(a, np.int64) - b) % self.p).astype(DTYPE)
        return self.sub_table[a, b]

    def neg(self, a):
        if self.p == 2:
            return np.asarray(a, DTYPE)
        return self.neg_table[a]

    def mul(self, a, b):
        if self.is_prime:
            return ((np.asarray(a, np.int64) * b) % self.p).astype(DTYPE)
        return self.mul_table[a, b]

    def inv(self, a):
        return self.inv_table[a]

    def sum(self, a, axis=None):
        a = np.asarray(a)
        if self.is_prime:
            return (a.astype(np.int64).sum(axis=axis) % self.p).astype(DTYPE)
        if self.p == 2:
            return np.bitwise_xor.reduce(a.astype(DTYPE), axis=axis)
        d = self.digits[a.astype(np.int64)]
        if axis is None:
            d = d.reshape(-1, self.e).sum(axis=0)
        else:
            d = d.sum(axis=axis if axis >= 0 else axis - 1)
        return self.from_digits(d % self.p)

    def frobenius(self, a):
        return self.frob_table[a]

    # -- matrices ---------------------------------------------------------------
    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=DTYPE)

    def eye(self, n: int) -> np.ndarray:
        return np.eye(n, dtype=DTYPE)

    def random(self, shape, rng: np.random.Generator) -> np.ndarray:
        return rng.integers(0, self.q, size=shape).astype(DTYPE)

    def matmul(self, A, B) -> np.ndarray:
        """Matrix product over F_q (BLAS on digit planes)."""
        A = np.asarray(A)
        B = np.asarray(B)
        if A.shape[-1] == 0:
            return np.zeros(A.shape[:-1] + B.shape[1:], dtype=DTYPE)
        p = self.p
        if self.is_prime:
            C = np.matmul(A.astype(np.float64), B.astype(np.float64))
            return np.mod(C, p).astype(DTYPE)
        Ad = [self.digits[A.astype(np.int64), s].astype(np.float64) for s in range(self.e)]
        Bd = [self.digits[B.astype(np.int64), t].astype(np.float64) for t in range(self.e)]
        acc = None
        for s in range(self.e):
            for t in range(self.e):
                prod = np.mod(np.matmul(Ad[s], Bd[t]), p).astype(np.int64)
                if acc is None:
                    acc = np.zeros(prod.shape + (self.e,), dtype=np.int64)
                red = self._reduce_powers[s + t]
                for u in range(self.e):
                    if red[u]:
                        acc[..., u] += red[u] * prod
        return self.from_digits(acc % p)

    def scale(self, c: int, A) -> np.ndarray:
        return self.mul(np.asarray(A, DTYPE), DTYPE(c)) if not self.is_prime else self.mul(A, int(c))

    def outer_sub(self, block, f, row):
        """Return block - f[:, None] * row[None, :]."""
        if self.is_prime:
            return ((block.astype(np.int64) - np.multiply.outer(f.astype(np.int64), row.astype(np.int64))) % self.p).astype(DTYPE)
        return self.sub_table[block, self.mul_table[f[:, None], row[None, :]]]


@lru_cache(maxsize=None)
def gf(q: int) -> GF:
    """Canonical field of order q."""
    return GF(FieldSpec.canonical(q))


def embedding(small: GF, big: GF) -> np.ndarray:
    """Lookup array sending elements of `small` into `big` (a subfield embedding).

    The generator of `small` is sent to the least root (by encoding) of its
    modulus in `big`; raises ValueError when no embedding exists.
    """
    if small.p != big.p or big.e % small.e:
        raise ValueError(f"{small} does not embed in {big}")
    if small.e == 1:
        return np.arange(small.q, dtype=DTYPE)
    mod = small.spec.modulus
    root = None
    for x in range(big.q):
        acc = 0
        for c in reversed(mod):
            acc = int(big.add_table[big.mul_table[acc, x], c])
        if acc == 0:
            root = x
            break
    if root is None:
        raise ValueError("modulus has no root in the larger field")
    powers = [1]
    for _ in range(small.e - 1):
        powers.append(int(big.mul_table[powers[-1], root]))
    out = np.zeros(small.q, dtype=DTYPE)
    for a in range(small.q):
        acc = 0
        for i, d in enumerate(small.digits[a]):
            acc = int(big.add_table[acc, big.mul_table[int(d), powers[i]]])
        out[a] = acc
    return out
