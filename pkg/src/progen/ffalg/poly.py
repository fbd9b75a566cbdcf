"""Univariate polynomials over F_q, stored as uint8 arrays (low degree first)."""

from __future__ import annotations

import numpy as np

from .field import DTYPE, GF
from .linalg import Echelon


def trim(f) -> np.ndarray:
    f = np.asarray(f, dtype=DTYPE)
    nz = np.flatnonzero(f)
    return f[: nz[-1] + 1] if nz.size else f[:0]


def deg(f) -> int:
    return len(trim(f)) - 1


def monic(F: GF, f) -> np.ndarray:
    f = trim(f)
    if not len(f):
        return f
    return F.mul(f, F.inv_table[f[-1]]).astype(DTYPE)


def add(F: GF, f, g) -> np.ndarray:
    n = max(len(f), len(g))
    a = np.zeros(n, DTYPE)
    b = np.zeros(n, DTYPE)
    a[: len(f)] = f
    b[: len(g)] = g
    return trim(F.add(a, b))


def sub(F: GF, f, g) -> np.ndarray:
    return add(F, f, F.neg(np.asarray(g, DTYPE)))


def mul(F: GF, f, g) -> np.ndarray:
    f, g = trim(f), trim(g)
    if not len(f) or not len(g):
        return np.zeros(0, DTYPE)
    if F.is_prime:
        return trim((np.convolve(f.astype(np.int64), g.astype(np.int64)) % F.p).astype(DTYPE))
    fd, gd = F.to_digits(f), F.to_digits(g)
    acc = np.zeros((len(f) + len(g) - 1, F.e), dtype=np.int64)
    for s in range(F.e):
        for t in range(F.e):
            c = np.convolve(fd[:, s], gd[:, t]) % F.p
            acc += c[:, None] * F._reduce_powers[s + t][None, :]
    return trim(F.from_digits(acc % F.p))


def divmod_(F: GF, f, g) -> tuple[np.ndarray, np.ndarray]:
    f, g = trim(f), trim(g)
    if not len(g):
        raise ZeroDivisionError("polynomial division by zero")
    r = f.copy()
    dg = len(g) - 1
    if len(r) - 1 < dg:
        return np.zeros(0, DTYPE), r
    qt = np.zeros(len(r) - dg, DTYPE)
    lead_inv = F.inv_table[g[-1]]
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            c = F.mul_table[c, lead_inv]
            qt[i - dg] = c
            r[i - dg : i + 1] = F.sub_table[r[i - dg : i + 1], F.mul_table[c, g]]
    return trim(qt), trim(r[:dg])


def mod(F: GF, f, g) -> np.ndarray:
    return divmod_(F, f, g)[1]


def gcd(F: GF, f, g) -> np.ndarray:
    f, g = trim(f), trim(g)
    while len(g):
        f, g = g, mod(F, f, g)
    return monic(F, f)


def powmod(F: GF, f, k: int, m) -> np.ndarray:
    result = np.array([1], DTYPE)
    base = mod(F, f, m)
    while k:
        if k & 1:
            result = mod(F, mul(F, result, base), m)
        base = mod(F, mul(F, base, base), m)
        k >>= 1
    return result


def derivative(F: GF, f) -> np.ndarray:
    f = trim(f)
    if len(f) < 2:
        return np.zeros(0, DTYPE)
    k = np.arange(1, len(f)) % F.p
    # the integer k lies in the prime subfield, encoded as k itself
    return trim(F.mul(f[1:], k.astype(DTYPE)))


def _pth_root(F: GF, f) -> np.ndarray:
    # f(x) = g(x^p); coefficients need the inverse Frobenius
    g = f[:: F.p].copy()
    inv_frob = np.argsort(F.frob_table)
    return trim(inv_frob[g].astype(DTYPE))


def squarefree(F: GF, f) -> list[tuple[np.ndarray, int]]:
    """Squarefree decomposition [(g, multiplicity)] of a monic polynomial."""
    f = monic(F, f)
    out: list[tuple[np.ndarray, int]] = []
    if deg(f) < 1:
        return out
    d = derivative(F, f)
    if not len(d):
        for g, m in squarefree(F, _pth_root(F, f)):
            out.append((g, m * F.p))
        return out
    c = gcd(F, f, d)
    w = divmod_(F, f, c)[0]
    i = 1
    while deg(w) > 0:
        y = gcd(F, w, c)
        z = divmod_(F, w, y)[0]
        if deg(z) > 0:
            out.append((monic(F, z), i))
        i += 1
        w = y
        c = divmod_(F, c, y)[0]
    if deg(c) > 0:
        for g, m in squarefree(F, _pth_root(F, c)):
            out.append((g, m * F.p))
    return out


def distinct_degree(F: GF, f) -> list[tuple[np.ndarray, int]]:
    """Split a squarefree monic f into products of irreducibles of equal degree."""
    f = monic(F, f)
    out = []
    x = np.array([0, 1], DTYPE)
    h = x.copy()
    d = 0
    while deg(f) >= 2 * (d + 1):
        d += 1
        h = powmod(F, h, F.q, f)
        g = gcd(F, f, sub(F, h, x))
        if deg(g) > 0:
            out.append((g, d))
            f = divmod_(F, f, g)[0]
            h = mod(F, h, f)
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def equal_degree(F: GF, f, d: int, rng: np.random.Generator) -> list[np.ndarray]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    f = monic(F, f)
    n = deg(f)
    if n == d:
        return [f]
    while True:
        a = trim(F.random(n, rng))
        if deg(a) < 1:
            continue
        if F.p == 2:
            t = a.copy()
            cur = a.copy()
            for _ in range(F.e * d - 1):
                cur = mod(F, mul(F, cur, cur), f)
                t = add(F, t, cur)
            b = t
        else:
            b = sub(F, powmod(F, a, (F.q**d - 1) // 2, f), np.array([1], DTYPE))
        g = gcd(F, f, b)
        if 0 < deg(g) < n:
            return equal_degree(F, g, d, rng) + equal_degree(F, divmod_(F, f, g)[0], d, rng)


def factor(F: GF, f, seed: int = 0) -> list[tuple[np.ndarray, int]]:
    """Monic irreducible factors with multiplicity, sorted by (degree, coefficients)."""
    rng = np.random.default_rng(seed)
    out = []
    for g, m in squarefree(F, f):
        for h, d in distinct_degree(F, g):
            for irr in equal_degree(F, h, d, rng):
                out.append((irr, m))
    merged: dict[tuple, int] = {}
    for g, m in out:
        key = tuple(int(c) for c in g)
        merged[key] = merged.get(key, 0) + m
    keys = sorted(merged, key=lambda k: (len(k), k[::-1]))
    return [(np.array(k, DTYPE), merged[k]) for k in keys]


def eval_matrix(F: GF, f, A) -> np.ndarray:
    """f(A) by Horner's rule."""
    f = trim(f)
    n = A.shape[0]
    R = np.zeros((n, n), DTYPE)
    eye = F.eye(n)
    for c in f[::-1]:
        R = F.matmul(R, A)
        if c:
            R = F.add(R, F.mul(eye, c))
    return R


def charpoly(F: GF, A) -> np.ndarray:
    """Characteristic polynomial as a product of Krylov chain polynomials."""
    A = F.asarray(A)
    n = A.shape[0]
    E = Echelon(F, 2 * n + 1)
    result = np.array([1], DTYPE)
    for start in range(n):
        if E.rank >= n:
            break
        v = np.zeros(2 * n + 1, DTYPE)
        v[start] = 1
        if E.contains(v[None])[0]:
            continue
        cur = v[:n]
        for i in range(n + 1):
            w = np.zeros(2 * n + 1, DTYPE)
            w[:n] = cur
            w[n + i] = 1
            res = E.reduce(w[None])[0]
            if not res[:n].any():
                result = mul(F, result, trim(res[n : n + i + 1]))
                break
            E.add(res[None])
            cur = F.matmul(cur, A)
        # discard the bookkeeping columns of this chain
        _clear_aux(E, n)
    return result


def _clear_aux(E: Echelon, n: int) -> None:
    E.rows[:, n:] = 0
