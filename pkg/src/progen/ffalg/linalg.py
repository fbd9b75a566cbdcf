"""Dense exact linear algebra over F_q.

Matrices are uint8 numpy arrays of field encodings. Row operations act on
rows; `nullspace(A)` returns rows v with A @ v.T == 0.
"""

from __future__ import annotations

import numpy as np

from .field import DTYPE, GF

CHUNK = 128


def _rref_small(F: GF, A: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Plain Gauss-Jordan; returns the nonzero rows of the rref and pivots."""
    A = np.array(A, dtype=DTYPE, copy=True)
    m, n = A.shape
    piv: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        a = int(A[r, c])
        if a != 1:
            A[r, c:] = F.mul(A[r, c:], F.inv_table[a])
        rows = np.flatnonzero(A[:, c])
        rows = rows[rows != r]
        if rows.size:
            A[rows, c:] = F.outer_sub(A[rows, c:], A[rows, c], A[r, c:])
        piv.append(c)
        r += 1
    return A[:r], piv


class Echelon:
    """Incrementally maintained reduced row echelon basis of a row space."""

    def __init__(self, F: GF, ncols: int):
        self.F = F
        self.ncols = ncols
        self.rows = np.zeros((0, ncols), dtype=DTYPE)
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, V: np.ndarray) -> np.ndarray:
        """Residues of the rows of V modulo the current span."""
        V = np.asarray(V, dtype=DTYPE)
        if not self.pivots:
            return V.copy()
        return self.F.sub(V, self.F.matmul(V[..., self.pivots], self.rows))

    def contains(self, V: np.ndarray) -> np.ndarray:
        V = np.atleast_2d(V)
        return ~self.reduce(V).any(axis=1)

    def add(self, V: np.ndarray) -> int:
        """Add rows of V to the span; returns the rank increase."""
        V = np.atleast_2d(np.asarray(V, dtype=DTYPE))
        before = self.rank
        for s in range(0, V.shape[0], CHUNK):
            if self.rank == self.ncols:
                break
            W = self.reduce(V[s : s + CHUNK])
            W = W[W.any(axis=1)]
            if not len(W):
                continue
            R, piv = _rref_small(self.F, W)
            if self.pivots:
                self.rows = self.F.sub(self.rows, self.F.matmul(self.rows[:, piv], R))
            self.rows = np.vstack([self.rows, R])
            self.pivots = self.pivots + piv
            order = np.argsort(self.pivots, kind="stable")
            self.rows = self.rows[order]
            self.pivots = [self.pivots[i] for i in order]
        return self.rank - before

    def basis(self) -> np.ndarray:
        return self.rows.copy()


def rref(F: GF, A) -> tuple[np.ndarray, int, list[int]]:
    """Reduced row echelon form (same shape as A), rank and pivot columns."""
    A = F.asarray(A)
    m, n = A.shape
    E = Echelon(F, n)
    E.add(A)
    R = np.zeros((m, n), dtype=DTYPE)
    R[: E.rank] = E.rows
    return R, E.rank, list(E.pivots)


def rank(F: GF, A) -> int:
    A = F.asarray(A)
    if A.size == 0:
        return 0
    if F.q == 2 and A.shape[1] > 256:
        from .gf2 import rank_packed

        return rank_packed(A)
    E = Echelon(F, A.shape[1])
    E.add(A)
    return E.rank


def row_basis(F: GF, A) -> np.ndarray:
    A = F.asarray(A)
    E = Echelon(F, A.shape[1])
    E.add(A)
    return E.basis()


def nullspace_from_rref(F: GF, R: np.ndarray, pivots: list[int], n: int) -> np.ndarray:
    free = [c for c in range(n) if c not in set(pivots)]
    N = np.zeros((len(free), n), dtype=DTYPE)
    if not free:
        return N
    N[np.arange(len(free)), free] = 1
    if pivots:
        # x_pivot = -sum R[i, free] x_free
        N[:, pivots] = F.neg(R[: len(pivots)][:, free].T)
    return N


def nullspace(F: GF, A) -> np.ndarray:
    """Basis (as rows) of {v : A @ v = 0}."""
    A = F.asarray(A)
    n = A.shape[1]
    E = Echelon(F, n)
    E.add(A)
    return nullspace_from_rref(F, E.rows, E.pivots, n)


def left_nullspace(F: GF, A) -> np.ndarray:
    """Basis (as rows) of {v : v @ A = 0}."""
    return nullspace(F, F.asarray(A).T)


def solve(F: GF, A, b) -> np.ndarray | None:
    """Some x with A @ x = b, or None when the system is inconsistent."""
    A = F.asarray(A)
    b = F.asarray(b)
    single = b.ndim == 1
    B = b[:, None] if single else b
    m, n = A.shape
    aug = np.hstack([A, B])
    E = Echelon(F, n + B.shape[1])
    E.add(aug)
    if any(p >= n for p in E.pivots):
        return None
    X = np.zeros((n, B.shape[1]), dtype=DTYPE)
    for i, p in enumerate(E.pivots):
        X[p] = E.rows[i, n:]
    return X[:, 0] if single else X


def solve_left(F: GF, A, b) -> np.ndarray | None:
    """Some x with x @ A = b (b may be a stack of rows)."""
    A = F.asarray(A)
    b = F.asarray(b)
    x = solve(F, A.T, b.T)
    return None if x is None else x.T


def inverse(F: GF, A) -> np.ndarray:
    A = F.asarray(A)
    n = A.shape[0]
    if A.shape != (n, n):
        raise ValueError("inverse of a non-square matrix")
    X = solve(F, A, F.eye(n))
    if X is None:
        raise ValueError("matrix is singular")
    return X


def kron(F: GF, A, B) -> np.ndarray:
    A = F.asarray(A)
    B = F.asarray(B)
    if F.is_prime:
        return (np.kron(A.astype(np.int64), B.astype(np.int64)) % F.p).astype(DTYPE)
    out = F.mul_table[A[:, None, :, None], B[None, :, None, :]]
    return out.reshape(A.shape[0] * B.shape[0], A.shape[1] * B.shape[1])


def matpow(F: GF, A, k: int) -> np.ndarray:
    A = F.asarray(A)
    R = F.eye(A.shape[0])
    while k:
        if k & 1:
            R = F.matmul(R, A)
        A = F.matmul(A, A)
        k >>= 1
    return R


def intersect_spaces(F: GF, U, V) -> np.ndarray:
    """Row basis of rowspace(U) ∩ rowspace(V)."""
    U = F.asarray(U)
    V = F.asarray(V)
    if not len(U) or not len(V):
        return np.zeros((0, U.shape[1] if U.ndim == 2 else V.shape[1]), dtype=DTYPE)
    # a U = b V  <=>  (a, -b) in left kernel of [U; V]
    K = left_nullspace(F, np.vstack([U, V]))
    return row_basis(F, F.matmul(K[:, : len(U)], U)) if len(K) else np.zeros((0, U.shape[1]), dtype=DTYPE)
