"""The normalized bar complex with sparse coboundary matrices.

Cochains of degree n are functions (G \\ 1)^n -> M; G acts on the left by
g.m = m @ A_{g^-1}.  Coordinates: tuple index (base |G|-1, first entry most
significant) times dim M plus the module coordinate.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .. import caps
from ..ffalg import linalg
from ..ffalg.field import DTYPE
from ..ffalg.sparse import SparseMatrix, sparse_rank
from ..groups.permgroup import PermGroup
from ..modrep.module import GModule

DENSE_LIMIT = 40_000_000


def left_action_matrices(M: GModule) -> np.ndarray:
    """L[g] with g.m = m @ L[g], i.e. L[g] = A_{g^-1}."""
    G = M.group
    return M.element_matrices()[G.inverse_index]


class CochainSpace:
    def __init__(self, G: PermGroup, M: GModule, n: int):
        if n < 0 or n > 3:
            raise ValueError("degree must be in 0..3")
        self.group, self.module, self.n = G, M, n
        self.N = G.order()
        self.d = M.dim

    @property
    def dim(self) -> int:
        return (self.N - 1) ** self.n * self.d

    def tuples(self, n: int | None = None) -> np.ndarray:
        """All n-tuples of non-identity element indices, in coordinate order."""
        n = self.n if n is None else n
        base = self.N - 1
        codes = np.arange(base**n, dtype=np.int64)
        out = np.empty((base**n, n), dtype=np.int64)
        for i in range(n):
            out[:, i] = (codes // base ** (n - 1 - i)) % base + 1
        return out

    def _code(self, tup: np.ndarray) -> np.ndarray:
        base = self.N - 1
        code = np.zeros(len(tup), dtype=np.int64)
        for i in range(tup.shape[1]):
            code = code * base + (tup[:, i] - 1)
        return code

    @cached_property
    def coboundary(self) -> SparseMatrix:
        """Matrix of d^n: C^n -> C^{n+1}, acting on column vectors."""
        G, M, F = self.group, self.module, self.module.field
        n, d = self.n, self.d
        caps.check("bar_columns", self.dim)
        T = G.table
        L = left_action_matrices(M)
        rows_t = self.tuples(n + 1)
        R = len(rows_t)
        shape = ((self.N - 1) ** (n + 1) * d, self.dim)
        ar = np.arange(R)
        ri, ci, vi = [], [], []
        minus_one = int(F.neg(np.array([1], DTYPE))[0])
        # g_1 . f(g_2, ..., g_{n+1})
        col = self._code(rows_t[:, 1:])
        a, b = np.meshgrid(np.arange(d), np.arange(d), indexing="ij")
        vals = L[rows_t[:, 0]][:, b, a]  # entry (a, b) = L[g][b, a]
        ri.append((ar[:, None, None] * d + a[None]).ravel())
        ci.append((col[:, None, None] * d + b[None]).ravel())
        vi.append(vals.ravel())
        # alternating face terms
        for i in range(1, n + 1):
            prod = T[rows_t[:, i - 1], rows_t[:, i]]
            keep = prod != 0
            tup = np.concatenate([rows_t[:, : i - 1], prod[:, None], rows_t[:, i + 1 :]], axis=1)[keep]
            self._identity_terms(ri, ci, vi, ar[keep], self._code(tup), minus_one if i % 2 else 1)
        last = self._code(rows_t[:, :n])
        self._identity_terms(ri, ci, vi, ar, last, minus_one if (n + 1) % 2 else 1)
        return SparseMatrix(F, shape, np.concatenate(ri), np.concatenate(ci), np.concatenate(vi).astype(DTYPE))

    def _identity_terms(self, ri, ci, vi, rows, cols, sign: int) -> None:
        d = self.d
        a = np.arange(d)
        ri.append((rows[:, None] * d + a).ravel())
        ci.append((cols[:, None] * d + a).ravel())
        vi.append(np.full(len(rows) * d, sign, dtype=DTYPE))

    def coboundary_rank(self) -> int:
        D = self.coboundary
        if D.shape[0] == 0 or D.shape[1] == 0:
            return 0
        if D.shape[0] * D.shape[1] <= DENSE_LIMIT:
            return linalg.rank(self.module.field, D.to_dense())
        return sparse_rank(D)

    def check_dd(self, trials: int = 3, seed: int = 0) -> bool:
        """d^{n+1} d^n = 0 on random cochains."""
        F = self.module.field
        nxt = CochainSpace(self.group, self.module, self.n + 1)
        rng = np.random.default_rng(seed)
        for _ in range(trials):
            f = F.random(self.dim, rng)
            if nxt.coboundary.matvec(self.coboundary.matvec(f)).any():
                return False
        return True


def fixed_points(M: GModule) -> np.ndarray:
    """Basis of M^G."""
    F = M.field
    if M.dim == 0:
        return np.zeros((0, 0), DTYPE)
    if not M.mats:
        return F.eye(M.dim)
    eye = F.eye(M.dim)
    return linalg.left_nullspace(F, np.hstack([F.sub(A, eye) for A in M.mats]))


def h_dim_bar(G: PermGroup, M: GModule, n: int) -> int:
    """dim H^n(G, M) from the literal normalized bar complex."""
    if n == 0:
        return len(fixed_points(M))
    if M.dim == 0 or G.order() == 1:
        return 0
    C = CochainSpace(G, M, n)
    lower = CochainSpace(G, M, n - 1).coboundary_rank()
    return C.dim - C.coboundary_rank() - lower
