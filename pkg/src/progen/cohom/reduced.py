"""Cocycles parametrized by their values on generators.

A 1-cocycle is fixed by f(s) for the generators s, through
f(ys) = f(y) + y.f(s).  A normalized 2-cocycle is fixed by f(g, s) for
g != 1 and generators s, through f(g, ys) = f(g, y) + f(gy, s) - g.f(y, s).
Values are propagated along the Schreier tree of the element enumeration;
the remaining Cayley-graph edges give the linear conditions that cut out
Z^1 and Z^2.  Dimensions then follow from
  dim B^1 = dim M - dim M^G,   dim B^2 = (|G| - 1) dim M - dim Z^1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from ..ffalg import linalg
from ..ffalg.field import DTYPE
from ..groups.permgroup import PermGroup
from ..modrep.module import GModule
from .bar import fixed_points


@dataclass
class _Tree:
    parent: np.ndarray
    via: np.ndarray
    rmul: np.ndarray  # rmul[y, k] = index of y * s_k
    inverse: np.ndarray

    @property
    def size(self) -> int:
        return len(self.parent)

    def non_tree_edges(self) -> tuple[np.ndarray, np.ndarray]:
        N, k = self.rmul.shape
        ys, ks = np.meshgrid(np.arange(N), np.arange(k), indexing="ij")
        ys, ks = ys.ravel(), ks.ravel()
        z = self.rmul[ys, ks]
        tree = (self.parent[z] == ys) & (self.via[z] == ks) & (z != 0)
        return ys[~tree], ks[~tree]


def _tree(G: PermGroup) -> _Tree:
    E = G.elements
    P = E.perms
    rmul = np.stack([E.lookup(g[P]) for g in G.gens], axis=1) if G.gens else np.zeros((len(P), 0), np.int64)
    inverse = E.lookup(np.argsort(P, axis=1).astype(P.dtype))
    return _Tree(E.parent, E.via, rmul, inverse)


class ReducedCocycles:
    def __init__(self, G: PermGroup, M: GModule):
        self.G, self.M, self.F = G, M, M.field
        self.tree = _tree(G)
        self.N = self.tree.size
        self.d = M.dim
        self.s = G.ngens

    @cached_property
    def left(self) -> np.ndarray:
        """L[g] = A_{g^-1}, so that g.m = m @ L[g]."""
        return self.M.element_matrices()[self.tree.inverse]

    # -- degree 1 --------------------------------------------------------------
    @cached_property
    def one_cochain_map(self) -> np.ndarray:
        """F1[y] (U1 x d) with f(y) = u @ F1[y], u the generator values."""
        F, N, d, s = self.F, self.N, self.d, self.s
        U = s * d
        F1 = np.zeros((N, U, d), DTYPE)
        t = self.tree
        for y in range(1, N):
            p, k = t.parent[y], t.via[y]
            F1[y] = F1[p]
            F1[y, k * d : (k + 1) * d] = F.add(F1[y, k * d : (k + 1) * d], self.left[p])
        return F1

    def z1_conditions(self) -> np.ndarray:
        F, d = self.F, self.d
        F1 = self.one_cochain_map
        ys, ks = self.tree.non_tree_edges()
        z = self.tree.rmul[ys, ks]
        C = F.sub(F1[z], F1[ys])
        for j, (y, k) in enumerate(zip(ys, ks)):
            C[j, k * d : (k + 1) * d] = F.sub(C[j, k * d : (k + 1) * d], self.left[y])
        U = self.s * d
        return C.transpose(0, 2, 1).reshape(-1, U)

    def z1_basis(self) -> np.ndarray:
        if self.d == 0 or self.s == 0:
            return np.zeros((0, self.s * self.d), DTYPE)
        return linalg.nullspace(self.F, self.z1_conditions())

    def z1_dim(self) -> int:
        if self.d == 0 or self.s == 0:
            return 0
        return self.s * self.d - linalg.rank(self.F, self.z1_conditions())

    def h1(self) -> int:
        if self.d == 0 or self.N == 1:
            return 0
        return self.z1_dim() - (self.d - len(fixed_points(self.M)))

    # -- degree 2 --------------------------------------------------------------
    def _idx(self, g: np.ndarray, k: int) -> np.ndarray:
        """Unknown index of f(g, s_k)[0] for non-identity g."""
        return ((g - 1) * self.s + k) * self.d

    @cached_property
    def two_cochain_map(self) -> np.ndarray:
        """F2[y, g] (d x U2) with f(g, y) = F2[y, g] @ u."""
        F, N, d, s = self.F, self.N, self.d, self.s
        U = (N - 1) * s * d
        F2 = np.zeros((N, N, d, U), DTYPE)
        t = self.tree
        g_all = np.arange(N)
        a = np.arange(d)
        for y in range(1, N):
            p, k = t.parent[y], t.via[y]
            F2[y] = F2[p]
            gp = self._mul_right(g_all, p)
            nz = gp != 0
            cols = self._idx(gp[nz], k)[:, None] + a
            F2[y, g_all[nz][:, None], a, cols] = F.add(F2[y, g_all[nz][:, None], a, cols], 1)
            if p != 0:
                # subtract g.f(p, s_k): entry (a, idx(p,k)+b) -= L[g][b, a]
                base = self._idx(np.array([p]), k)[0]
                block = F2[y, :, :, base : base + d]
                F2[y, :, :, base : base + d] = F.sub(block, self.left.transpose(0, 2, 1))
        return F2

    @cached_property
    def _table(self) -> np.ndarray:
        return self.G.table

    def _mul_right(self, g: np.ndarray, p: int) -> np.ndarray:
        return self._table[g, p]

    def z2_condition_blocks(self):
        """Yield condition rows (one block per non-tree edge) over the U2 unknowns."""
        F, d = self.F, self.d
        F2 = self.two_cochain_map
        ys, ks = self.tree.non_tree_edges()
        g = np.arange(1, self.N)
        a = np.arange(d)
        U = F2.shape[-1]
        for y, k in zip(ys, ks):
            z = self.tree.rmul[y, k]
            C = F.sub(F2[z, 1:], F2[y, 1:])  # (N-1, d, U)
            gy = self._mul_right(g, y)
            nz = gy != 0
            cols = self._idx(gy[nz], k)[:, None] + a
            rows = np.flatnonzero(nz)[:, None]
            C[rows, a, cols] = F.sub(C[rows, a, cols], 1)
            if y != 0:
                base = self._idx(np.array([y]), k)[0]
                C[:, :, base : base + d] = F.add(C[:, :, base : base + d], self.left[1:].transpose(0, 2, 1))
            yield C.reshape(-1, U)

    def z2_conditions(self) -> np.ndarray:
        U = (self.N - 1) * self.s * self.d
        blocks = list(self.z2_condition_blocks())
        return np.vstack(blocks) if blocks else np.zeros((0, U), DTYPE)

    def z2_rank(self) -> int:
        F = self.F
        U = (self.N - 1) * self.s * self.d
        if F.q == 2:
            return linalg.rank(F, self.z2_conditions())
        E = linalg.Echelon(F, U)
        for C in self.z2_condition_blocks():
            E.add(C)
            if E.rank == U:
                break
        return E.rank

    def z2_dim(self) -> int:
        return (self.N - 1) * self.s * self.d - self.z2_rank()

    def h2(self) -> int:
        if self.d == 0 or self.N == 1:
            return 0
        return self.z2_dim() - ((self.N - 1) * self.d - self.z1_dim())

    def z2_basis(self) -> np.ndarray:
        return linalg.nullspace(self.F, self.z2_conditions())

    def coboundary_params(self) -> np.ndarray:
        """Rows: parameters f(g, s_k) of the coboundaries of the unit 1-cochains."""
        F, N, d, s = self.F, self.N, self.d, self.s
        U = (N - 1) * s * d
        out = np.zeros(((N - 1) * d, U), DTYPE)
        g = np.arange(1, N)
        for h in range(1, N):
            for b in range(d):
                row = (h - 1) * d + b
                # (dc)(g, s) = g.c(s) - c(gs) + c(g) with c = e_b at h
                for k in range(s):
                    sk = self.tree.rmul[0, k]
                    if sk == h:
                        vals = self.left[g][:, b, :]  # (N-1, d): g.e_b
                        cols = self._idx(g, k)[:, None] + np.arange(d)
                        out[row, cols] = F.add(out[row, cols], vals)
                    gs = self.tree.rmul[g, k]
                    hit = gs == h
                    if hit.any():
                        cols = self._idx(g[hit], k) + b
                        out[row, cols] = F.sub(out[row, cols], 1)
                    col = self._idx(np.array([h]), k)[0] + b
                    out[row, col] = F.add(out[row, col], 1)
        return out

    def cocycle_table(self, u: np.ndarray) -> np.ndarray:
        """Full normalized 2-cocycle f[g, h] (N x N x d) from parameters u."""
        F2 = self.two_cochain_map
        N, d = self.N, self.d
        flat = F2.transpose(1, 0, 2, 3).reshape(N * N * d, -1)
        return self.F.matmul(flat, u).reshape(N, N, d)


def h_dim_reduced(G: PermGroup, M: GModule, n: int) -> int:
    if n == 0:
        return len(fixed_points(M))
    R = ReducedCocycles(G, M)
    if n == 1:
        return R.h1()
    if n == 2:
        return R.h2()
    raise ValueError("reduced route covers degrees 0..2")
