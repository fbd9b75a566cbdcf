"""Group extensions from 2-cocycles, and Schur p-ranks of perfect groups."""

from __future__ import annotations

import itertools

import numpy as np

from .. import caps
from ..ffalg import linalg
from ..ffalg.field import DTYPE, gf
from ..groups.permgroup import PermGroup
from ..modrep.module import GModule, trivial_module
from .bar import left_action_matrices
from .ext import h_dim
from .reduced import ReducedCocycles


class NotACocycle(ValueError):
    pass


def check_cocycle(G: PermGroup, M: GModule, f: np.ndarray) -> bool:
    """g.f(h,k) - f(gh,k) + f(g,hk) - f(g,h) = 0 for all g, h, k."""
    F, T = M.field, G.table
    N = len(T)
    if f.shape != (N, N, M.dim):
        return False
    L = left_action_matrices(M)
    for g in range(N):
        lhs = F.sub(F.matmul(f, L[g]), f[T[g]])
        lhs = F.add(lhs, f[g][T])
        lhs = F.sub(lhs, f[g][:, None, :])
        if lhs.any():
            return False
    return True


def _vectors(F, d: int) -> np.ndarray:
    codes = np.arange(F.q**d, dtype=np.int64)
    out = np.zeros((len(codes), d), DTYPE)
    for i in range(d):
        out[:, i] = (codes // F.q**i) % F.q
    return out


class Extension:
    """E = G x M with (g, a)(h, b) = (gh, a + g.b + f(g, h)).

    The pair (g, a) is the point g * |M| + code(a), and E acts on these
    points by right multiplication.
    """

    def __init__(self, G: PermGroup, M: GModule, f: np.ndarray):
        self.G, self.M, self.F = G, M, M.field
        self.nv = self.F.q**M.dim
        self.size = G.order() * self.nv
        caps.check("extension", self.size)
        if not check_cocycle(G, M, f):
            raise NotACocycle("cochain fails the 2-cocycle identity")
        self.f = f
        self.L = left_action_matrices(M)
        self.V = _vectors(self.F, M.dim)
        self.weights = self.F.q ** np.arange(M.dim, dtype=np.int64)

    def code(self, V: np.ndarray) -> np.ndarray:
        return V.astype(np.int64) @ self.weights

    def right_mult(self, h: int, b: np.ndarray) -> np.ndarray:
        F, T, nv = self.F, self.G.table, self.nv
        img = np.empty(self.size, dtype=np.int64)
        for g in range(len(T)):
            shift = F.add(F.matmul(b, self.L[g]), self.f[g, h])
            img[g * nv : (g + 1) * nv] = T[g, h] * nv + self.code(F.add(self.V, shift))
        return img

    def group(self) -> PermGroup:
        F, d = self.F, self.M.dim
        zero = np.zeros(d, DTYPE)
        gens = [self.right_mult(int(h), zero) for h in self.G.gen_index]
        for i in range(d):
            for j in range(F.e):
                b = zero.copy()
                b[i] = F.p**j  # alpha^j e_i
                gens.append(self.right_mult(0, b))
        return PermGroup(gens, degree=self.size)

    def is_split(self) -> bool:
        """Search for a complement: lifts (s, m_s) of the generators spanning a subgroup of order |G|."""
        G = self.G
        N = G.order()
        if N == 1:
            return True
        caps.check("extension", self.nv**G.ngens)
        for choice in itertools.product(range(self.nv), repeat=G.ngens):
            gens = [self.right_mult(int(s), self.V[c]) for s, c in zip(G.gen_index, choice)]
            if PermGroup(gens, degree=self.size).order() == N:
                return True
        return False


def extension_from_cocycle(G: PermGroup, M: GModule, f: np.ndarray) -> tuple[PermGroup, bool]:
    """The extension group for the cocycle table f (|G| x |G| x dim M) and whether it splits."""
    X = Extension(G, M, f)
    E = X.group()
    if E.order() != X.size:
        raise AssertionError("extension has the wrong order")
    return E, X.is_split()


def nonsplit_cocycle(G: PermGroup, M: GModule) -> np.ndarray | None:
    """A cocycle table outside B^2, or None when H^2 = 0."""
    R = ReducedCocycles(G, M)
    Z = R.z2_basis()
    B = linalg.Echelon(M.field, Z.shape[1])
    B.add(R.coboundary_params())
    for u in Z:
        if not B.contains(u[None])[0]:
            return R.cocycle_table(u)
    return None


def h2_class_reps(G: PermGroup, M: GModule, limit: int = 256) -> list[np.ndarray]:
    """One cocycle table per class of H^2(G, M), the zero class first."""
    R = ReducedCocycles(G, M)
    F = M.field
    Z = R.z2_basis()
    B = linalg.Echelon(F, Z.shape[1])
    B.add(R.coboundary_params())
    comp = []
    for u in Z:
        if not B.contains(u[None])[0]:
            comp.append(u)
            B.add(u[None])
    if F.q ** len(comp) > limit:
        raise ValueError("too many cohomology classes to enumerate")
    out = []
    for coeffs in itertools.product(range(F.q), repeat=len(comp)):
        u = np.zeros(Z.shape[1], DTYPE)
        for c, z in zip(coeffs, comp):
            if c:
                u = F.add(u, F.scale(c, z))
        out.append(R.cocycle_table(u))
    return out


def schur_p_rank(G: PermGroup, p: int) -> int:
    """p-rank of the Schur multiplier of a perfect group, as dim H^2(G, F_p)."""
    if G.order() == 1:
        return 0
    if not G.is_perfect():
        raise ValueError("schur_p_rank requires a perfect group")
    return h_dim(G, trivial_module(G, gf(p)), 2)
