"""Projective indecomposables, projective covers and minimal resolutions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .. import caps
from ..ffalg import linalg, poly
from ..ffalg.field import DTYPE, GF, gf
from ..groups.permgroup import PermGroup
from .census import IrrCensus, irr_census
from .hom import hom_space
from .module import GModule, regular_module, trivial_module

RETRIES = 20


class SplittingFailure(RuntimeError):
    """Idempotent splitting or epimorphism search ran out of retries."""


class GroupAlgebra:
    """F_q[G] with basis the group elements (indexed like G.elements)."""

    def __init__(self, G: PermGroup, F: GF):
        caps.check("projective", G.order())
        self.G, self.F = G, F
        self.n = G.order()
        self.T = G.table

    def one(self) -> np.ndarray:
        e = np.zeros(self.n, DTYPE)
        e[0] = 1
        return e

    def right_matrix(self, y: np.ndarray) -> np.ndarray:
        """R with x * y = x @ R."""
        F, n = self.F, self.n
        R = np.zeros((n, n), DTYPE)
        rows = np.arange(n)
        for j in np.flatnonzero(y):
            cols = self.T[:, j]
            R[rows, cols] = F.add(R[rows, cols], y[j])
        return R

    def mul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return self.F.matmul(x, self.right_matrix(y))

    def right_ideal(self, e: np.ndarray) -> np.ndarray:
        """Echelon basis of eA = span{e * g}."""
        n = self.n
        rows = np.zeros((n, n), DTYPE)
        for j in range(n):
            rows[j, self.T[:, j]] = e
        return linalg.row_basis(self.F, rows)

    def poly_at(self, f: np.ndarray, x: np.ndarray, e: np.ndarray) -> np.ndarray:
        """f(x) in eAe, the constant term multiplying e."""
        F = self.F
        Rx = self.right_matrix(x)
        h = np.zeros(self.n, DTYPE)
        for c in poly.trim(f)[::-1]:
            h = F.matmul(h, Rx)
            if c:
                h = F.add(h, F.mul(e, c))
        return h


def _crt_idempotents(F: GF, c: np.ndarray) -> list[np.ndarray]:
    """Polynomials eps_i with eps_i = 1 mod Q_i and 0 mod Q_j, for c = prod Q_i."""
    parts: dict[tuple, np.ndarray] = {}
    for p, m in poly.factor(F, c):
        Q = np.array([1], DTYPE)
        for _ in range(m):
            Q = poly.mul(F, Q, p)
        parts[tuple(p)] = Q
    if len(parts) < 2:
        return []
    out = []
    for Q in parts.values():
        rest = poly.divmod_(F, c, Q)[0]
        inv = _poly_inverse_mod(F, poly.mod(F, rest, Q), Q)
        out.append(poly.mod(F, poly.mul(F, rest, inv), c))
    return out


def _poly_inverse_mod(F: GF, a: np.ndarray, m: np.ndarray) -> np.ndarray:
    """Inverse of a modulo m by the extended Euclidean algorithm."""
    r0, r1 = poly.trim(m), poly.trim(a)
    s0, s1 = np.zeros(0, DTYPE), np.array([1], DTYPE)
    while len(r1):
        q, r = poly.divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly.sub(F, s0, poly.mul(F, q, s1))
    if poly.deg(r0) != 0:
        raise ValueError("not invertible")
    return poly.trim(F.mul(s0, F.inv_table[r0[0]]).astype(DTYPE))


@dataclass
class PIM:
    idempotent: np.ndarray
    basis: np.ndarray  # rows in the regular module
    module: GModule
    head: int  # census index of the head


class PIMTable:
    """One projective indecomposable per irreducible of a census."""

    def __init__(self, census: IrrCensus, seed: int = 0):
        self.census = census
        self.A = GroupAlgebra(census.group, census.field)
        self.regular = regular_module(census.group, census.field)
        self.pims: dict[int, PIM] = {}
        self._build(seed)

    def _heads(self, P: GModule) -> list[tuple[int, int]]:
        out = []
        for idx, c in enumerate(self.census):
            h = len(hom_space(P, c.module))
            if h:
                out.append((idx, h // c.f))
        return out

    def _build(self, seed: int) -> None:
        A, F = self.A, self.A.F
        rng = np.random.default_rng([seed, A.n, F.q])
        queue = [A.one()]
        while queue and len(self.pims) < len(self.census):
            e = queue.pop()
            basis = A.right_ideal(e)
            P = self.regular.submodule(basis)
            heads = self._heads(P)
            if len(heads) == 1 and heads[0][1] == 1:
                idx = heads[0][0]
                self.pims.setdefault(idx, PIM(e, basis, P, idx))
                continue
            for _ in range(RETRIES):
                x = A.mul(A.mul(e, F.random(A.n, rng)), e)
                eps = _crt_idempotents(F, poly.charpoly(F, A.right_matrix(x)))
                pieces = [A.poly_at(f, x, e) for f in eps]
                pieces = [p for p in pieces if p.any()]
                if len(pieces) >= 2:
                    queue.extend(pieces)
                    break
            else:
                raise SplittingFailure("could not split a non-primitive idempotent")
        if len(self.pims) < len(self.census):
            raise SplittingFailure("some irreducible has no projective indecomposable")

    def __getitem__(self, idx: int) -> PIM:
        return self.pims[idx]


_PIM_CACHE_ATTR = "_pim_tables"


def pim_table(G: PermGroup, q: int | GF, seed: int = 0) -> PIMTable:
    F = gf(q) if isinstance(q, int) else q
    cache = G.__dict__.setdefault(_PIM_CACHE_ATTR, {})
    if F.q not in cache:
        census = irr_census(G, F, seed=seed)
        cache[F.q] = PIMTable(census, seed=seed)
    return cache[F.q]


@dataclass
class Cover:
    P: GModule
    epi: np.ndarray  # dim P x dim N, v -> v @ epi
    kernel: np.ndarray  # basis rows in P coordinates
    summands: list[int]  # census index of each indecomposable summand


def projective_cover(N: GModule, seed: int = 0, table: PIMTable | None = None) -> Cover:
    """Projective cover P(N) = sum_S P(S)^{i_N(S)} with a surjection onto N."""
    G, F = N.group, N.field
    table = table or pim_table(G, F, seed=seed)
    if N.dim == 0:
        z = np.zeros((0, 0), DTYPE)
        return Cover(N, z, z, [])
    summands: list[int] = []
    for idx, c in enumerate(table.census):
        h = len(hom_space(N, c.module))
        summands += [idx] * (h // c.f)
    homs = {idx: hom_space(table[idx].module, N) for idx in set(summands)}
    P = _direct_sum([table[idx].module for idx in summands], G, F)
    rng = np.random.default_rng([seed, N.dim, 17])
    for _ in range(RETRIES):
        blocks = []
        for idx in summands:
            H = homs[idx]
            coeffs = F.random(len(H), rng)
            X = F.zeros(H.shape[1:])
            for a, Y in zip(coeffs, H):
                if a:
                    X = F.add(X, F.scale(int(a), Y))
            blocks.append(X)
        epi = np.vstack(blocks)
        if linalg.rank(F, epi) == N.dim:
            kernel = linalg.left_nullspace(F, epi)
            if P.dim == N.dim:
                return Cover(N, F.eye(N.dim), kernel, summands)
            return Cover(P, epi, kernel, summands)
    raise SplittingFailure("no surjection from the projective cover found")


def _direct_sum(mods: list[GModule], G: PermGroup, F: GF) -> GModule:
    d = sum(M.dim for M in mods)
    mats = []
    for k in range(G.ngens):
        A = np.zeros((d, d), DTYPE)
        off = 0
        for M in mods:
            A[off : off + M.dim, off : off + M.dim] = M.mats[k]
            off += M.dim
        mats.append(A)
    return GModule(G, F, mats, check=False, dim=d)


@dataclass
class Resolution:
    """P_n -> ... -> P_0 -> N -> 0 with kernels K_i of P_i -> P_{i-1}."""

    module: GModule
    terms: list[GModule] = field(default_factory=list)
    maps: list[np.ndarray] = field(default_factory=list)  # d_0: P_0 -> N, d_i: P_i -> P_{i-1}
    kernels: list[np.ndarray] = field(default_factory=list)  # rows in P_i coordinates
    kernel_modules: list[GModule] = field(default_factory=list)
    summands: list[list[int]] = field(default_factory=list)
    minimal: bool = True
    table: PIMTable | None = None

    def __len__(self) -> int:
        return len(self.terms)

    def check_exact(self) -> bool:
        F = self.module.field
        if self.terms and linalg.rank(F, self.maps[0]) != self.module.dim:
            return False
        for i in range(1, len(self.terms)):
            d, prev = self.maps[i], self.maps[i - 1]
            if F.matmul(d, prev).any():
                return False
            if linalg.rank(F, d) != len(self.kernels[i - 1]):
                return False
        return True

    def check_minimal(self) -> bool:
        """Each K_i lies in rad P_i: every map from P_i to an irreducible kills it."""
        F = self.module.field
        for P, K in zip(self.terms, self.kernels):
            if not len(K):
                continue
            for c in self.table.census:
                for X in hom_space(P, c.module):
                    if F.matmul(K, X).any():
                        return False
        return True


def minimal_resolution(G: PermGroup, q: int | GF, length: int, N: GModule | None = None, seed: int = 0) -> Resolution:
    """Minimal projective resolution of N (default: the trivial module) up to P_length."""
    F = gf(q) if isinstance(q, int) else q
    table = pim_table(G, F, seed=seed)
    N = N or trivial_module(G, F)
    res = Resolution(N, table=table)
    cur = N
    incl = None  # rows of the current module inside the previous term
    for i in range(length + 1):
        cov = projective_cover(cur, seed=seed + i, table=table)
        P = cov.P
        epi = cov.epi if incl is None else F.matmul(cov.epi, incl)
        res.terms.append(P)
        res.maps.append(epi)
        res.summands.append(cov.summands)
        K = linalg.row_basis(F, cov.kernel) if len(cov.kernel) else np.zeros((0, P.dim), DTYPE)
        res.kernels.append(K)
        cur = P.submodule(K) if len(K) else GModule(G, F, [np.zeros((0, 0), DTYPE)] * G.ngens, check=False, dim=0)
        res.kernel_modules.append(cur)
        incl = K
        if cur.dim == 0:
            break
    return res
