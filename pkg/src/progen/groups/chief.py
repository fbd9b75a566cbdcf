"""Chief series with the induced modules on abelian factors, and delta_G(M)."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .lattice import maximal_masks
from .permgroup import PermGroup


@dataclass
class ChiefFactor:
    upper: np.ndarray  # mask of H
    lower: np.ndarray  # mask of K, with H/K minimal normal in G/K
    abelian: bool
    prime: int | None = None
    module: object | None = None  # GModule over F_p when abelian
    non_frattini: bool | None = None

    @property
    def order(self) -> int:
        return int(self.upper.sum()) // int(self.lower.sum())


@dataclass
class ChiefSeries:
    group: PermGroup
    series: list[np.ndarray]  # descending: G = H_0 > ... > H_l = 1
    factors: list[ChiefFactor] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.factors)

    def abelian_factors(self) -> list[ChiefFactor]:
        return [f for f in self.factors if f.abelian]


def _minimal_normal_over(G: PermGroup, K: np.ndarray) -> np.ndarray:
    """Smallest normal subgroup properly containing K; ties go to the lowest new element."""
    best = None
    for x in np.flatnonzero(~K):
        N = G.normal_closure(np.array([x]), K)
        if best is None or N.sum() < best.sum():
            best = N
    return best


def _is_abelian_mask(G: PermGroup, H: np.ndarray, K: np.ndarray) -> bool:
    """True iff H/K is abelian (all commutators of H land in K)."""
    T, inv = G.table, G.inverse_index
    h = np.flatnonzero(H)
    a, b = np.meshgrid(h, h, indexing="ij")
    comm = T[T[inv[a], inv[b]], T[a, b]]
    return bool(K[comm].all())


def _factor_module(G: PermGroup, H: np.ndarray, K: np.ndarray, p: int):
    """The conjugation module H/K over F_p, with basis the images of chosen h_1..h_d."""
    from ..ffalg.field import gf
    from ..modrep.module import GModule

    T = G.table
    basis: list[int] = []
    span = K.copy()
    while not span[H].all():
        x = int(np.flatnonzero(H & ~span)[0])
        basis.append(x)
        span = G.closure(np.array([x]), span)
    d = len(basis)
    # every element of H is h_1^a_1 ... h_d^a_d k uniquely
    coord = np.full(len(T), -1, dtype=np.int64)
    k_members = np.flatnonzero(K)
    for code in range(p**d):
        a = [(code // p**i) % p for i in range(d)]
        e = 0
        for i, ai in enumerate(a):
            for _ in range(ai):
                e = T[e, basis[i]]
        coord[T[e, k_members]] = code
    if (coord[H] < 0).any():
        raise AssertionError("chief factor is not elementary abelian")

    def vec(x: int) -> list[int]:
        c = int(coord[x])
        return [(c // p**i) % p for i in range(d)]

    mats = []
    for g in G.gen_index:
        mats.append([vec(int(G.conj(np.array([h]), g)[0])) for h in basis])
    return GModule(G, gf(p), np.array(mats, dtype=np.int64).reshape(len(mats), d, d), check=True, dim=d)


def chief_series(G: PermGroup, modules: bool = True) -> ChiefSeries:
    """Chief series built bottom-up by adjoining minimal normal subgroups of G/K."""
    n = G.order()
    K = np.zeros(n, bool)
    K[0] = True
    ascending = [K]
    while not K.all():
        K = _minimal_normal_over(G, K)
        ascending.append(K)
    series = ascending[::-1]
    maxes = maximal_masks(G) if modules else []
    factors = []
    for H, K in zip(series[:-1], series[1:]):
        ab = _is_abelian_mask(G, H, K)
        f = ChiefFactor(H, K, ab)
        if ab:
            order = f.order
            p = min(q for q in range(2, order + 1) if order % q == 0)
            f.prime = p
            if modules:
                f.module = _factor_module(G, H, K, p)
                # H/K lies in Phi(G/K) iff H lies in every maximal subgroup containing K
                above = [M for M in maxes if M[K].all()]
                f.non_frattini = not all(M[H].all() for M in above)
        factors.append(f)
    return ChiefSeries(G, series, factors)


def delta(G: PermGroup, M, series: ChiefSeries | None = None) -> int:
    """Number of non-Frattini abelian chief factors G-isomorphic to the F_p-module M."""
    from ..modrep.hom import is_iso

    if M.dim == 0:
        return 0
    if not M.field.is_prime:
        M = M.restrict_scalars()
    cs = series or chief_series(G)
    count = 0
    for f in cs.abelian_factors():
        if f.prime != M.field.p or not f.non_frattini:
            continue
        if f.module.dim == M.dim and is_iso(f.module, M.with_group(G)):
            count += 1
    return count
