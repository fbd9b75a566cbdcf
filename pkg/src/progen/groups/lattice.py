"""Subgroup lattices by cyclic extension, Möbius values, maximal subgroups, Frattini."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .. import caps
from .permgroup import PermGroup, mask_to_int

_CACHE_ATTR = "_lattice_cache"


@dataclass
class SubgroupLattice:
    """All subgroups of G (as element masks), sorted by order then encoding."""

    group: PermGroup
    masks: list[np.ndarray]
    keys: list[int]
    gens: list[list[int]]

    def __len__(self) -> int:
        return len(self.masks)

    @cached_property
    def orders(self) -> list[int]:
        return [int(m.sum()) for m in self.masks]

    @cached_property
    def index(self) -> dict[int, int]:
        return {k: i for i, k in enumerate(self.keys)}

    def find(self, mask: np.ndarray) -> int:
        return self.index[mask_to_int(mask)]

    def leq(self, i: int, j: int) -> bool:
        return (self.keys[i] & self.keys[j]) == self.keys[i]

    @cached_property
    def supergroups(self) -> list[list[int]]:
        """supergroups[i] = indices j != i with H_i < H_j."""
        n = len(self)
        out = []
        for i in range(n):
            ki = self.keys[i]
            out.append([j for j in range(i + 1, n) if j != i and (ki & self.keys[j]) == ki])
        return out

    @cached_property
    def mobius(self) -> list[int]:
        """mu(H, G) for each subgroup H."""
        n = len(self)
        mu = [0] * n
        mu[n - 1] = 1
        for i in range(n - 2, -1, -1):
            mu[i] = -sum(mu[j] for j in self.supergroups[i])
        return mu

    def check_mobius(self) -> bool:
        mu = self.mobius
        top = len(self) - 1
        return all(mu[i] + sum(mu[j] for j in self.supergroups[i]) == (1 if i == top else 0) for i in range(len(self)))

    @cached_property
    def maximal(self) -> list[int]:
        top = len(self) - 1
        return [i for i in range(top) if all(j == top for j in self.supergroups[i])]

    def subgroup(self, i: int) -> PermGroup:
        return self.group.subgroup(np.array(self.gens[i], dtype=np.int64))

    def normal_indices(self) -> list[int]:
        return [i for i, m in enumerate(self.masks) if self.group.is_normal(m)]


def subgroup_lattice(G: PermGroup) -> SubgroupLattice:
    cached = getattr(G, _CACHE_ATTR, None)
    if cached is not None:
        return cached
    n = G.order()
    caps.check("lattice", n)
    found: dict[int, tuple[np.ndarray, list[int]]] = {}
    reps: list[int] = []
    for x in range(n):
        m = G.closure(np.array([x]))
        k = mask_to_int(m)
        if k not in found:
            found[k] = (m, [x] if x else [])
            reps.append(x)
    queue = list(found)
    while queue:
        k = queue.pop()
        m, gens = found[k]
        for x in reps:
            if m[x]:
                continue
            new_gens = gens + [x]
            new = G.closure(np.array(new_gens))
            kk = mask_to_int(new)
            if kk not in found:
                found[kk] = (new, new_gens)
                queue.append(kk)
                caps.check("subgroups", len(found))
    items = sorted(found.items(), key=lambda kv: (int(kv[1][0].sum()), kv[0]))
    L = SubgroupLattice(G, [v[0] for _, v in items], [k for k, _ in items], [v[1] for _, v in items])
    setattr(G, _CACHE_ATTR, L)
    return L


def maximal_subgroups(G: PermGroup) -> list[PermGroup]:
    L = subgroup_lattice(G)
    return [L.subgroup(i) for i in L.maximal]


def maximal_masks(G: PermGroup) -> list[np.ndarray]:
    L = subgroup_lattice(G)
    return [L.masks[i] for i in L.maximal]


def frattini_mask(G: PermGroup) -> np.ndarray:
    L = subgroup_lattice(G)
    out = np.ones(G.order(), bool)
    for i in L.maximal:
        out &= L.masks[i]
    return out


def frattini(G: PermGroup) -> PermGroup:
    return G.subgroup(frattini_mask(G))
