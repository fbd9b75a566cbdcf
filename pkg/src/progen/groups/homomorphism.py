"""Quotients, homomorphisms given on generators, Frattini covers, module kernels."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .. import caps
from .lattice import frattini_mask
from .perm import PDTYPE
from .permgroup import PermGroup


@dataclass
class Quotient:
    """G/N realised as the action of G on the right cosets of N."""

    source: PermGroup
    kernel: np.ndarray
    group: PermGroup
    coset_of: np.ndarray  # element of G -> coset number

    @cached_property
    def element_map(self) -> np.ndarray:
        """Element index of G -> element index of the quotient group."""
        G = self.source
        reps = self._reps
        perms = self.coset_of[G.table[reps, :]].T.astype(PDTYPE)
        idx = self.group.elements.lookup(perms)
        if (idx < 0).any():
            raise AssertionError("coset action is inconsistent")
        return idx

    @cached_property
    def _reps(self) -> np.ndarray:
        ncos = int(self.coset_of.max()) + 1
        reps = np.zeros(ncos, dtype=np.int64)
        seen = np.zeros(ncos, bool)
        for i, c in enumerate(self.coset_of):
            if not seen[c]:
                seen[c] = True
                reps[c] = i
        return reps

    def image(self, mask: np.ndarray) -> np.ndarray:
        out = np.zeros(self.group.order(), bool)
        out[self.element_map[np.flatnonzero(mask)]] = True
        return out

    def preimage(self, qmask: np.ndarray) -> np.ndarray:
        return qmask[self.element_map]


def quotient(G: PermGroup, N: np.ndarray) -> Quotient:
    N = np.asarray(N, bool)
    caps.check("enumeration", G.order())
    if not G.is_normal(N):
        raise ValueError("quotient by a non-normal subgroup")
    T = G.table
    n = len(T)
    members = np.flatnonzero(N)
    coset_of = np.full(n, -1, dtype=np.int64)
    c = 0
    for x in range(n):
        if coset_of[x] < 0:
            coset_of[T[members, x]] = c
            c += 1
    reps = np.array([int(np.flatnonzero(coset_of == j)[0]) for j in range(c)])
    gens = [coset_of[T[reps, g]] for g in G.gen_index]
    if c == 1:
        Q = PermGroup([np.zeros(1, dtype=PDTYPE)] * len(gens), degree=1, name="1")
    else:
        Q = PermGroup(gens, degree=c)
    if G.name:
        Q.name = f"{G.name}/N"
    return Quotient(G, N, Q, coset_of)


def quotient_by(G: PermGroup, N: np.ndarray) -> PermGroup:
    """G/N as a permutation group on the cosets of N (generators follow G's)."""
    return quotient(G, N).group


class GroupHom:
    """Homomorphism determined by the images of the source generators."""

    def __init__(self, source: PermGroup, target: PermGroup, images):
        if len(images) != source.ngens:
            raise ValueError("one image per source generator is required")
        self.source = source
        self.target = target
        self.images = [np.asarray(getattr(x, "images", x), dtype=PDTYPE) for x in images]

    @cached_property
    def element_images(self) -> np.ndarray:
        S, T = self.source, self.target
        E = S.elements
        gen_img = np.array([T.elements.index(x) for x in self.images], dtype=np.int64)
        img = np.zeros(len(E), dtype=np.int64)
        for i in range(1, len(E)):
            img[i] = T.table[img[E.parent[i]], gen_img[E.via[i]]]
        # well defined: every edge of the Cayley graph is respected
        for k, g in enumerate(S.gen_index):
            if not (img[S.table[:, g]] == T.table[img, gen_img[k]]).all():
                raise ValueError("generator images do not define a homomorphism")
        return img

    def is_surjective(self) -> bool:
        return len(np.unique(self.element_images)) == self.target.order()

    def kernel_mask(self) -> np.ndarray:
        return self.element_images == 0


def is_frattini_cover(f: GroupHom) -> bool:
    """True iff the surjection f has kernel inside the Frattini subgroup of its source."""
    if not f.is_surjective():
        raise ValueError("map is not surjective")
    ker = f.kernel_mask()
    phi = frattini_mask(f.source)
    return bool((~ker | phi).all())


def centralizer_kernel(G: PermGroup, module) -> np.ndarray:
    """Mask of {g : g acts as the identity on the module}."""
    caps.check("enumeration", G.order())
    mats = module.element_matrices()
    d = mats.shape[1]
    eye = np.eye(d, dtype=mats.dtype)
    return (mats == eye).reshape(len(mats), -1).all(axis=1)
