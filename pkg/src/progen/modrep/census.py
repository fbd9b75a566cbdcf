"""Irreducible-module censuses of group algebras."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from ..ffalg.field import GF, gf
from ..groups.permgroup import PermGroup
from .hom import endo_degree, is_iso
from .meataxe import composition_factors
from .module import GModule, regular_module


def fingerprint(M: GModule, words: int = 64) -> tuple:
    """Traces of the first elements in the group's enumeration order."""
    F = M.field
    k = min(words, M.group.order())
    mats = M.element_matrices()[:k]
    tr = F.sum(np.diagonal(mats, axis1=1, axis2=2), axis=1) if M.dim else np.zeros(k, int)
    return tuple(int(t) for t in tr)


@dataclass
class IrrClass:
    module: GModule
    endo_size: int
    label: str = ""
    f: int = 1  # endo_size = q^f

    @property
    def dim(self) -> int:
        return self.module.dim

    @property
    def r(self) -> int:
        """Dimension over End_G(M)."""
        return self.dim // self.f

    @property
    def order(self) -> int:
        """|M| = q^dim."""
        return self.module.field.q**self.dim

    def as_dict(self) -> dict:
        return {"label": self.label, "dim": self.dim, "q_M": self.endo_size, "r": self.r}


def make_class(M: GModule) -> IrrClass:
    f = endo_degree(M)
    c = IrrClass(M, M.field.q**f, f=f)
    key = repr((M.field.q, M.dim, c.endo_size, fingerprint(M))).encode()
    c.label = f"d{M.dim}q{c.endo_size}-" + hashlib.sha256(key).hexdigest()[:10]
    return c


@dataclass
class IrrCensus:
    group: PermGroup
    field: GF
    classes: list[IrrClass] = field(default_factory=list)
    complete: bool = False

    @property
    def prime(self) -> int:
        return self.field.p

    def __len__(self) -> int:
        return len(self.classes)

    def __iter__(self):
        return iter(self.classes)

    def find(self, M: GModule) -> int:
        """Index of the class isomorphic to the irreducible M, or -1."""
        fp = fingerprint(M)
        for i, c in enumerate(self.classes):
            if c.dim == M.dim and fingerprint(c.module) == fp and is_iso(c.module, M):
                return i
        return -1

    def dims(self) -> list[int]:
        return [c.dim for c in self.classes]

    def by_order(self) -> dict[int, list[IrrClass]]:
        out: dict[int, list[IrrClass]] = {}
        for c in self.classes:
            out.setdefault(c.order, []).append(c)
        return dict(sorted(out.items()))

    def to_json(self) -> list[dict]:
        return [c.as_dict() for c in self.classes]


def distinct_factors(factors: list[GModule]) -> list[IrrClass]:
    """Deduplicate irreducibles up to isomorphism, sorted by (dim, label)."""
    classes: list[IrrClass] = []
    buckets: dict[tuple, list[IrrClass]] = {}
    for M in factors:
        key = (M.dim, fingerprint(M))
        bucket = buckets.setdefault(key, [])
        if any(is_iso(c.module, M) for c in bucket):
            continue
        c = make_class(M)
        bucket.append(c)
        classes.append(c)
    classes.sort(key=lambda c: (c.dim, c.endo_size, c.label))
    # distinct non-isomorphic classes could share a fingerprint: keep labels unique
    seen: dict[str, int] = {}
    for c in classes:
        n = seen.get(c.label, 0)
        seen[c.label] = n + 1
        if n:
            c.label = f"{c.label}.{n}"
    return classes


def irr_census(G: PermGroup, q: int | GF, seed: int = 0) -> IrrCensus:
    """All irreducible F_q[G]-modules, from a full chop of the regular module."""
    F = gf(q) if isinstance(q, int) else q
    R = regular_module(G, F)
    classes = distinct_factors(composition_factors(R, seed=seed))
    return IrrCensus(G, F, classes, complete=True)


def module_census(M: GModule, seed: int = 0) -> list[tuple[IrrClass, int]]:
    """Composition factors of M as (class, multiplicity) pairs."""
    factors = composition_factors(M, seed=seed)
    classes = distinct_factors(factors)
    counts = [0] * len(classes)
    for X in factors:
        for i, c in enumerate(classes):
            if c.dim == X.dim and is_iso(c.module, X):
                counts[i] += 1
                break
    return list(zip(classes, counts))
