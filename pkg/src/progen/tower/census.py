"""Irreducible censuses of tower levels, counted through tensor tuples.

Over a common splitting field F_Q every absolutely irreducible module of a
direct product is an outer tensor product of factor irreducibles, so class
counts per order follow from the factor censuses by convolution, without
building the level group.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from ..cohom.ext import h_dim
from ..ffalg import linalg
from ..ffalg.field import gf
from ..groups.permgroup import PermGroup
from ..modrep.census import IrrCensus, distinct_factors, irr_census
from ..modrep.hom import endo_degree
from ..modrep.meataxe import is_irreducible
from ..modrep.module import GModule
from .spec import TowerSpec, factor_group


@dataclass
class FactorData:
    """Census of one factor over the splitting field, with h^1 of each class."""

    fid: str
    census: IrrCensus
    h1: list[int]  # dimension over F_Q

    @property
    def dims(self) -> list[int]:
        return self.census.dims()

    @property
    def trivial(self) -> int:
        return next(i for i, c in enumerate(self.census) if c.dim == 1 and not any(_nontrivial(A) for A in c.module.mats))


def _nontrivial(A: np.ndarray) -> bool:
    return bool((A != np.eye(len(A), dtype=A.dtype)).any())


_SPLITTING: dict[tuple[str, int], int] = {}
_FACTOR_DATA: dict[tuple[str, int], FactorData] = {}


def splitting_degree(fid: str, p: int) -> int:
    """Least f such that every irreducible F_p-module of the factor splits over F_{p^f}."""
    key = (fid, p)
    if key not in _SPLITTING:
        base = irr_census(factor_group(fid), p)
        _SPLITTING[key] = reduce(math.lcm, (c.f for c in base), 1)
    return _SPLITTING[key]


def factor_data(fid: str, Q: int) -> FactorData:
    key = (fid, Q)
    if key not in _FACTOR_DATA:
        G = factor_group(fid)
        census = irr_census(G, Q)
        if any(c.f != 1 for c in census):
            raise ValueError(f"F_{Q} is not a splitting field for {fid}")
        _FACTOR_DATA[key] = FactorData(fid, census, [h_dim(G, c.module, 1) for c in census])
    return _FACTOR_DATA[key]


def level_field(spec: TowerSpec, level: int, p: int) -> int:
    f = reduce(math.lcm, (splitting_degree(fid, p) for fid, _ in spec.levels[level]), 1)
    return p**f


def _max_dim(Q: int, order_cap: int | None) -> int | None:
    """Largest dimension n with Q^n <= order_cap."""
    if order_cap is None:
        return None
    if order_cap < 1:
        raise ValueError("order_cap must be positive")
    n = 0
    while Q ** (n + 1) <= order_cap:
        n += 1
    return n


@dataclass
class LevelCensus:
    spec: TowerSpec
    level: int
    p: int
    Q: int
    order_cap: int | None
    counts: dict[int, int] = field(default_factory=dict)  # order -> number of classes
    factors: dict[str, FactorData] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def by_dim(self) -> dict[int, int]:
        return {round(math.log(k, self.Q)): c for k, c in self.counts.items()}


def level_census(spec: TowerSpec, level: int, p: int, order_cap: int | None = None, Q: int | None = None) -> LevelCensus:
    """Class counts per order for the level group over its splitting field."""
    Q = Q or level_field(spec, level, p)
    cap = _max_dim(Q, order_cap)
    factors = {fid: factor_data(fid, Q) for fid, _ in spec.levels[level]}
    dist = {1: 1}  # product of dimensions -> number of tuples
    for fid in spec.positions(level):
        nxt: dict[int, int] = {}
        for d, c in dist.items():
            for e in factors[fid].dims:
                if cap is None or d * e <= cap:
                    nxt[d * e] = nxt.get(d * e, 0) + c
        dist = nxt
    counts = {Q**d: c for d, c in sorted(dist.items())}
    return LevelCensus(spec, level, p, Q, order_cap, counts, factors)


# -- cohomology of tensor classes ---------------------------------------------


def h1_product_rule(census: LevelCensus, cls: tuple[int, ...]) -> int:
    """dim_{F_Q} H^1 of the level group with coefficients in the tensor class cls.

    With perfect factors, H^1 vanishes unless exactly one position carries a
    nontrivial factor class S, in which case it equals h^1 of that factor in S.
    """
    pos = census.spec.positions(census.level)
    if len(cls) != len(pos):
        raise ValueError("class tuple has the wrong length")
    for fid in set(pos):
        if not factor_group(fid).is_perfect():
            raise ValueError(f"factor {fid} is not perfect; the product rule does not apply")
    nontrivial = [(fid, c) for fid, c in zip(pos, cls) if c != census.factors[fid].trivial]
    if len(nontrivial) != 1:
        return 0
    fid, c = nontrivial[0]
    return census.factors[fid].h1[c]


def h1_series(census: LevelCensus) -> tuple[dict[int, int], dict[int, int]]:
    """Per order: sum of |H^1| - 1 and the number of classes with H^1 != 0, by the product rule."""
    pos = census.spec.positions(census.level)
    for fid in set(pos):
        if not factor_group(fid).is_perfect():
            raise ValueError(f"factor {fid} is not perfect; the product rule does not apply")
    cap = _max_dim(census.Q, census.order_cap)
    sums = {k: 0 for k in census.counts}
    nonzero = {k: 0 for k in census.counts}
    for fid in set(pos):
        data = census.factors[fid]
        npos = pos.count(fid)
        for i, c in enumerate(data.census):
            if i == data.trivial or not data.h1[i] or (cap is not None and c.dim > cap):
                continue
            k = census.Q**c.dim
            sums[k] += npos * (census.Q ** data.h1[i] - 1)
            nonzero[k] += npos
    return sums, nonzero


# -- explicit level groups (oracles) ------------------------------------------


def tensor_module(G: PermGroup, mods: list[GModule]) -> GModule:
    """Outer tensor product over the direct product G of the modules' groups."""
    F = mods[0].field
    dims = [M.dim for M in mods]
    mats = []
    for j, M in enumerate(mods):
        before = F.eye(int(np.prod(dims[:j], dtype=np.int64)))
        after = F.eye(int(np.prod(dims[j + 1 :], dtype=np.int64)))
        for A in M.mats:
            mats.append(linalg.kron(F, linalg.kron(F, before, A), after))
    return GModule(G, F, mats, check=False, dim=int(np.prod(dims)))


def explicit_classes(census: LevelCensus) -> tuple[PermGroup, list[tuple[tuple[int, ...], GModule]]]:
    """All tensor classes as modules for the level group (small levels only)."""
    import itertools

    spec, level = census.spec, census.level
    G = spec.level_group(level)
    pos = spec.positions(level)
    cap = _max_dim(census.Q, census.order_cap)
    out = []
    for cls in itertools.product(*[range(len(census.factors[f].census)) for f in pos]):
        mods = [census.factors[f].census.classes[c].module for f, c in zip(pos, cls)]
        if cap is not None and np.prod([M.dim for M in mods]) > cap:
            continue
        out.append((cls, tensor_module(G, mods)))
    return G, out


@dataclass
class CensusCheck:
    counts_match: bool
    irreducible: bool
    absolutely_irreducible: bool
    distinct: bool
    class_count: int
    brauer_count: int

    @property
    def ok(self) -> bool:
        return self.counts_match and self.irreducible and self.absolutely_irreducible and self.distinct and self.class_count == self.brauer_count


def check_tensor_census(census: LevelCensus, seed: int = 0) -> CensusCheck:
    """Validate the tensor census against the level group itself.

    Each tensor module must be absolutely irreducible, the modules must be
    pairwise non-isomorphic, and their number must equal the number of
    p-regular conjugacy classes of the level group.
    """
    if census.order_cap is not None:
        raise ValueError("the class-count oracle needs an uncapped census")
    G, classes = explicit_classes(census)
    mods = [M for _, M in classes]
    irr = all(is_irreducible(M, seed=seed) for M in mods)
    absolute = all(endo_degree(M) == 1 for M in mods)
    distinct = len(distinct_factors(mods)) == len(mods)
    counts: dict[int, int] = {}
    for M in mods:
        counts[census.Q**M.dim] = counts.get(census.Q**M.dim, 0) + 1
    return CensusCheck(
        dict(sorted(counts.items())) == census.counts, irr, absolute, distinct, len(mods), G.conjugacy_class_count(census.p)
    )


def chop_counts(census: LevelCensus, seed: int = 0) -> dict[int, int]:
    """Class counts per order from a direct chop of the level group's regular module."""
    G = census.spec.level_group(census.level)
    direct = irr_census(G, gf(census.Q), seed=seed)
    out: dict[int, int] = {}
    for c in direct:
        out[c.order] = out.get(c.order, 0) + 1
    return dict(sorted(out.items()))


def direct_h1_series(census: LevelCensus) -> tuple[dict[int, int], dict[int, int]]:
    """The H^1 series computed on the level group itself, class by class."""
    G, classes = explicit_classes(census)
    sums = {k: 0 for k in census.counts}
    nonzero = {k: 0 for k in census.counts}
    for _, M in classes:
        h = h_dim(G, M, 1)
        k = census.Q**M.dim
        sums[k] += census.Q**h - 1
        nonzero[k] += h > 0
    return sums, nonzero
