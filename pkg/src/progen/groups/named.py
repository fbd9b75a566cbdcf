"""Named permutation groups and the id-string registry."""

from __future__ import annotations

import re

import numpy as np

from .perm import PDTYPE
from .permgroup import PermGroup


def trivial() -> PermGroup:
    return PermGroup([], degree=1, name="1")


def cyclic(n: int) -> PermGroup:
    if n == 1:
        return trivial()
    return PermGroup([np.roll(np.arange(n), -1)], name=f"C{n}")


def dihedral(order: int) -> PermGroup:
    """Dihedral group of the given order (symmetries of an order/2-gon)."""
    if order % 2 or order < 2:
        raise ValueError("dihedral order must be even")
    m = order // 2
    if m == 1:
        return PermGroup([[1, 0]], name="D2")
    if m == 2:
        return klein_four(name="D4")
    rot = np.roll(np.arange(m), -1)
    ref = (-np.arange(m)) % m
    return PermGroup([rot, ref], name=f"D{order}")


def symmetric(n: int) -> PermGroup:
    if n <= 1:
        return trivial()
    if n == 2:
        return PermGroup([[1, 0]], name="S2")
    cyc = np.roll(np.arange(n), -1)
    tr = np.arange(n)
    tr[[0, 1]] = [1, 0]
    return PermGroup([cyc, tr], name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n <= 2:
        return trivial()
    if n == 3:
        return PermGroup([[1, 2, 0]], name="A3")
    gens = []
    for k in range(n - 2):
        g = np.arange(n)
        g[[k, k + 1, k + 2]] = [k + 1, k + 2, k]
        gens.append(g)
    if n == 5:
        # (0 1 2 3 4), (2 3 4)
        gens = [np.roll(np.arange(5), -1), np.array([0, 1, 3, 4, 2])]
    return PermGroup(gens, name=f"A{n}")


def klein_four(name: str = "V4") -> PermGroup:
    return PermGroup([[1, 0, 3, 2], [2, 3, 0, 1]], name=name)


def quaternion() -> PermGroup:
    from .small import dicyclic

    G = dicyclic(2)
    G.name = "Q8"
    return G


def sl25() -> PermGroup:
    """SL(2,5) acting on the 24 nonzero row vectors of F_5^2 (v -> v A)."""
    pts = [(a, b) for a in range(5) for b in range(5) if (a, b) != (0, 0)]
    index = {v: i for i, v in enumerate(pts)}

    def perm(A):
        return [index[((v[0] * A[0][0] + v[1] * A[1][0]) % 5, (v[0] * A[0][1] + v[1] * A[1][1]) % 5)] for v in pts]

    S = [[0, 4], [1, 0]]
    T = [[1, 1], [0, 1]]
    return PermGroup([perm(S), perm(T)], name="SL25")


def psl25_on_lines() -> tuple[PermGroup, list[list[int]]]:
    """Image of SL(2,5) acting on the six lines of F_5^2 (a group isomorphic to A5),
    with the line containing each of the 24 vectors."""
    pts = [(a, b) for a in range(5) for b in range(5) if (a, b) != (0, 0)]
    lines: list[frozenset] = []
    line_of = []
    for v in pts:
        L = frozenset(((v[0] * c) % 5, (v[1] * c) % 5) for c in range(1, 5))
        if L not in lines:
            lines.append(L)
        line_of.append(lines.index(L))
    G = sl25()
    gens = []
    for g in G.gens:
        img = [0] * len(lines)
        for i, v in enumerate(pts):
            img[line_of[i]] = line_of[int(g[i])]
        gens.append(img)
    return PermGroup(gens, name="PSL25"), line_of


def direct_product(*groups: PermGroup, name: str | None = None) -> PermGroup:
    """External direct product on the disjoint union of the point sets.

    Generators are those of each factor in turn, acting on its own block.
    """
    total = sum(G.degree for G in groups)
    gens = []
    off = 0
    for G in groups:
        for g in G.gens:
            img = np.arange(total, dtype=PDTYPE)
            img[off : off + G.degree] = g + off
            gens.append(img)
        off += G.degree
    if name is None:
        name = "x".join(G.name or "?" for G in groups)
    return PermGroup(gens, degree=total, name=name)


def power(G: PermGroup, m: int) -> PermGroup:
    return direct_product(*([G] * m), name=f"{G.name}^{m}")


_SIMPLE = {
    "V4": klein_four,
    "Q8": quaternion,
    "SL25": sl25,
    "1": trivial,
    "PSL25": lambda: psl25_on_lines()[0],
}


def _atom(token: str) -> PermGroup:
    token = token.strip()
    if token in _SIMPLE:
        return _SIMPLE[token]()
    m = re.fullmatch(r"([A-Za-z]+?)(\d+)", token)
    if m:
        kind, n = m.group(1), int(m.group(2))
        if kind == "C":
            return cyclic(n)
        if kind == "D":
            return dihedral(n)
        if kind == "S":
            return symmetric(n)
        if kind == "A":
            return alternating(n)
    m = re.fullmatch(r"SmallGroup\((\d+),(\d+)\)", token)
    if m:
        from .small import small_group

        return small_group(int(m.group(1)), int(m.group(2)))
    raise KeyError(f"unknown group id {token!r}")


def named_group(spec: str) -> PermGroup:
    """Resolve an id such as "A5", "S4", "SL25", "C2xC4", "A5xA5" or "A5^3"."""
    spec = spec.strip()
    parts = []
    for token in spec.split("x"):
        m = re.fullmatch(r"(.+)\^(\d+)", token)
        if m:
            parts += [_atom(m.group(1))] * int(m.group(2))
        else:
            parts.append(_atom(token))
    if len(parts) == 1:
        G = parts[0]
        G.name = spec
        return G
    return direct_product(*parts, name=spec)


def corpus_small_ids() -> list[str]:
    """Named groups of order at most 48 used as the generation-probability corpus."""
    ids = [f"C{n}" for n in range(1, 13)] + [f"D{n}" for n in (6, 8, 10, 12, 14, 16, 18, 20, 24)]
    ids += ["S3", "A4", "S4", "Q8", "V4", "C2xC2", "C2xC4", "C2xC2xC2", "C3xS3", "C2xA4", "C2xD8", "C4xC4"]
    return ids
