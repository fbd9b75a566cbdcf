"""All groups of order at most 16, as regular permutation representations."""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .named import cyclic, dihedral, direct_product
from .permgroup import PermGroup


def _regular(elements: list, mul, gens: list, name: str) -> PermGroup:
    index = {e: i for i, e in enumerate(elements)}
    perms = [[index[mul(e, g)] for e in elements] for g in gens]
    return PermGroup(perms, degree=len(elements), name=name)


def semidirect_cyclic(m: int, n: int, r: int, name: str) -> PermGroup:
    """C_m ⋊ C_n with the generator of C_n acting as a -> r*a."""
    if pow(r, n, m) != 1 % m:
        raise ValueError("r does not define an action of C_n")
    els = [(a, b) for a in range(m) for b in range(n)]

    def mul(x, y):
        return ((x[0] + pow(r, x[1], m) * y[0]) % m, (x[1] + y[1]) % n)

    return _regular(els, mul, [(1, 0), (0, 1)], name)


def dicyclic(m: int) -> PermGroup:
    """Dicyclic group of order 4m: <a, x | a^2m, x^2 = a^m, x a x^-1 = a^-1>."""
    n2 = 2 * m
    els = [(i, j) for i in range(n2) for j in range(2)]

    def mul(x, y):
        (i1, j1), (i2, j2) = x, y
        if j1 == 0:
            return ((i1 + i2) % n2, j2)
        if j2 == 0:
            return ((i1 - i2) % n2, 1)
        return ((i1 - i2 + m) % n2, 0)

    return _regular(els, mul, [(1, 0), (0, 1)], f"Dic{4 * m}")


def _c4c2_by_c2() -> PermGroup:
    # <a, b, c | a^4, b^2, c^2, [a,b], [b,c], c a c = a b>
    els = [(i, j, k) for i in range(4) for j in range(2) for k in range(2)]

    def act(i, j):
        return (i, (j + i) % 2)

    def mul(x, y):
        i2, j2 = (y[0], y[1]) if x[2] == 0 else act(y[0], y[1])
        return ((x[0] + i2) % 4, (x[1] + j2) % 2, (x[2] + y[2]) % 2)

    return _regular(els, mul, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], "(C4xC2):C2")


def _matrix_group(gens: list[np.ndarray], p: int, name: str) -> PermGroup:
    ident = tuple(np.eye(gens[0].shape[0], dtype=int).ravel())
    shape = gens[0].shape
    els = [ident]
    seen = {ident}
    for x in els:
        for g in gens:
            y = tuple(((np.array(x).reshape(shape) @ g) % p).ravel())
            if y not in seen:
                seen.add(y)
                els.append(y)

    def mul(x, y):
        return tuple(((np.array(x).reshape(shape) @ np.array(y).reshape(shape)) % p).ravel())

    return _regular(els, mul, [tuple(g.ravel() % p) for g in gens], name)


def pauli() -> PermGroup:
    """Central product C4∘D8, realised by the Pauli matrices over F_5 (i = 2)."""
    X = np.array([[0, 1], [1, 0]])
    Z = np.array([[1, 0], [0, 4]])
    iI = np.array([[2, 0], [0, 2]])
    return _matrix_group([X, Z, iI], 5, "C4oD8")


def _dp(*gs, name):
    return direct_product(*gs, name=name)


def _builders():
    C = cyclic
    return {
        1: [lambda: C(1)],
        2: [lambda: C(2)],
        3: [lambda: C(3)],
        4: [lambda: C(4), lambda: _dp(C(2), C(2), name="C2xC2")],
        5: [lambda: C(5)],
        6: [lambda: dihedral(6), lambda: C(6)],
        7: [lambda: C(7)],
        8: [
            lambda: C(8),
            lambda: _dp(C(4), C(2), name="C4xC2"),
            lambda: dihedral(8),
            lambda: dicyclic(2),
            lambda: _dp(C(2), C(2), C(2), name="C2^3"),
        ],
        9: [lambda: C(9), lambda: _dp(C(3), C(3), name="C3xC3")],
        10: [lambda: dihedral(10), lambda: C(10)],
        11: [lambda: C(11)],
        12: [
            lambda: dicyclic(3),
            lambda: C(12),
            lambda: _alt4(),
            lambda: dihedral(12),
            lambda: _dp(C(6), C(2), name="C6xC2"),
        ],
        13: [lambda: C(13)],
        14: [lambda: dihedral(14), lambda: C(14)],
        15: [lambda: C(15)],
        16: [
            lambda: C(16),
            lambda: _dp(C(4), C(4), name="C4xC4"),
            _c4c2_by_c2,
            lambda: semidirect_cyclic(4, 4, 3, "C4:C4"),
            lambda: _dp(C(8), C(2), name="C8xC2"),
            lambda: semidirect_cyclic(8, 2, 5, "M16"),
            lambda: dihedral(16),
            lambda: semidirect_cyclic(8, 2, 3, "SD16"),
            lambda: dicyclic(4),
            lambda: _dp(C(4), C(2), C(2), name="C4xC2xC2"),
            lambda: _dp(C(2), dihedral(8), name="C2xD8"),
            lambda: _dp(C(2), dicyclic(2), name="C2xQ8"),
            pauli,
            lambda: _dp(C(2), C(2), C(2), C(2), name="C2^4"),
        ],
    }


def _alt4() -> PermGroup:
    from .named import alternating

    return alternating(4)


@lru_cache(maxsize=None)
def small_group(order: int, i: int) -> PermGroup:
    """The i-th (1-based) group of the given order in this catalogue.

    The numbering follows the usual small-groups library order.
    """
    b = _builders()
    if order not in b or not 1 <= i <= len(b[order]):
        raise KeyError(f"no group {i} of order {order} in the catalogue (orders <= 16)")
    G = b[order][i - 1]()
    if G.order() != order:
        raise AssertionError(f"catalogue entry ({order},{i}) has order {G.order()}")
    return G


def all_small_groups(max_order: int = 16) -> list[tuple[tuple[int, int], PermGroup]]:
    b = _builders()
    out = []
    for order in sorted(b):
        if order > max_order:
            break
        for i in range(1, len(b[order]) + 1):
            out.append(((order, i), small_group(order, i)))
    return out


def signature(G: PermGroup) -> tuple:
    """Isomorphism invariants used to check that catalogue entries are distinct."""
    from .lattice import subgroup_lattice

    orders = G.element_orders
    by_order = tuple((int(o), int((orders == o).sum())) for o in np.unique(orders))
    T = G.table
    n = len(T)
    center = int(sum(np.array_equal(T[i], T[:, i]) for i in range(n)))
    L = subgroup_lattice(G)
    normal = sum(1 for m in L.masks if G.is_normal(m))
    return (n, by_order, center, int(G.derived_mask().sum()), len(L), normal)
