"""Permutation groups: Schreier-Sims, element enumeration, multiplication tables."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .. import caps
from .perm import PDTYPE, Perm


def _compose(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    return q[p]


def _inv(p: np.ndarray) -> np.ndarray:
    out = np.empty_like(p)
    out[p] = np.arange(len(p), dtype=p.dtype)
    return out


def _is_id(p: np.ndarray) -> bool:
    return bool((p == np.arange(len(p))).all())


class StabChain:
    """Base and strong generating set produced by deterministic Schreier-Sims."""

    def __init__(self, gens: list[np.ndarray], n: int):
        self.n = n
        self.base: list[int] = []
        self.strong: list[np.ndarray] = [g for g in gens if not _is_id(g)]
        for g in self.strong:
            if all(g[b] == b for b in self.base):
                self.base.append(int(np.flatnonzero(g != np.arange(n))[0]))
        self._levels: dict[int, tuple] = {}
        self._run()

    def _level(self, i: int):
        if i not in self._levels:
            fixed = self.base[:i]
            gens = [s for s in self.strong if all(s[b] == b for b in fixed)]
            b = self.base[i]
            trans = {b: np.arange(self.n, dtype=PDTYPE)}
            queue = [b]
            for y in queue:
                for s in gens:
                    z = int(s[y])
                    if z not in trans:
                        trans[z] = _compose(trans[y], s)
                        queue.append(z)
            self._levels[i] = (gens, trans)
        return self._levels[i]

    def strip(self, g: np.ndarray, start: int = 0) -> tuple[np.ndarray, int]:
        for i in range(start, len(self.base)):
            _, trans = self._level(i)
            x = int(g[self.base[i]])
            if x not in trans:
                return g, i
            g = _compose(g, _inv(trans[x]))
        return g, len(self.base)

    def _run(self) -> None:
        i = len(self.base) - 1
        while i >= 0:
            gens, trans = self._level(i)
            restart = None
            for y, uy in list(trans.items()):
                for s in gens:
                    h = _compose(_compose(uy, s), _inv(trans[int(s[y])]))
                    if _is_id(h):
                        continue
                    res, j = self.strip(h, i + 1)
                    if _is_id(res):
                        continue
                    if j == len(self.base):
                        self.base.append(int(np.flatnonzero(res != np.arange(self.n))[0]))
                    self.strong.append(res)
                    self._levels = {}
                    restart = j
                    break
                if restart is not None:
                    break
            i = restart if restart is not None else i - 1

    def orbit_sizes(self) -> list[int]:
        return [len(self._level(i)[1]) for i in range(len(self.base))]

    def order(self) -> int:
        out = 1
        for s in self.orbit_sizes():
            out *= s
        return out

    def contains(self, g: np.ndarray) -> bool:
        res, j = self.strip(np.asarray(g, dtype=PDTYPE))
        return j == len(self.base) and _is_id(res)

    def random_element(self, rng: np.random.Generator) -> np.ndarray:
        g = np.arange(self.n, dtype=PDTYPE)
        for i in reversed(range(len(self.base))):
            _, trans = self._level(i)
            keys = list(trans)
            g = _compose(g, trans[keys[int(rng.integers(len(keys)))]])
        return g


@dataclass
class Elements:
    """All elements of a group, in breadth-first order from the identity.

    Element i equals element parent[i] times generator via[i]; element 0 is
    the identity.
    """

    perms: np.ndarray
    parent: np.ndarray
    via: np.ndarray
    _keys: np.ndarray = field(repr=False, default=None)
    _order: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        self._keys = _void(self.perms)
        self._order = np.argsort(self._keys, kind="stable")
        self._sorted = self._keys[self._order]

    def __len__(self) -> int:
        return len(self.perms)

    def lookup(self, P: np.ndarray) -> np.ndarray:
        """Indices of the rows of P (-1 when a row is not an element)."""
        P = np.ascontiguousarray(np.atleast_2d(P), dtype=PDTYPE)
        k = _void(P)
        pos = np.searchsorted(self._sorted, k)
        pos = np.minimum(pos, len(self._sorted) - 1)
        hit = self._sorted[pos] == k
        return np.where(hit, self._order[pos], -1)

    def index(self, p) -> int:
        arr = p.images if isinstance(p, Perm) else np.asarray(p)
        i = int(self.lookup(arr)[0])
        if i < 0:
            raise KeyError("permutation is not in the group")
        return i

    def word(self, i: int) -> list[int]:
        w = []
        while i:
            w.append(int(self.via[i]))
            i = int(self.parent[i])
        return w[::-1]


def _void(P: np.ndarray) -> np.ndarray:
    P = np.ascontiguousarray(P, dtype=PDTYPE)
    return P.view(np.dtype((np.void, P.shape[1] * P.itemsize))).ravel()


class PermGroup:
    """A permutation group given by generators; generator order is significant."""

    def __init__(self, gens, degree: int | None = None, name: str | None = None):
        arrs = [np.asarray(g.images if isinstance(g, Perm) else g, dtype=PDTYPE) for g in gens]
        if degree is None:
            if not arrs:
                raise ValueError("degree is required for a group without generators")
            degree = len(arrs[0])
        for a in arrs:
            if len(a) != degree or sorted(a.tolist()) != list(range(degree)):
                raise ValueError("generator is not a permutation of the stated degree")
        self.degree = degree
        self.gens = arrs
        self.name = name

    def __repr__(self) -> str:
        label = self.name or f"degree {self.degree}"
        return f"PermGroup({label}, {len(self.gens)} generators)"

    @property
    def generators(self) -> list[Perm]:
        return [Perm(g) for g in self.gens]

    @property
    def ngens(self) -> int:
        return len(self.gens)

    @cached_property
    def chain(self) -> StabChain:
        return StabChain(self.gens, self.degree)

    def order(self) -> int:
        return self.chain.order()

    def contains(self, p) -> bool:
        arr = p.images if isinstance(p, Perm) else np.asarray(p)
        return self.chain.contains(arr)

    def random_element(self, rng: np.random.Generator) -> np.ndarray:
        return self.chain.random_element(rng)

    # -- enumeration ----------------------------------------------------------
    @cached_property
    def elements(self) -> Elements:
        n = self.order()
        caps.check("enumeration", n)
        ident = np.arange(self.degree, dtype=PDTYPE)
        perms = [ident[None, :]]
        parent = [np.array([0])]
        via = [np.array([-1])]
        seen = {ident.tobytes(): 0}
        frontier = ident[None, :]
        count = 1
        while len(frontier) and count < n:
            base = count - len(frontier)
            new_rows, new_parent, new_via = [], [], []
            for k, g in enumerate(self.gens):
                prod = g[frontier]
                for r in range(len(prod)):
                    key = prod[r].tobytes()
                    if key not in seen:
                        seen[key] = count
                        count += 1
                        new_rows.append(prod[r])
                        new_parent.append(base + r)
                        new_via.append(k)
            frontier = np.array(new_rows, dtype=PDTYPE).reshape(-1, self.degree)
            perms.append(frontier)
            parent.append(np.array(new_parent, dtype=np.int64))
            via.append(np.array(new_via, dtype=np.int64))
        E = Elements(np.vstack(perms), np.concatenate(parent), np.concatenate(via))
        if len(E) != n:
            raise AssertionError("enumeration disagrees with stabilizer chain order")
        return E

    @property
    def size(self) -> int:
        return len(self.elements)

    @cached_property
    def gen_index(self) -> np.ndarray:
        return np.array([self.elements.index(g) for g in self.gens], dtype=np.int64)

    @cached_property
    def table(self) -> np.ndarray:
        """table[i, j] = index of element i times element j."""
        E = self.elements
        caps.check("table", len(E))
        N = len(E)
        T = np.empty((N, N), dtype=np.int32)
        P = E.perms
        for j in range(N):
            T[:, j] = E.lookup(P[j][P])
        return T

    @cached_property
    def inverse_index(self) -> np.ndarray:
        return np.argmax(self.table == 0, axis=1)

    @cached_property
    def element_orders(self) -> np.ndarray:
        T = self.table
        N = len(T)
        cur = np.arange(N)
        out = np.zeros(N, dtype=np.int64)
        k = 1
        alive = np.ones(N, bool)
        while alive.any():
            done = alive & (cur == 0)
            out[done] = k
            alive &= ~done
            cur = T[cur, np.arange(N)]
            k += 1
        return out

    @cached_property
    def class_labels(self) -> np.ndarray:
        """Conjugacy class of each element, labelled by its least member."""
        E = self.elements
        P = E.perms
        conj = [E.lookup(g[P[:, _inv(g)]]) for g in self.gens]
        label = np.arange(len(P))
        while True:
            new = label.copy()
            for c in conj:
                np.minimum.at(new, c, new)  # x ~ x^g
                new = np.minimum(new, new[c])
            if (new == label).all():
                return label
            label = new

    def conjugacy_class_count(self, p_regular: int | None = None) -> int:
        """Number of conjugacy classes, or of p-regular classes when p is given."""
        reps = np.unique(self.class_labels)
        if p_regular is not None:
            reps = reps[self.element_orders[reps] % p_regular != 0]
        return len(reps)

    def right_mult(self, idx: np.ndarray, g: int) -> np.ndarray:
        return self.table[idx, g]

    def conj(self, h, g):
        """g^-1 h g on element indices."""
        T = self.table
        return T[T[self.inverse_index[g], h], g]

    def closure(self, gen_idx, start=None) -> np.ndarray:
        """Boolean mask of the subgroup generated by the given element indices
        (together with the subgroup mask `start`, if given)."""
        T = self.table
        gen_idx = np.unique(np.asarray(gen_idx, dtype=np.int64))
        mask = np.zeros(len(T), bool)
        mask[0] = True
        if start is not None:
            mask |= start
            gen_idx = gen_idx[~start[gen_idx]] if len(gen_idx) else gen_idx
            if not len(gen_idx):
                return mask
            sgens = _mask_generators(self, start)
            gen_idx = np.concatenate([gen_idx, sgens])
        frontier = np.flatnonzero(mask)
        while frontier.size:
            new = T[np.ix_(frontier, gen_idx)].ravel() if len(gen_idx) else frontier[:0]
            new = np.unique(new[~mask[new]])
            mask[new] = True
            frontier = new
        return mask

    def normal_closure(self, idx, start=None) -> np.ndarray:
        """Smallest normal subgroup containing the given elements (and `start`)."""
        mask = self.closure(idx, start)
        gi = self.gen_index
        while True:
            members = np.flatnonzero(mask)
            conj = np.unique(np.concatenate([self.conj(members, g) for g in gi])) if len(gi) else members
            if mask[conj].all():
                return mask
            mask = self.closure(conj[~mask[conj]], mask)

    def is_normal(self, mask: np.ndarray) -> bool:
        members = np.flatnonzero(mask)
        return all(mask[self.conj(members, g)].all() for g in self.gen_index)

    def subgroup(self, mask_or_idx, name: str | None = None) -> "PermGroup":
        """PermGroup on the same points generated by elements (mask or indices)."""
        m = np.asarray(mask_or_idx)
        if m.dtype == bool:
            idx = _mask_generators(self, m)
        else:
            idx = m
        gens = [self.elements.perms[i] for i in idx]
        return PermGroup(gens, self.degree, name=name)

    def mask_of(self, H: "PermGroup") -> np.ndarray:
        """Mask of the elements of a subgroup H (given on the same points)."""
        idx = np.array([self.elements.index(g) for g in H.gens], dtype=np.int64)
        return self.closure(idx)

    def is_abelian(self) -> bool:
        return all(
            np.array_equal(_compose(a, b), _compose(b, a)) for i, a in enumerate(self.gens) for b in self.gens[i + 1 :]
        )

    def derived_mask(self) -> np.ndarray:
        T, inv, gi = self.table, self.inverse_index, self.gen_index
        comms = [T[T[inv[a], inv[b]], T[a, b]] for a in gi for b in gi]
        return self.normal_closure(np.array(comms, dtype=np.int64))

    def is_perfect(self) -> bool:
        if self.order() == 1:
            return True
        return bool(self.derived_mask().all())


def _mask_generators(G: PermGroup, mask: np.ndarray) -> np.ndarray:
    """A small generating set (element indices) of the subgroup given by mask."""
    members = np.flatnonzero(mask)
    gens: list[int] = []
    cur = np.zeros(len(mask), bool)
    cur[0] = True
    for x in members[np.argsort(-G.element_orders[members], kind="stable")]:
        if cur[x]:
            continue
        gens.append(int(x))
        cur = G.closure(np.array(gens))
        if cur.sum() == mask.sum():
            break
    return np.array(gens, dtype=np.int64)


def mask_to_int(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def int_to_mask(x: int, n: int) -> np.ndarray:
    b = np.frombuffer(x.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(b, bitorder="little")[:n].astype(bool)
