"""Exact and sampled generation probabilities for groups and normal subgroups."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .. import caps
from .lattice import subgroup_lattice
from .permgroup import PermGroup, mask_to_int


def gen_prob_exact(G: PermGroup, k: int) -> Fraction:
    """P(G, k) = sum_H mu(H, G) |H|^k / |G|^k over the subgroup lattice."""
    n = G.order()
    if n == 1:
        return Fraction(1)
    L = subgroup_lattice(G)
    total = sum(mu * order**k for mu, order in zip(L.mobius, L.orders) if mu)
    return Fraction(total, n**k)


def count_generating_tuples(G: PermGroup, k: int) -> int:
    """Number of k-tuples generating G, by exhaustive enumeration.

    Tuples are enumerated one coordinate at a time, grouped by the subgroup
    the prefix generates; every tuple is counted exactly once and no lattice
    or Möbius data is used.
    """
    n = G.order()
    caps.check("group_enum", n**k)
    if k == 0:
        return int(n == 1)
    counts: dict[int, int] = {}
    masks: dict[int, np.ndarray] = {}
    gens_of: dict[int, list[int]] = {}
    for x in range(n):
        m = G.closure(np.array([x]))
        key = mask_to_int(m)
        counts[key] = counts.get(key, 0) + 1
        masks[key], gens_of[key] = m, [x]
    for _ in range(k - 1):
        nxt: dict[int, int] = {}
        for key, c in counts.items():
            m, gens = masks[key], gens_of[key]
            inside = int(m.sum())
            nxt[key] = nxt.get(key, 0) + c * inside
            joined: dict[int, int] = {}
            for x in np.flatnonzero(~m):
                mm = G.closure(np.array(gens + [int(x)]))
                kk = mask_to_int(mm)
                joined[kk] = joined.get(kk, 0) + 1
                if kk not in masks:
                    masks[kk], gens_of[kk] = mm, gens + [int(x)]
            for kk, cnt in joined.items():
                nxt[kk] = nxt.get(kk, 0) + c * cnt
        counts = nxt
    full = mask_to_int(np.ones(n, bool))
    return counts.get(full, 0)


def gen_prob_enum(G: PermGroup, k: int) -> Fraction:
    return Fraction(count_generating_tuples(G, k), G.order() ** k)


def gen_prob_brute(G: PermGroup, k: int) -> Fraction:
    """Literal loop over all k-tuples (tiny groups only)."""
    n = G.order()
    caps.check("group_enum", n**k)
    good = sum(1 for t in itertools.product(range(n), repeat=k) if G.closure(np.array(t, dtype=np.int64)).all())
    return Fraction(good, n**k)


@dataclass(frozen=True)
class MCEstimate:
    successes: int
    trials: int

    @property
    def estimate(self) -> Fraction:
        return Fraction(self.successes, self.trials)

    def sigma(self, p: float | None = None) -> float:
        p = float(self.estimate) if p is None else float(p)
        return math.sqrt(max(p * (1 - p), 0.0) / self.trials)

    def interval(self, z: float = 4.0) -> tuple[float, float]:
        """Wilson score interval at z standard deviations."""
        n, ph = self.trials, self.successes / self.trials
        denom = 1 + z * z / n
        centre = (ph + z * z / (2 * n)) / denom
        half = z * math.sqrt(ph * (1 - ph) / n + z * z / (4 * n * n)) / denom
        return max(0.0, centre - half), min(1.0, centre + half)

    def within(self, exact, z: float = 4.0) -> bool:
        exact = Fraction(exact)
        s = self.sigma(exact)
        return abs(float(self.estimate - exact)) <= z * s + 1e-12


def rng_for(seed: int, task: int = 0) -> np.random.Generator:
    """Per-task random stream derived from a master seed."""
    return np.random.default_rng([int(seed), int(task)])


def gen_prob_mc(G: PermGroup, k: int, trials: int, seed: int, task: int = 0) -> MCEstimate:
    """Draw k uniform elements per trial and test <tuple> = G by comparing orders."""
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = rng_for(seed, task)
    n = G.order()
    if n == 1:
        return MCEstimate(trials, trials)
    use_table = n <= caps.get("table")
    hits = 0
    seen: dict[frozenset, bool] = {}  # the subgroup depends only on the set drawn
    for _ in range(trials):
        if use_table:
            key = frozenset(rng.integers(0, n, size=k).tolist())
            if key not in seen:
                seen[key] = int(G.closure(np.array(sorted(key))).sum()) == n
            hits += seen[key]
        else:
            gens = [G.random_element(rng) for _ in range(k)]
            hits += PermGroup(gens, G.degree).order() == n
    return MCEstimate(hits, trials)


# -- normal generation ---------------------------------------------------------


def _check_normal(G: PermGroup, A: np.ndarray) -> None:
    if not G.is_normal(A):
        raise ValueError("subgroup is not normal")


def count_normal_generating_tuples(G: PermGroup, A: np.ndarray, k: int) -> int:
    """Number of k-tuples in A whose normal closure in G is A."""
    A = np.asarray(A, bool)
    _check_normal(G, A)
    size = int(A.sum())
    caps.check("group_enum", size**k)
    target = mask_to_int(A)
    members = np.flatnonzero(A)
    if k == 0:
        return int(size == 1)
    counts: dict[int, int] = {}
    masks: dict[int, np.ndarray] = {}
    for x in members:
        m = G.normal_closure(np.array([x]))
        key = mask_to_int(m)
        counts[key] = counts.get(key, 0) + 1
        masks[key] = m
    for _ in range(k - 1):
        nxt: dict[int, int] = {}
        for key, c in counts.items():
            m = masks[key]
            joined: dict[int, int] = {}
            for x in members:
                if m[x]:
                    kk, mm = key, m
                else:
                    mm = G.normal_closure(np.array([x]), m)
                    kk = mask_to_int(mm)
                    masks.setdefault(kk, mm)
                joined[kk] = joined.get(kk, 0) + 1
            for kk, cnt in joined.items():
                nxt[kk] = nxt.get(kk, 0) + c * cnt
        counts = nxt
    return counts.get(target, 0)


def normal_gen_prob(G: PermGroup, A: np.ndarray, k: int) -> Fraction:
    """P^G(A, k): probability that k uniform elements of A normally generate A in G."""
    A = np.asarray(A, bool)
    size = int(A.sum())
    if size == 1:
        return Fraction(1)
    return Fraction(count_normal_generating_tuples(G, A, k), size**k)


def normal_gen_prob_brute(G: PermGroup, A: np.ndarray, k: int) -> Fraction:
    A = np.asarray(A, bool)
    _check_normal(G, A)
    members = np.flatnonzero(A)
    caps.check("group_enum", len(members) ** k)
    good = 0
    for t in itertools.product(members, repeat=k):
        good += bool((G.normal_closure(np.array(t, dtype=np.int64)) == A).all())
    return Fraction(good, len(members) ** k)


def normal_gen_prob_mc(G: PermGroup, A: np.ndarray, k: int, trials: int, seed: int, task: int = 0) -> MCEstimate:
    rng = rng_for(seed, task)
    members = np.flatnonzero(A)
    target = int(np.asarray(A).sum())
    hits = 0
    for _ in range(trials):
        t = rng.choice(members, size=k)
        hits += int(G.normal_closure(t).sum()) == target
    return MCEstimate(hits, trials)
