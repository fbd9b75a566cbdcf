"""Generation of modules: d(N), P(N, k), maximal submodules and Hom growth sums."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .. import caps
from ..ffalg import linalg
from ..ffalg.field import DTYPE
from ..groups.genprob import MCEstimate, rng_for
from .census import IrrCensus, IrrClass, module_census
from .hom import hom_space, i_mult
from .module import GModule


@dataclass(frozen=True)
class HeadTerm:
    cls: IrrClass
    i: int  # multiplicity in the head of N

    @property
    def q(self) -> int:
        return self.cls.endo_size

    @property
    def order(self) -> int:
        return self.cls.order


def head_data(N: GModule, seed: int = 0) -> list[HeadTerm]:
    """(S, i_N(S)) for each irreducible S occurring in the head of N."""
    if N.dim == 0:
        return []
    out = []
    for c, _mult in module_census(N, seed=seed):
        i = i_mult(N, c.module, c.f)
        if i:
            out.append(HeadTerm(c, i))
    return out


def radical(N: GModule, seed: int = 0) -> np.ndarray:
    """Basis of rad N: the common kernel of all homomorphisms to irreducibles."""
    if N.dim == 0:
        return np.zeros((0, 0), DTYPE)
    cols = [X for c, _ in module_census(N, seed=seed) for X in hom_space(N, c.module)]
    return linalg.left_nullspace(N.field, np.hstack(cols))


def head(N: GModule, seed: int = 0) -> GModule:
    return N.quotient(radical(N, seed))


def min_generators(N: GModule, head_terms: list[HeadTerm] | None = None) -> int:
    """d(N) = max over head factors of ceil(i_N(S) / r(S)); 0 for N = 0."""
    terms = head_data(N) if head_terms is None else head_terms
    return max((-(-t.i // t.cls.r) for t in terms), default=0)


def module_gen_prob(N: GModule, k: int, head_terms: list[HeadTerm] | None = None) -> Fraction:
    """Product formula over the head: prod_S prod_{i < i_N(S)} (1 - q_S^i / |S|^k)."""
    terms = head_data(N) if head_terms is None else head_terms
    out = Fraction(1)
    for t in terms:
        size_k = t.order**k
        for i in range(t.i):
            out *= 1 - Fraction(t.q**i, size_k)
    return out


def max_submodule_census(N: GModule, head_terms: list[HeadTerm] | None = None) -> dict[int, int]:
    """{index k: number of maximal submodules of index k}."""
    terms = head_data(N) if head_terms is None else head_terms
    out: dict[int, int] = {}
    for t in terms:
        out[t.order] = out.get(t.order, 0) + (t.q**t.i - 1) // (t.q - 1)
    return dict(sorted(out.items()))


def hom_growth_sum(N: GModule, census: IrrCensus) -> dict[int, int]:
    """{k: sum over census classes S with |S| = k of (|Hom_G(N, S)| - 1)}."""
    if not census.complete:
        raise ValueError("census is not complete")
    q = census.field.q
    out: dict[int, int] = {}
    for c in census:
        h = len(hom_space(N, c.module)) if N.dim else 0
        out[c.order] = out.get(c.order, 0) + q**h - 1
    return dict(sorted(out.items()))


# -- exhaustive oracles -------------------------------------------------------


def _key(rows: np.ndarray) -> bytes:
    return len(rows).to_bytes(4, "little") + rows.tobytes()


def _spin_from(N: GModule, W: np.ndarray, v: np.ndarray) -> np.ndarray:
    return N.spin(np.vstack([W, v[None]]) if len(W) else v[None])


def _all_vectors(F, cols: list[int], n: int) -> np.ndarray:
    """All vectors of F^n supported on the given columns."""
    q, m = F.q, len(cols)
    codes = np.arange(q**m, dtype=np.int64)
    out = np.zeros((q**m, n), DTYPE)
    for j, c in enumerate(cols):
        out[:, c] = (codes // q**j) % q
    return out


def count_generating_tuples(N: GModule, k: int) -> int:
    """Number of k-tuples of vectors generating N, grouped by the submodule the prefix spans."""
    F, n = N.field, N.dim
    caps.check("module_enum", N.size**k)
    if n == 0:
        return 1
    states: dict[bytes, tuple[np.ndarray, int]] = {_key(np.zeros((0, n), DTYPE)): (np.zeros((0, n), DTYPE), 1)}
    for _ in range(k):
        nxt: dict[bytes, tuple[np.ndarray, int]] = {}
        for W, c in states.values():
            pivots = [int(np.flatnonzero(r)[0]) for r in W]
            free = [j for j in range(n) if j not in set(pivots)]
            weight = c * F.q ** len(W)  # each coset of W has q^rank members
            for v in _all_vectors(F, free, n):
                S = _spin_from(N, W, v) if v.any() else W
                key = _key(S)
                old = nxt.get(key)
                nxt[key] = (S, weight + (old[1] if old else 0))
        states = nxt
    full = states.get(_key(F.eye(n)))
    return full[1] if full else 0


def module_gen_prob_enum(N: GModule, k: int) -> Fraction:
    return Fraction(count_generating_tuples(N, k), N.size**k)


def min_generators_brute(N: GModule) -> int:
    """Least k such that some k-tuple generates N, by search over spanned submodules."""
    F, n = N.field, N.dim
    if n == 0:
        return 0
    reach = {_key(np.zeros((0, n), DTYPE)): np.zeros((0, n), DTYPE)}
    for k in range(1, n + 1):
        nxt = {}
        for W in reach.values():
            pivots = {int(np.flatnonzero(r)[0]) for r in W}
            free = [j for j in range(n) if j not in pivots]
            for v in _all_vectors(F, free, n)[1:]:
                S = _spin_from(N, W, v)
                if len(S) == n:
                    return k
                nxt.setdefault(_key(S), S)
        reach = nxt
    raise AssertionError("unreachable: n vectors always generate")


def max_submodules_enum(N: GModule) -> dict[int, int]:
    """Count maximal submodules by index, via minimal submodules of the transposed action.

    U is maximal in N iff its annihilator is a minimal submodule for the
    transposed matrices, and |N/U| equals the size of that annihilator.
    """
    F, n = N.field, N.dim
    caps.check("module_enum", N.size)
    if n == 0:
        return {}
    NT = GModule(N.group, F, [A.T.copy() for A in N.mats], check=False, dim=n)
    vecs = _all_vectors(F, list(range(n)), n)[1:]
    key_of: dict[bytes, bytes] = {}
    subs: dict[bytes, np.ndarray] = {}
    for v in vecs:
        S = NT.spin(v[None])
        kk = _key(S)
        key_of[v.tobytes()] = kk
        subs.setdefault(kk, S)
    out: dict[int, int] = {}
    for kk, S in subs.items():
        members = F.matmul(_all_vectors(F, list(range(len(S))), len(S))[1:], S)
        if all(key_of[m.tobytes()] == kk for m in members):
            size = F.q ** len(S)
            out[size] = out.get(size, 0) + 1
    return dict(sorted(out.items()))


def module_gen_prob_brute(N: GModule, k: int) -> Fraction:
    """Literal spin test on every k-tuple (tiny modules only)."""
    F, n = N.field, N.dim
    caps.check("module_enum", N.size**k)
    vecs = _all_vectors(F, list(range(n)), n)
    good = sum(1 for t in itertools.product(range(len(vecs)), repeat=k) if len(N.spin(vecs[list(t)])) == n)
    return Fraction(good, N.size**k)


def module_gen_prob_mc(N: GModule, k: int, trials: int, seed: int, task: int = 0) -> MCEstimate:
    if trials < 1:
        raise ValueError("trials must be positive")
    rng = rng_for(seed, task)
    F, n = N.field, N.dim
    if n == 0:
        return MCEstimate(trials, trials)
    hits = 0
    seen: dict[bytes, bool] = {}
    for _ in range(trials):
        V = F.random((k, n), rng)
        key = V.tobytes()
        if key not in seen:
            seen[key] = len(N.spin(V)) == n
        hits += seen[key]
    return MCEstimate(hits, trials)


def restriction_index(M: GModule, H, seeds: np.ndarray) -> int:
    """Index |M : S| of the H-submodule S spun from the given G-generators of M."""
    S = M.restrict(H).spin(seeds)
    return M.field.q ** (M.dim - len(S))


def left_coset_reps(G, mask: np.ndarray) -> np.ndarray:
    """Element indices g_j with G the disjoint union of the cosets g_j H."""
    T = G.table
    members = np.flatnonzero(mask)
    covered = np.zeros(len(T), bool)
    reps = []
    for g in range(len(T)):
        if not covered[g]:
            reps.append(g)
            covered[T[g, members]] = True
    return np.array(reps, dtype=np.int64)


def restriction_translates(M: GModule, H, mask: np.ndarray, seeds: np.ndarray) -> np.ndarray:
    """H-submodule spun from the translates x g_j of G-generators x over left coset reps g_j."""
    F = M.field
    A = M.element_matrices()[left_coset_reps(M.group, mask)]
    seeds = F.asarray(np.asarray(seeds).reshape(-1, M.dim))
    translates = np.vstack([F.matmul(seeds, X) for X in A])
    return M.restrict(H).spin(translates)
