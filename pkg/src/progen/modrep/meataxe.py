"""Splitting modules and composition factors (Norton's criterion with the Holt-Rees test)."""

from __future__ import annotations

import numpy as np

from .. import caps
from ..ffalg import linalg, poly
from .module import GModule

RETRIES = 60


class SplitFailure(RuntimeError):
    """No split or irreducibility certificate found within the retry budget."""


def _random_algebra_element(M: GModule, rng: np.random.Generator, pool: list[np.ndarray]) -> np.ndarray:
    """Grow a pool of words in the generators and return a random linear combination."""
    F = M.field
    a, b = rng.integers(0, len(pool), size=2)
    pool.append(F.matmul(pool[a], pool[b]))
    if len(pool) > 12:
        pool.pop(int(rng.integers(len(M.mats), len(pool) - 1)))
    coeffs = rng.integers(0, F.q, size=len(pool))
    X = F.zeros((M.dim, M.dim))
    for c, A in zip(coeffs, pool):
        if c:
            X = F.add(X, F.scale(int(c), A))
    return X


def _dual_spin(M: GModule, w: np.ndarray) -> np.ndarray:
    """Spin w under the transposed generators."""
    MT = GModule(M.group, M.field, [A.T.copy() for A in M.mats], check=False, dim=M.dim)
    return MT.spin(w)


def find_split(M: GModule, seed: int = 0, retries: int = RETRIES) -> np.ndarray | None:
    """A proper nonzero submodule basis, or None when M is certified irreducible."""
    F, n = M.field, M.dim
    if n <= 1:
        return None
    rng = np.random.default_rng([seed, n])
    pool = [A.copy() for A in M.mats]
    for _ in range(retries):
        X = _random_algebra_element(M, rng, pool)
        cp = poly.charpoly(F, X)
        for fac, _mult in poly.factor(F, cp, seed=int(rng.integers(1 << 30))):
            d = poly.deg(fac)
            Y = poly.eval_matrix(F, fac, X)
            N = linalg.left_nullspace(F, Y)  # v with v @ Y = 0
            if not len(N):
                continue
            S = M.spin(N[:1])
            if len(S) < n:
                return S
            if len(N) == d:
                # Norton: spin a kernel vector of the transpose in the dual
                NT = linalg.left_nullspace(F, Y.T)
                W = _dual_spin(M, NT[:1])
                if len(W) == n:
                    return None
                return linalg.nullspace(F, W)  # annihilator of W
    raise SplitFailure(f"no split or certificate after {retries} attempts (dim {n})")


def is_irreducible(M: GModule, seed: int = 0) -> bool:
    return M.dim > 0 and find_split(M, seed) is None


def composition_factors(M: GModule, seed: int = 0) -> list[GModule]:
    """Composition factors of M (with multiplicity), in a deterministic order."""
    if M.dim > caps.chop_limit(M.field.q):
        raise caps.CapExceeded("chop", M.dim, caps.chop_limit(M.field.q))
    out: list[GModule] = []
    stack = [M] if M.dim else []
    step = 0
    while stack:
        X = stack.pop()
        S = find_split(X, seed=seed * 7919 + step)
        step += 1
        if S is None:
            out.append(X)
            continue
        stack.append(X.quotient(S))
        stack.append(X.submodule(S))
    return out
