"""Hom spaces between modules, endomorphism fields, head multiplicities."""

from __future__ import annotations

import numpy as np

from ..ffalg import linalg
from ..ffalg.field import DTYPE
from .module import GModule


def spin_basis(N: GModule) -> tuple[np.ndarray, list[tuple[int, int, int]]]:
    """A basis of N obtained by spinning unit vectors, with its construction tree.

    Returns (B, tree) where B[j] is the j-th basis row and tree[j] is
    (-1, seed, -1) for a seed vector or (parent, generator, -1) for
    B[j] = B[parent] @ A_generator.
    """
    F, n = N.field, N.dim
    E = linalg.Echelon(F, n)
    rows: list[np.ndarray] = []
    tree: list[tuple[int, int, int]] = []
    nseeds = 0
    for c in range(n):
        if E.rank == n:
            break
        e = np.zeros(n, DTYPE)
        e[c] = 1
        if E.contains(e[None])[0]:
            continue
        rows.append(e)
        tree.append((-1, nseeds, -1))
        nseeds += 1
        E.add(e[None])
        j = len(rows) - 1
        while j < len(rows):
            for k, A in enumerate(N.mats):
                w = F.matmul(rows[j][None], A)
                if not E.contains(w)[0]:
                    E.add(w)
                    rows.append(w[0])
                    tree.append((j, k, -1))
            j += 1
    B = np.array(rows, dtype=DTYPE).reshape(len(rows), n)
    return B, tree


def hom_space(N: GModule, M: GModule) -> np.ndarray:
    """Basis of Hom_G(N, M) as an array (h, dim N, dim M); phi(v) = v @ X."""
    F = N.field
    if M.field != F:
        raise ValueError("modules over different fields")
    n, m = N.dim, M.dim
    if n == 0 or m == 0:
        return np.zeros((0, n, m), DTYPE)
    B, tree = spin_basis(N)
    seeds = sum(1 for t in tree if t[0] < 0)
    U = seeds * m
    # L[j] (U x m): image of B[j] as a linear function of the seed images
    L = np.zeros((n, U, m), DTYPE)
    for j, (par, k, _) in enumerate(tree):
        if par < 0:
            L[j, k * m : (k + 1) * m, :] = F.eye(m)
        else:
            L[j] = F.matmul(L[par], M.mats[k])
    Binv = linalg.inverse(F, B)
    Lflat = L.reshape(n, U * m)
    blocks = []
    for A, C in zip(N.mats, M.mats):
        coeff = F.matmul(F.matmul(B, A), Binv)  # action in the spin basis
        lhs = F.matmul(coeff, Lflat).reshape(n, U, m)
        rhs = F.matmul(L.reshape(n * U, m), C).reshape(n, U, m)
        blocks.append(F.sub(lhs, rhs).transpose(1, 0, 2).reshape(U, n * m))
    S = np.hstack(blocks)
    sol = linalg.left_nullspace(F, S)
    # X = B^-1 @ images, where images[j] = u @ L[j]
    imgs = F.matmul(sol, L.transpose(1, 0, 2).reshape(U, n * m)).reshape(len(sol), n, m)
    return np.array([F.matmul(Binv, Y) for Y in imgs], dtype=DTYPE).reshape(len(sol), n, m)


def hom_dim(N: GModule, M: GModule) -> int:
    return len(hom_space(N, M))


def endo_field(M: GModule) -> int:
    """|End_G(M)| for irreducible M, after checking the commutant is a field."""
    F = M.field
    E = hom_space(M, M)
    f = len(E)
    for X in E:
        if linalg.rank(F, X) != M.dim:
            raise ValueError("commutant is not a division algebra; module is reducible")
    if f > 1:
        # commutative and closed under products: a field, since it is a finite division ring
        flat = E.reshape(f, -1)
        for a in range(f):
            for b in range(a + 1, f):
                if not np.array_equal(F.matmul(E[a], E[b]), F.matmul(E[b], E[a])):
                    raise ValueError("commutant is not commutative; module is reducible")
        sums = linalg.Echelon(F, flat.shape[1])
        sums.add(flat)
        prods = np.array([F.matmul(E[a], E[b]).ravel() for a in range(f) for b in range(f)])
        if not sums.contains(prods).all():
            raise AssertionError("commutant basis is not closed under products")
    return F.q**f


def endo_degree(M: GModule) -> int:
    """f with |End_G(M)| = q^f."""
    q_m = endo_field(M)
    f = 0
    while M.field.q**f < q_m:
        f += 1
    return f


def is_iso(M: GModule, N: GModule) -> bool:
    """Isomorphism test for irreducible modules: equal dimension and a nonzero intertwiner."""
    if M.field != N.field or M.dim != N.dim:
        return False
    if M.dim == 0:
        return True
    if not _traces_agree(M, N):
        return False
    return hom_dim(M, N) > 0


def _traces_agree(M: GModule, N: GModule, count: int = 64) -> bool:
    G = M.group
    if G.order() > 10_000:
        return True
    k = min(count, G.order())
    a = M.element_matrices()[:k]
    b = N.element_matrices()[:k]
    F = M.field
    ta = F.sum(np.diagonal(a, axis1=1, axis2=2), axis=1)
    tb = F.sum(np.diagonal(b, axis1=1, axis2=2), axis=1)
    return bool(np.array_equal(ta, tb))


def i_mult(N: GModule, M: GModule, f: int | None = None) -> int:
    """Multiplicity of the irreducible M in the head of N: dim_End(M) Hom_G(N, M)."""
    if f is None:
        f = endo_degree(M)
    h = hom_dim(N, M)
    if h % f:
        raise AssertionError("Hom dimension is not a multiple of the endomorphism degree")
    return h // f
