"""Modules over F_q[G] given by one matrix per group generator.

Vectors are rows and G acts on the right: v . g = v @ A_g, so the map
g -> A_g is a homomorphism for the left-to-right permutation product.
"""

from __future__ import annotations

from functools import cached_property

import numpy as np

from .. import caps
from ..ffalg import linalg
from ..ffalg.field import DTYPE, GF, embedding, gf
from ..groups.permgroup import PermGroup


class GModule:
    def __init__(self, group: PermGroup, field: GF, mats, check: bool = True, name: str | None = None, dim: int | None = None):
        mats = [field.asarray(np.asarray(m)) for m in mats]
        if len(mats) != group.ngens:
            raise ValueError(f"expected {group.ngens} matrices, got {len(mats)}")
        dims = {m.shape for m in mats}
        if len(dims) > 1 or any(s[0] != s[1] for s in dims):
            raise ValueError("action matrices must be square of equal size")
        self.group = group
        self.field = field
        self.dim = mats[0].shape[0] if mats else int(dim or 0)
        if dim is not None and self.dim != dim:
            raise ValueError("dim does not match the action matrices")
        self.mats = [np.ascontiguousarray(m, dtype=DTYPE) for m in mats]
        for m in self.mats:
            m.setflags(write=False)
        self.name = name
        if check:
            self.check()

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"GModule{label}(G={self.group.name}, q={self.field.q}, dim={self.dim})"

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        return self.field.q**self.dim

    # -- validation -----------------------------------------------------------
    def check(self) -> None:
        F = self.field
        for A in self.mats:
            if linalg.rank(F, A) != self.dim:
                raise ValueError("action matrix is not invertible")
        if self.group.order() <= caps.get("table") and self.dim <= 64:
            M = self.element_matrices()
            T = self.group.table
            for k, g in enumerate(self.group.gen_index):
                if not (M[T[:, g]] == F.matmul(M, self.mats[k])).all():
                    raise ValueError("matrices do not satisfy the group relations")
        else:
            self._check_random_words()

    def _check_random_words(self, count: int = 50, length: int = 24) -> None:
        rng = np.random.default_rng(0)
        G, F = self.group, self.field
        for _ in range(count):
            # a word of permutation order o gives the relation w^o = 1
            w = rng.integers(0, G.ngens, size=length)
            p = np.arange(G.degree)
            A = F.eye(self.dim)
            for k in w:
                p = G.gens[k][p]
                A = F.matmul(A, self.mats[k])
            order = 1
            pp = p.copy()
            while not (pp == np.arange(G.degree)).all():
                pp = p[pp]
                order += 1
            if linalg.matpow(F, A, order).tolist() != F.eye(self.dim).tolist():
                raise ValueError("matrices do not satisfy the group relations")

    # -- element matrices ---------------------------------------------------------
    def element_matrices(self) -> np.ndarray:
        """Matrices of all group elements, indexed like group.elements."""
        return self._element_matrices

    @cached_property
    def _element_matrices(self) -> np.ndarray:
        G, F = self.group, self.field
        E = G.elements
        N, d = len(E), self.dim
        M = np.zeros((N, d, d), dtype=DTYPE)
        M[0] = F.eye(d)
        depth = np.zeros(N, dtype=np.int64)
        for i in range(1, N):
            depth[i] = depth[E.parent[i]] + 1
        for lev in range(1, int(depth.max()) + 1 if N > 1 else 1):
            layer = depth == lev
            for k in range(G.ngens):
                idx = np.flatnonzero(layer & (E.via == k))
                if idx.size:
                    M[idx] = F.matmul(M[E.parent[idx]], self.mats[k])
        M.setflags(write=False)
        return M

    @cached_property
    def inverse_mats(self) -> list[np.ndarray]:
        return [linalg.inverse(self.field, A) for A in self.mats]

    def word_matrix(self, word) -> np.ndarray:
        F = self.field
        A = F.eye(self.dim)
        for k in word:
            A = F.matmul(A, self.mats[k])
        return A

    # -- submodules --------------------------------------------------------------
    def spin(self, seeds) -> np.ndarray:
        """Echelonized basis of the least submodule containing the seed rows."""
        F = self.field
        seeds = F.asarray(np.asarray(seeds, dtype=np.int64).reshape(-1, self.dim))
        E = linalg.Echelon(F, self.dim)
        frontier = seeds
        while len(frontier) and E.rank < self.dim:
            W = E.reduce(frontier)
            W = W[W.any(axis=1)]
            if not len(W):
                break
            R = linalg.row_basis(F, W)
            E.add(R)
            if not self.mats:
                break
            frontier = np.vstack([F.matmul(R, A) for A in self.mats])
        return E.basis()

    def is_submodule(self, basis) -> bool:
        basis = np.asarray(basis, dtype=DTYPE).reshape(-1, self.dim)
        if not len(basis):
            return True
        E = linalg.Echelon(self.field, self.dim)
        E.add(basis)
        return all(E.contains(self.field.matmul(basis, A)).all() for A in self.mats)

    def submodule(self, basis) -> "GModule":
        """Action on the span of the basis rows (must be invariant)."""
        F = self.field
        B = linalg.row_basis(F, basis)
        mats = []
        for A in self.mats:
            X = linalg.solve_left(F, B, F.matmul(B, A))
            if X is None:
                raise ValueError("span is not a submodule")
            mats.append(X)
        if not len(B):
            mats = [np.zeros((0, 0), DTYPE) for _ in self.mats]
        return GModule(self.group, F, mats, check=False, dim=len(B))

    def quotient(self, basis) -> "GModule":
        """Action on M / span(basis), using complement unit vectors as basis."""
        F = self.field
        E = linalg.Echelon(F, self.dim)
        E.add(np.asarray(basis, dtype=DTYPE).reshape(-1, self.dim))
        free = [c for c in range(self.dim) if c not in set(E.pivots)]
        mats = []
        for A in self.mats:
            rows = A[free]  # images of complement basis vectors
            red = E.reduce(rows)
            mats.append(red[:, free])
        if not free:
            mats = [np.zeros((0, 0), DTYPE) for _ in self.mats]
        return GModule(self.group, F, mats, check=False, dim=len(free))

    def quotient_map(self, basis) -> tuple[np.ndarray, "GModule"]:
        """(projection matrix dim x dim_Q, quotient module)."""
        F = self.field
        E = linalg.Echelon(F, self.dim)
        E.add(np.asarray(basis, dtype=DTYPE).reshape(-1, self.dim))
        free = [c for c in range(self.dim) if c not in set(E.pivots)]
        P = E.reduce(F.eye(self.dim))[:, free]
        return P, self.quotient(basis)

    # -- constructions -------------------------------------------------------------
    def dual(self) -> "GModule":
        return GModule(self.group, self.field, [A.T.copy() for A in self.inverse_mats], check=False, dim=self.dim)

    def direct_sum(self, other: "GModule") -> "GModule":
        _same(self, other)
        F = self.field
        mats = []
        for A, B in zip(self.mats, other.mats):
            C = np.zeros((self.dim + other.dim,) * 2, DTYPE)
            C[: self.dim, : self.dim] = A
            C[self.dim :, self.dim :] = B
            mats.append(C)
        return GModule(self.group, F, mats, check=False, dim=self.dim + other.dim)

    def __add__(self, other: "GModule") -> "GModule":
        return self.direct_sum(other)

    def power(self, m: int) -> "GModule":
        out = zero_module(self.group, self.field)
        for _ in range(m):
            out = out.direct_sum(self)
        return out

    def tensor(self, other: "GModule") -> "GModule":
        _same(self, other)
        F = self.field
        return GModule(self.group, F, [linalg.kron(F, A, B) for A, B in zip(self.mats, other.mats)], check=False, dim=self.dim * other.dim)

    def restrict(self, H: PermGroup) -> "GModule":
        """Restriction to a subgroup given on the same points."""
        E = self.group.elements
        mats = []
        for h in H.gens:
            try:
                i = E.index(h)
            except KeyError:
                raise ValueError("subgroup generator is not an element of the group") from None
            mats.append(self.element_matrices()[i].copy())
        return GModule(H, self.field, mats, check=False, dim=self.dim)

    def restrict_scalars(self) -> "GModule":
        """The same module viewed over the prime field (dimension times e)."""
        F = self.field
        if F.is_prime:
            return self
        P = gf(F.p)
        e = F.e
        alpha_pows = [F.p**s for s in range(e)]  # encodings of 1, α, ..., α^(e-1)
        mult = np.zeros((F.q, e, e), DTYPE)
        for a in range(F.q):
            for s in range(e):
                mult[a, s] = F.digits[F.mul_table[alpha_pows[s], a]]
        mats = []
        for A in self.mats:
            B = mult[A]  # d x d x e x e
            mats.append(B.transpose(0, 2, 1, 3).reshape(self.dim * e, self.dim * e))
        return GModule(self.group, P, mats, check=False, dim=self.dim * e)

    def extend_scalars(self, big: GF) -> "GModule":
        emb = embedding(self.field, big)
        return GModule(self.group, big, [emb[A] for A in self.mats], check=False, dim=self.dim)

    def with_group(self, group: PermGroup) -> "GModule":
        return GModule(group, self.field, self.mats, check=False, dim=self.dim)


def _same(a: GModule, b: GModule) -> None:
    if a.field != b.field:
        raise ValueError("modules over different fields")
    if a.group is not b.group and a.group.ngens != b.group.ngens:
        raise ValueError("modules over different groups")


def zero_module(G: PermGroup, F: GF) -> GModule:
    return GModule(G, F, [np.zeros((0, 0), DTYPE) for _ in G.gens], check=False)


def trivial_module(G: PermGroup, F: GF | int, dim: int = 1) -> GModule:
    F = gf(F) if isinstance(F, int) else F
    return GModule(G, F, [F.eye(dim) for _ in G.gens], check=False, name="trivial", dim=dim)


def regular_module(G: PermGroup, F: GF | int) -> GModule:
    """F[G] with basis the group elements (element indices) and right multiplication."""
    F = gf(F) if isinstance(F, int) else F
    n = G.order()
    T = G.table
    mats = []
    for g in G.gen_index:
        A = np.zeros((n, n), DTYPE)
        A[np.arange(n), T[:, g]] = 1
        mats.append(A)
    return GModule(G, F, mats, check=False, name="regular", dim=n)


def permutation_module(G: PermGroup, F: GF | int) -> GModule:
    F = gf(F) if isinstance(F, int) else F
    mats = []
    for g in G.gens:
        A = np.zeros((G.degree, G.degree), DTYPE)
        A[np.arange(G.degree), g] = 1
        mats.append(A)
    return GModule(G, F, mats, check=False, name="permutation", dim=G.degree)


def tensor_outer(M: GModule, N: GModule, product: PermGroup | None = None) -> GModule:
    """M ⊗ N over G x H: G generators act as A ⊗ I, H generators as I ⊗ B."""
    if M.field != N.field:
        raise ValueError("modules over different fields")
    from ..groups.named import direct_product

    F = M.field
    GH = product or direct_product(M.group, N.group)
    Im, In = F.eye(M.dim), F.eye(N.dim)
    mats = [linalg.kron(F, A, In) for A in M.mats] + [linalg.kron(F, Im, B) for B in N.mats]
    return GModule(GH, F, mats, check=False, dim=M.dim * N.dim)


def augmentation_module(G: PermGroup, F: GF | int) -> GModule:
    """Kernel of the augmentation F[G] -> F as a submodule of the regular module."""
    F = gf(F) if isinstance(F, int) else F
    caps.check("projective", G.order())
    R = regular_module(G, F)
    n = G.order()
    if n == 1:
        return zero_module(G, F)
    basis = np.zeros((n - 1, n), DTYPE)
    basis[:, 0] = 1
    basis[np.arange(n - 1), np.arange(1, n)] = F.neg(np.ones(n - 1, DTYPE))
    return R.submodule(basis)
