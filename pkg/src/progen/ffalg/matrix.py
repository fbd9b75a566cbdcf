"""Immutable matrix values over F_q and their text format."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .field import DTYPE, GF, gf
from .sparse import SparseMatrix


@dataclass(frozen=True, eq=False)
class Matrix:
    field: GF
    entries: np.ndarray

    def __post_init__(self):
        a = self.field.asarray(np.atleast_2d(np.asarray(self.entries)))
        a = np.array(a, dtype=DTYPE, copy=True)
        a.setflags(write=False)
        object.__setattr__(self, "entries", a)

    @classmethod
    def of(cls, q: int, rows) -> "Matrix":
        return cls(gf(q), np.asarray(rows, dtype=np.int64).reshape(len(rows), -1) if len(rows) else np.zeros((0, 0)))

    @classmethod
    def identity(cls, F: GF, n: int) -> "Matrix":
        return cls(F, F.eye(n))

    @property
    def rows(self) -> int:
        return self.entries.shape[0]

    @property
    def cols(self) -> int:
        return self.entries.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.entries.shape

    def __eq__(self, other) -> bool:
        if isinstance(other, SparseMatrix):
            return other == self.entries
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.shape == other.shape and bool((self.entries == other.entries).all())

    def __hash__(self) -> int:
        return hash((self.field.q, self.shape, self.entries.tobytes()))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        _check(self, other)
        return Matrix(self.field, self.field.matmul(self.entries, other.entries))

    def __add__(self, other: "Matrix") -> "Matrix":
        _check(self, other)
        return Matrix(self.field, self.field.add(self.entries, other.entries))

    def __sub__(self, other: "Matrix") -> "Matrix":
        _check(self, other)
        return Matrix(self.field, self.field.sub(self.entries, other.entries))

    @property
    def T(self) -> "Matrix":
        return Matrix(self.field, self.entries.T)

    def to_sparse(self) -> SparseMatrix:
        return SparseMatrix.from_dense(self.field, self.entries)

    def to_text(self) -> str:
        lines = [f"{self.field.q} {self.rows} {self.cols}"]
        lines += [" ".join(str(int(x)) for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Matrix":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        m, _ = parse_block(lines, 0)
        return m

    def __repr__(self) -> str:
        return f"Matrix(GF({self.field.q}), {self.entries.tolist()})"


def parse_block(lines: list[str], i: int) -> tuple[Matrix, int]:
    """Parse one "q rows cols" block starting at lines[i]; returns (matrix, next index)."""
    head = lines[i].split()
    if len(head) != 3:
        raise ValueError(f"bad matrix header: {lines[i]!r}")
    q, r, c = (int(x) for x in head)
    F = gf(q)
    body = [[int(x) for x in lines[i + 1 + k].split()] for k in range(r)]
    if any(len(row) != c for row in body):
        raise ValueError("matrix row length does not match header")
    a = np.array(body, dtype=np.int64).reshape(r, c)
    if a.size and (a.min() < 0 or a.max() >= q):
        raise ValueError("matrix entry out of range")
    return Matrix(F, a), i + 1 + r


def _check(a: Matrix, b: Matrix) -> None:
    if a.field != b.field:
        raise ValueError(f"field mismatch: GF({a.field.q}) vs GF({b.field.q})")


def rref(A: Matrix) -> tuple[Matrix, int, list[int]]:
    R, r, piv = linalg.rref(A.field, A.entries)
    return Matrix(A.field, R), r, piv


def rank(A: Matrix) -> int:
    return linalg.rank(A.field, A.entries)


def kernel(A: Matrix) -> Matrix:
    N = linalg.nullspace(A.field, A.entries)
    return Matrix(A.field, N.reshape(len(N), A.cols))


def solve(A: Matrix, b) -> np.ndarray | None:
    return linalg.solve(A.field, A.entries, b)


def kron(A: Matrix, B: Matrix) -> Matrix:
    _check(A, B)
    return Matrix(A.field, linalg.kron(A.field, A.entries, B.entries))
