"""Sparse triplet matrices over F_q with Markowitz-ordered elimination."""

from __future__ import annotations

from collections import defaultdict

import numpy as np

from .field import DTYPE, GF
from .linalg import rank as dense_rank

FILL_LIMIT = 0.2


class SparseMatrix:
    """Matrix stored as (row, col, value) triplets; duplicates are summed."""

    def __init__(self, F: GF, shape: tuple[int, int], rows, cols, vals):
        self.F = F
        self.shape = (int(shape[0]), int(shape[1]))
        rows = np.asarray(rows, dtype=np.int64)
        cols = np.asarray(cols, dtype=np.int64)
        vals = F.asarray(np.asarray(vals, dtype=np.int64) % F.q if F.is_prime else vals)
        self.rows, self.cols, self.vals = _coalesce(F, self.shape, rows, cols, vals)

    @classmethod
    def from_dense(cls, F: GF, A) -> "SparseMatrix":
        A = F.asarray(A)
        r, c = np.nonzero(A)
        return cls(F, A.shape, r, c, A[r, c])

    @property
    def nnz(self) -> int:
        return len(self.vals)

    def to_dense(self) -> np.ndarray:
        A = np.zeros(self.shape, dtype=DTYPE)
        A[self.rows, self.cols] = self.vals
        return A

    def __eq__(self, other) -> bool:
        if isinstance(other, SparseMatrix):
            other = other.to_dense()
        other = np.asarray(other)
        return other.shape == self.shape and bool((self.to_dense() == other).all())

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.F, self.shape[::-1], self.cols, self.rows, self.vals)

    def matvec(self, x) -> np.ndarray:
        """A @ x for a vector or a matrix x (columns)."""
        F = self.F
        x = F.asarray(x)
        terms = F.mul(self.vals.reshape((-1,) + (1,) * (x.ndim - 1)), x[self.cols])
        out = np.zeros((self.shape[0],) + x.shape[1:], dtype=np.int64)
        if F.is_prime:
            np.add.at(out, self.rows, terms.astype(np.int64))
            return (out % F.p).astype(DTYPE)
        digits = F.to_digits(terms)
        acc = np.zeros((self.shape[0],) + x.shape[1:] + (F.e,), dtype=np.int64)
        np.add.at(acc, self.rows, digits)
        return F.from_digits(acc % F.p)

    def rank(self) -> int:
        return sparse_rank(self)


def _coalesce(F: GF, shape, rows, cols, vals):
    if not len(vals):
        return rows, cols, vals
    key = rows * shape[1] + cols
    order = np.argsort(key, kind="stable")
    key, vals = key[order], vals[order]
    uniq, start = np.unique(key, return_index=True)
    if len(uniq) != len(key):
        summed = np.array([F.sum(vals[a:b]) for a, b in zip(start, list(start[1:]) + [len(key)])], dtype=DTYPE)
        vals = summed
    keep = vals != 0
    uniq, vals = uniq[keep], vals[keep]
    return uniq // shape[1], uniq % shape[1], vals


def sparse_rank(A: SparseMatrix, fill_limit: float = FILL_LIMIT) -> int:
    """Rank by sparse elimination; switches to dense once fill exceeds fill_limit."""
    F = A.F
    m, n = A.shape
    rows: dict[int, dict[int, int]] = defaultdict(dict)
    for r, c, v in zip(A.rows.tolist(), A.cols.tolist(), A.vals.tolist()):
        rows[r][c] = v
    colrows: dict[int, set[int]] = defaultdict(set)
    for r, d in rows.items():
        for c in d:
            colrows[c].add(r)
    rank = 0
    nnz = A.nnz
    active_rows = set(rows)
    active_cols = set(colrows)
    mul, sub, inv = F.mul_table, F.sub_table, F.inv_table
    while active_rows:
        area = len(active_rows) * max(len(active_cols), 1)
        if nnz > fill_limit * area and area > 64:
            return rank + _dense_rest(F, rows, active_rows, active_cols)
        # Markowitz: row of least count, then its column of least count
        r = min(active_rows, key=lambda i: (len(rows[i]), i))
        if not rows[r]:
            active_rows.discard(r)
            continue
        c = min(rows[r], key=lambda j: (len(colrows[j]), j))
        prow = rows.pop(r)
        active_rows.discard(r)
        for j in prow:
            colrows[j].discard(r)
        nnz -= len(prow)
        rank += 1
        scale = int(inv[prow[c]])
        for i in list(colrows[c]):
            row = rows[i]
            f = int(mul[row[c], scale])
            before = len(row)
            for j, v in prow.items():
                new = int(sub[row.get(j, 0), mul[f, v]])
                if new:
                    if j not in row:
                        colrows[j].add(i)
                    row[j] = new
                elif j in row:
                    del row[j]
                    colrows[j].discard(i)
            nnz += len(row) - before
            if not row:
                active_rows.discard(i)
        active_cols.discard(c)
        colrows.pop(c, None)
    return rank


def _dense_rest(F: GF, rows, active_rows, active_cols) -> int:
    cols = sorted(active_cols)
    index = {c: k for k, c in enumerate(cols)}
    D = np.zeros((len(active_rows), len(cols)), dtype=DTYPE)
    for k, r in enumerate(sorted(active_rows)):
        for c, v in rows[r].items():
            D[k, index[c]] = v
    return dense_rank(F, D)
