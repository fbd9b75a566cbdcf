"""Bit-packed F_2 elimination: each row is a vector of uint64 words."""

from __future__ import annotations

import numpy as np


def pack(A: np.ndarray) -> np.ndarray:
    """Pack a 0/1 matrix into uint64 words (bit j of word w is column 64w+j)."""
    A = np.asarray(A, dtype=np.uint8) & 1
    m, n = A.shape
    nw = (n + 63) // 64
    padded = np.zeros((m, nw * 64), dtype=np.uint8)
    padded[:, :n] = A
    b = np.packbits(padded, axis=1, bitorder="little")  # m x 8nw bytes
    return np.ascontiguousarray(b).view("<u8").reshape(m, nw)


def unpack(P: np.ndarray, n: int) -> np.ndarray:
    m = P.shape[0]
    b = np.ascontiguousarray(P).view(np.uint8).reshape(m, -1)
    return np.unpackbits(b, axis=1, bitorder="little")[:, :n].astype(np.uint8)


def rref_packed(P: np.ndarray, n: int) -> tuple[np.ndarray, list[int]]:
    """Gauss-Jordan on packed rows; returns (nonzero reduced rows, pivots)."""
    P = np.array(P, dtype=np.uint64, copy=True)
    m = P.shape[0]
    piv: list[int] = []
    r = 0
    one = np.uint64(1)
    for c in range(n):
        if r == m:
            break
        w, bit = divmod(c, 64)
        mask = one << np.uint64(bit)
        col = (P[r:, w] & mask) != 0
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            P[[r, i]] = P[[i, r]]
        hit = np.flatnonzero((P[:, w] & mask) != 0)
        hit = hit[hit != r]
        if hit.size:
            P[hit, w:] ^= P[r, w:]
        piv.append(c)
        r += 1
    return P[:r], piv


def rank_packed(A: np.ndarray) -> int:
    """Rank over F_2 of a dense 0/1 matrix, using packed rows."""
    A = np.asarray(A)
    if A.shape[0] < A.shape[1]:
        A = A.T
    m, n = A.shape
    if m == 0 or n == 0:
        return 0
    total = 0
    basis = np.zeros((0, (n + 63) // 64), dtype=np.uint64)
    pivots: list[int] = []
    # chunks keep the working set small on tall matrices
    step = max(4 * n, 1024)
    for s in range(0, m, step):
        block = pack(A[s : s + step])
        if pivots:
            block = _reduce_packed(block, basis, pivots)
        stacked = np.vstack([basis, block])
        basis, pivots = rref_packed(stacked, n)
        total = len(pivots)
        if total == n:
            break
    return total


def _reduce_packed(block: np.ndarray, basis: np.ndarray, pivots: list[int]) -> np.ndarray:
    for row, c in zip(basis, pivots):
        w, bit = divmod(c, 64)
        hit = (block[:, w] >> np.uint64(bit)) & np.uint64(1)
        idx = np.flatnonzero(hit)
        if idx.size:
            block[idx] ^= row
    return block
