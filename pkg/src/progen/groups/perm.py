"""Permutations on {0, ..., n-1}.

Products compose left to right: (p * q)[i] == q[p[i]], i.e. apply p first.
"""

from __future__ import annotations

import re

import numpy as np

PDTYPE = np.int32


class Perm:
    __slots__ = ("images",)

    def __init__(self, images):
        a = np.asarray(images, dtype=PDTYPE)
        if a.ndim != 1 or sorted(a.tolist()) != list(range(len(a))):
            raise ValueError("not a permutation")
        self.images = a

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(np.arange(n))

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Perm":
        return cls(parse_cycles(text, degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(other.images[self.images])

    def __invert__(self) -> "Perm":
        return Perm(np.argsort(self.images))

    inverse = __invert__

    def __pow__(self, k: int) -> "Perm":
        base = self if k >= 0 else ~self
        k = abs(k)
        out = Perm.identity(self.degree)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, i: int) -> int:
        return int(self.images[i])

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        return hash(self.images.tobytes())

    def is_identity(self) -> bool:
        return bool((self.images == np.arange(self.degree)).all())

    def order(self) -> int:
        from math import lcm

        out = 1
        for c in self.cycles():
            out = lcm(out, len(c))
        return out

    def cycles(self) -> list[list[int]]:
        seen = np.zeros(self.degree, bool)
        out = []
        for i in range(self.degree):
            if seen[i]:
                continue
            c = [i]
            seen[i] = True
            j = int(self.images[i])
            while j != i:
                c.append(j)
                seen[j] = True
                j = int(self.images[j])
            if len(c) > 1:
                out.append(c)
        return out

    def to_cycles(self) -> str:
        cs = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) if cs else "()"

    def __repr__(self) -> str:
        return f"Perm({self.to_cycles()})"


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> np.ndarray:
    """Images of a permutation written in disjoint cycle notation, e.g. "(0 1 2)(3 4)"."""
    text = text.strip()
    rest = _CYCLE.sub("", text).strip()
    if rest:
        raise ValueError(f"malformed cycle notation: {text!r}")
    images = np.arange(degree, dtype=PDTYPE)
    seen: set[int] = set()
    for body in _CYCLE.findall(text):
        pts = [int(x) for x in body.replace(",", " ").split()]
        for x in pts:
            if not 0 <= x < degree:
                raise ValueError(f"point {x} outside 0..{degree - 1}")
            if x in seen:
                raise ValueError(f"point {x} repeated in cycle notation")
            seen.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a] = b
    return images
