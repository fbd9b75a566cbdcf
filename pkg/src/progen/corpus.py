"""Named test corpora shared by the verify suites and the acceptance run."""

from __future__ import annotations

from functools import lru_cache

from .ffalg.field import gf
from .groups.named import named_group
from .groups.permgroup import PermGroup
from .modrep.census import IrrCensus, irr_census
from .modrep.module import GModule, augmentation_module, permutation_module, regular_module, trivial_module

# groups of order at most 48 for the generation-probability oracle
GENPROB_GROUPS = (
    "C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10", "C12",
    "D6", "D8", "D10", "D12", "D16", "D24",
    "S3", "A4", "S4", "Q8", "C2xC2", "C2xC4", "C2xC2xC2", "C3xS3", "C2xA4", "C4xC4",
)

MC_SEED = 20240607


@lru_cache(maxsize=None)
def group(gid: str) -> PermGroup:
    return named_group(gid)


@lru_cache(maxsize=None)
def census(gid: str, q: int) -> IrrCensus:
    return irr_census(group(gid), q)


def _is_trivial(M: GModule) -> bool:
    return M.dim == 1 and all(int(A[0, 0]) == 1 for A in M.mats)


def irr(gid: str, q: int, dim: int, q_M: int | None = None, nontrivial: bool = False) -> GModule:
    """The first census class of the given dimension (and endomorphism field size)."""
    hits = [c for c in census(gid, q) if c.dim == dim and (q_M is None or c.endo_size == q_M)]
    if nontrivial:
        hits = [c for c in hits if not _is_trivial(c.module)]
    return hits[0].module


def _perm_module(gid: str, q: int) -> GModule:
    G = group(gid)
    return permutation_module(G, gf(q))


def modules() -> list[tuple[str, GModule]]:
    """Small modules for the generation oracles (|N| <= 2^12)."""
    out = [
        ("C2 trivial F2", trivial_module(group("C2"), gf(2))),
        ("C2 regular F2", regular_module(group("C2"), gf(2))),
        ("C3 2-dim F2 (q_M=4)", irr("C3", 2, 2)),
        ("C3 2-dim F2 ^2", irr("C3", 2, 2).power(2)),
        ("C3 2-dim F2 ^3", irr("C3", 2, 2).power(3)),
        ("C5 4-dim F2 (q_M=16)", irr("C5", 2, 4)),
        ("C3 regular F3", regular_module(group("C3"), gf(3))),
        ("C4 regular F2", regular_module(group("C4"), gf(2))),
        ("V4 regular F2", regular_module(group("V4"), gf(2))),
        ("S3 trivial F2 ^3", trivial_module(group("S3"), gf(2)).power(3)),
        ("S3 trivial F3 ^2", trivial_module(group("S3"), gf(3)).power(2)),
        ("S3 sign F3", irr("S3", 3, 1, nontrivial=True)),
        ("S3 2-dim F2", irr("S3", 2, 2)),
        ("S3 2-dim F2 ^2", irr("S3", 2, 2).power(2)),
        ("S3 2-dim F2 ^3", irr("S3", 2, 2).power(3)),
        ("S3 2-dim + trivial F2", irr("S3", 2, 2) + trivial_module(group("S3"), gf(2))),
        ("S3 regular F2", regular_module(group("S3"), gf(2))),
        ("S3 regular F3", regular_module(group("S3"), gf(3))),
        ("S3 augmentation F2", augmentation_module(group("S3"), gf(2))),
        ("S3 natural F3", _perm_module("S3", 3)),
        ("A4 2-dim F2 (q_M=4)", irr("A4", 2, 2)),
        ("A4 natural F2", _perm_module("A4", 2)),
        ("D8 natural F2", _perm_module("D8", 2)),
        ("S4 natural F2", _perm_module("S4", 2)),
        ("S4 natural F3", _perm_module("S4", 3)),
        ("Q8 regular F2", regular_module(group("Q8"), gf(2))),
        ("A5 4-dim F2 (q_M=4)", irr("A5", 2, 4, q_M=4)),
        ("A5 Steinberg F2", irr("A5", 2, 4, q_M=2)),
        ("A5 natural F2", _perm_module("A5", 2)),
    ]
    return out


def cohomology_pairs() -> list[tuple[str, PermGroup, GModule]]:
    """(G, M) pairs with M irreducible over a prime dividing |G|, for h^1 = delta + h'."""
    spec = [
        ("C2", 2), ("C3", 3), ("C4", 2), ("V4", 2), ("C6", 2), ("C6", 3), ("S3", 2), ("S3", 3),
        ("D8", 2), ("Q8", 2), ("A4", 2), ("A4", 3), ("D10", 2), ("D10", 5), ("S4", 2), ("S4", 3),
        ("C3xS3", 3), ("A5", 2), ("A5", 3), ("A5", 5), ("SL25", 5),
    ]
    out = []
    for gid, p in spec:
        for c in census(gid, p):
            out.append((f"{gid} F{p} {c.label}", group(gid), c.module))
    return out


RESOLUTION_CASES = (("C2", 2), ("C3", 3), ("S3", 2), ("S3", 3), ("A4", 2), ("A4", 3))
