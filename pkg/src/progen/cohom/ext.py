"""Cohomology dimensions by route, and Ext through minimal resolutions."""

from __future__ import annotations

from ..groups.permgroup import PermGroup
from ..modrep.census import IrrClass
from ..modrep.hom import hom_dim
from ..modrep.module import GModule
from ..modrep.projective import minimal_resolution
from .bar import h_dim_bar
from .reduced import h_dim_reduced

ROUTES = ("reduced", "bar")


def h_dim(G: PermGroup, M: GModule, n: int, route: str = "reduced") -> int:
    """dim_{F_q} H^n(G, M) for n in {0, 1, 2}.

    route "reduced" parametrizes cocycles by their values on generators;
    route "bar" ranks the literal normalized bar coboundaries (subject to
    the bar_columns cap).
    """
    if n not in (0, 1, 2):
        raise ValueError("h_dim covers degrees 0, 1 and 2")
    if M.group is not G and M.group.ngens != G.ngens:
        raise ValueError("module is for a different group")
    if route == "reduced":
        return h_dim_reduced(G, M, n)
    if route == "bar":
        return h_dim_bar(G, M, n)
    raise ValueError(f"unknown route {route!r}")


def ext_dim(N: GModule, S: IrrClass | GModule, n: int, seed: int = 0) -> int:
    """dim Ext^n(N, S) = dim Hom(P_n, S) for a minimal resolution P of N."""
    target = S.module if isinstance(S, IrrClass) else S
    if n == 0:
        return hom_dim(N, target)
    res = minimal_resolution(N.group, N.field, n, N=N, seed=seed)
    if len(res.terms) <= n:
        return 0  # the resolution stopped: P_n = 0
    return hom_dim(res.terms[n], target)
