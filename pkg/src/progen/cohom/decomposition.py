"""h^1 = delta + h' on irreducible F_p-modules."""

from __future__ import annotations

from dataclasses import dataclass

from ..groups.chief import ChiefSeries, chief_series, delta
from ..groups.homomorphism import centralizer_kernel, quotient
from ..groups.permgroup import PermGroup
from ..modrep.hom import endo_degree
from ..modrep.module import GModule
from .ext import h_dim


def _prime_field(M: GModule) -> GModule:
    return M if M.field.is_prime else M.restrict_scalars()


def h_prime(G: PermGroup, M: GModule, route: str = "reduced") -> int:
    """dim over End(M) of H^1(G / C_G(M), M)."""
    M = _prime_field(M)
    f = endo_degree(M)
    Q = quotient(G, centralizer_kernel(G, M)).group
    return h_dim(Q, M.with_group(Q), 1, route) // f


@dataclass(frozen=True)
class H1Decomposition:
    h1: int
    delta: int
    h_prime: int

    @property
    def ok(self) -> bool:
        return self.h1 == self.delta + self.h_prime

    def as_tuple(self) -> tuple[int, int, int, bool]:
        return (self.h1, self.delta, self.h_prime, self.ok)


def h1_decomposition(G: PermGroup, M: GModule, series: ChiefSeries | None = None, route: str = "reduced") -> H1Decomposition:
    """(h^1, delta, h') with dimensions over End_G(M); M is viewed over its prime field."""
    M = _prime_field(M)
    f = endo_degree(M)
    h1 = h_dim(G, M, 1, route)
    if h1 % f:
        raise AssertionError("h^1 is not a multiple of the endomorphism degree")
    return H1Decomposition(h1 // f, delta(G, M, series or chief_series(G)), h_prime(G, M, route))
