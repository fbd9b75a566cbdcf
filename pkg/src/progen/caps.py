"""Size caps shared by all expensive operations."""

from __future__ import annotations

import math
from contextlib import contextmanager

DEFAULTS = {
    "lattice": 500,  # |G| for subgroup lattices
    "enumeration": 10_000,  # |G| for element lists
    "table": 5_000,  # |G| for full multiplication tables
    "chop": 4096,  # module dimension over F_2 (scaled down by log2 q)
    "projective": 300,  # dim F_q[G] for projective covers
    "bar_columns": 200_000,  # cochain columns for the literal bar complex
    "module_enum": 2**24,  # |N|^k for exhaustive module tuple counts
    "group_enum": 2**24,  # |A|^k for exhaustive group tuple counts
    "extension": 10_000,  # |G|*|M| for explicit extensions
    "subgroups": 20_000,  # number of subgroups held in a lattice
}

_caps = dict(DEFAULTS)


class CapExceeded(RuntimeError):
    """A computation would exceed a configured size cap."""

    def __init__(self, name: str, value, limit):
        super().__init__(f"cap '{name}' exceeded: {value} > {limit}")
        self.name, self.value, self.limit = name, value, limit


def get(name: str) -> int:
    return _caps[name]


def check(name: str, value) -> None:
    if value > _caps[name]:
        raise CapExceeded(name, value, _caps[name])


def chop_limit(q: int) -> int:
    return int(_caps["chop"] / max(1.0, math.log2(q)))


@contextmanager
def override(**values):
    """Temporarily change caps: ``with override(lattice=1000): ...``."""
    unknown = set(values) - set(_caps)
    if unknown:
        raise KeyError(f"unknown caps: {sorted(unknown)}")
    old = {k: _caps[k] for k in values}
    _caps.update({k: int(v) for k, v in values.items()})
    try:
        yield
    finally:
        _caps.update(old)
