"""Tower specifications: levels built from powers of small factor groups."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

from ..groups.named import direct_product, named_group
from ..groups.permgroup import PermGroup


class TowerSpecError(ValueError):
    pass


@dataclass(frozen=True)
class TowerSpec:
    """levels[L] is a tuple of (factor id, multiplicity) pairs."""

    levels: tuple[tuple[tuple[str, int], ...], ...]

    def __post_init__(self):
        if not self.levels:
            raise TowerSpecError("a tower needs at least one level")
        for level in self.levels:
            for fid, m in level:
                if not isinstance(m, int) or m < 1:
                    raise TowerSpecError(f"multiplicity of {fid} must be a positive integer")
                try:
                    named_group(fid)
                except KeyError as exc:
                    raise TowerSpecError(str(exc)) from None
        for lo, hi in zip(self.levels, self.levels[1:]):
            if len(lo) > len(hi) or any(a[0] != b[0] or a[1] > b[1] for a, b in zip(lo, hi)):
                raise TowerSpecError("each level must extend the previous one")

    @classmethod
    def from_dict(cls, data: dict) -> "TowerSpec":
        if set(data) != {"levels"} or not isinstance(data["levels"], list):
            raise TowerSpecError('expected {"levels": [...]}')
        levels = []
        for level in data["levels"]:
            row = []
            for item in level:
                if not isinstance(item, dict) or set(item) != {"factor", "mult"}:
                    raise TowerSpecError("level entries must be {factor, mult} objects")
                row.append((str(item["factor"]), item["mult"]))
            levels.append(tuple(row))
        return cls(tuple(levels))

    @classmethod
    def from_json(cls, text: str) -> "TowerSpec":
        return cls.from_dict(json.loads(text))

    @classmethod
    def powers(cls, factor: str, mults) -> "TowerSpec":
        """The tower factor^m for m in mults."""
        return cls(tuple(((factor, int(m)),) for m in mults))

    def to_dict(self) -> dict:
        return {"levels": [[{"factor": f, "mult": m} for f, m in level] for level in self.levels]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __len__(self) -> int:
        return len(self.levels)

    @cached_property
    def factor_ids(self) -> list[str]:
        seen: dict[str, None] = {}
        for level in self.levels:
            for f, _ in level:
                seen.setdefault(f, None)
        return list(seen)

    def positions(self, level: int) -> list[str]:
        """Factor id of each direct-product coordinate of the level group."""
        return [f for f, m in self.levels[level] for _ in range(m)]

    def level_order(self, level: int) -> int:
        out = 1
        for f in self.positions(level):
            out *= factor_group(f).order()
        return out

    def level_group(self, level: int) -> PermGroup:
        """The level group itself; only for small oracle checks."""
        pos = self.positions(level)
        return direct_product(*[factor_group(f) for f in pos], name="x".join(pos))


_FACTORS: dict[str, PermGroup] = {}


def factor_group(fid: str) -> PermGroup:
    if fid not in _FACTORS:
        _FACTORS[fid] = named_group(fid)
    return _FACTORS[fid]


def projection_images(spec: TowerSpec, level: int) -> list[int]:
    """Coordinates of level+1 that survive projection onto level (the first mult of each factor block)."""
    lo, hi = spec.levels[level], spec.levels[level + 1]
    out, off = [], 0
    for i, (f, m) in enumerate(hi):
        if i < len(lo):
            out += list(range(off, off + lo[i][1]))
        off += m
    return out
