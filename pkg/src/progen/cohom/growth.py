"""Growth sums sum_{|S| = k} (|H^m(G, S)| - 1) over an irreducible census."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from ..groups.permgroup import PermGroup
from ..modrep.census import IrrCensus, irr_census
from .ext import h_dim

CSV_COLUMNS = ("prime", "degree", "order_k", "sum", "nonzero_count", "total_classes")


@dataclass
class GrowthEntry:
    sum: int = 0
    nonzero: int = 0
    classes: list[dict] = field(default_factory=list)


@dataclass
class GrowthTable:
    prime: int
    degree: int
    entries: dict[int, GrowthEntry] = field(default_factory=dict)

    def sums(self) -> dict[int, int]:
        return {k: e.sum for k, e in sorted(self.entries.items())}

    def counts(self) -> dict[int, int]:
        return {k: e.nonzero for k, e in sorted(self.entries.items())}

    def check(self) -> bool:
        for e in self.entries.values():
            sizes = [c["h_size"] - 1 for c in e.classes if c["h_dim"]]
            if e.nonzero != len(sizes) or e.sum != sum(sizes) or e.sum < e.nonzero * min(sizes, default=0):
                return False
        return True

    def rows(self) -> list[tuple]:
        return [(self.prime, self.degree, k, e.sum, e.nonzero, len(e.classes)) for k, e in sorted(self.entries.items())]

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(self.rows())
        return buf.getvalue()

    def to_json(self) -> str:
        data = {
            "prime": self.prime,
            "degree": self.degree,
            "orders": [
                {"order_k": str(k), "sum": str(e.sum), "nonzero_count": e.nonzero, "classes": e.classes}
                for k, e in sorted(self.entries.items())
            ],
        }
        return json.dumps(data, indent=2, sort_keys=True) + "\n"


def growth_sums(G: PermGroup, p: int, m: int, census: IrrCensus | None = None, route: str = "reduced") -> GrowthTable:
    """Per order k = |S|: the sum of |H^m(G, S)| - 1 and the count of classes with H^m != 0."""
    census = census or irr_census(G, p)
    if not census.complete:
        raise ValueError("census is not complete")
    if census.prime != p:
        raise ValueError("census is over the wrong characteristic")
    q = census.field.q
    table = GrowthTable(p, m)
    for c in sorted(census, key=lambda c: c.label):
        h = h_dim(G, c.module, m, route)
        e = table.entries.setdefault(c.order, GrowthEntry())
        size = q**h
        e.sum += size - 1
        e.nonzero += h > 0
        e.classes.append({"label": c.label, "dim": c.dim, "h_dim": h, "h_size": size})
    table.entries = dict(sorted(table.entries.items()))
    return table


def merge_tables(tables: list[GrowthTable]) -> dict[int, tuple[int, int]]:
    """Orders merged across primes: {k: (sum, nonzero_count)} for tables of one degree."""
    if len({t.degree for t in tables}) > 1:
        raise ValueError("tables have different degrees")
    out: dict[int, tuple[int, int]] = {}
    for t in sorted(tables, key=lambda t: t.prime):
        for k, e in t.entries.items():
            s, n = out.get(k, (0, 0))
            out[k] = (s + e.sum, n + e.nonzero)
    return dict(sorted(out.items()))


@dataclass
class RatioReport:
    prime: int
    ratios: list[tuple[str, int, int, Fraction]]  # (label, dim, h2, h2 / dim)

    @property
    def max_ratio(self) -> Fraction:
        return max((r[3] for r in self.ratios), default=Fraction(0))


def h2_ratio_report(G: PermGroup, p: int, census: IrrCensus | None = None, max_dim: int | None = None, route: str = "reduced") -> RatioReport:
    """dim H^2(G, M) / dim M over the census, both dimensions over the census field."""
    census = census or irr_census(G, p)
    out = []
    for c in census:
        if max_dim is not None and c.dim > max_dim:
            continue
        h2 = h_dim(G, c.module, 2, route)
        out.append((c.label, c.dim, h2, Fraction(h2, c.dim)))
    return RatioReport(p, out)
