"""Growth series of tower levels and a windowed log-log slope fit."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .census import LevelCensus, h1_series, level_census
from .spec import TowerSpec

STATISTICS = ("total", "h1_sum", "h1_nonzero")
CSV_COLUMNS = ("level", "prime", "order", "total", "h1_sum", "h1_nonzero")


class InsufficientData(ValueError):
    pass


@dataclass
class GrowthSeries:
    counts: dict[int, int]
    statistic: str = "total"
    level: int | None = None
    prime: int | None = None
    spec: str = ""
    slopes: list[float] = field(default_factory=list)
    superpolynomial: bool | None = None

    def cumulative(self) -> list[tuple[int, int]]:
        out, run = [], 0
        for k, c in sorted(self.counts.items()):
            if c < 0:
                raise ValueError("counts must be nonnegative")
            run += c
            out.append((k, run))
        return out

    def is_zero(self) -> bool:
        return not any(self.counts.values())


def _log(x: int) -> float:
    """Natural log of a positive big integer."""
    return math.log(x)


def _windows(points: list[tuple[float, float]]) -> list[list[tuple[float, float]]]:
    """Group (log2 k, log C) points into windows log2 k in [2^w, 2^(w+1))."""
    groups: dict[int, list] = {}
    for lk, lc in points:
        w = math.floor(math.log2(lk)) if lk >= 1 else -1
        groups.setdefault(w, []).append((lk, lc))
    return [groups[w] for w in sorted(groups)]


def slope_fit(series: GrowthSeries, jump: float = 0.5, run: int = 3) -> tuple[float, bool]:
    """(exponent estimate, superpolynomial flag) from cumulative counts.

    Points are (log k, log C(k)) with C the cumulative count up to k. A
    least-squares slope is fitted per window of doubling log2 k; the estimate
    is the slope of the last window, and the flag is raised when windowed
    slopes rise by more than `jump` over `run` consecutive windows.
    """
    pts = [(math.log2(k), _log(c)) for k, c in series.cumulative() if c > 0 and k > 1]
    if len(pts) < 3:
        raise InsufficientData("slope fit needs at least three nonzero cumulative points")
    slopes = []
    for win in _windows(pts):
        if len(win) < 2:
            continue
        x = np.array([a for a, _ in win]) * math.log(2)
        y = np.array([b for _, b in win])
        slopes.append(float(np.polyfit(x, y, 1)[0]))
    if not slopes:
        x = np.array([a for a, _ in pts]) * math.log(2)
        slopes = [float(np.polyfit(x, np.array([b for _, b in pts]), 1)[0])]
    rising, flag = 1, False
    for a, b in zip(slopes, slopes[1:]):
        rising = rising + 1 if b - a > jump else 1
        flag |= rising >= run
    series.slopes, series.superpolynomial = slopes, flag
    return slopes[-1], flag


@dataclass
class LevelReport:
    level: int
    census: LevelCensus
    total: GrowthSeries
    h1_sum: GrowthSeries
    h1_nonzero: GrowthSeries

    def series(self) -> list[GrowthSeries]:
        return [self.total, self.h1_sum, self.h1_nonzero]


@dataclass
class GrowthReport:
    spec: TowerSpec
    prime: int
    levels: list[LevelReport]

    def rows(self) -> list[tuple]:
        out = []
        for r in self.levels:
            for k in sorted(r.total.counts):
                out.append((r.level, self.prime, k, r.total.counts[k], r.h1_sum.counts[k], r.h1_nonzero.counts[k]))
        return out

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        w.writerows(self.rows())
        return buf.getvalue()

    def plot_data(self, statistic: str = "total") -> str:
        """Two-column log10 pairs (order, cumulative count) per level, blank line between levels."""
        blocks = []
        for r in self.levels:
            s = getattr(r, statistic)
            lines = [f"# level {r.level} {statistic}"]
            lines += [f"{math.log10(k):.6f} {math.log10(c):.6f}" for k, c in s.cumulative() if c > 0]
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks) + "\n"

    def totals(self) -> list[int]:
        return [r.census.total for r in self.levels]


def growth_report(spec: TowerSpec, p: int, levels=None, order_cap: int | None = None) -> GrowthReport:
    """Class totals and H^1 series for each requested level."""
    levels = range(len(spec)) if levels is None else levels
    out = []
    for L in levels:
        c = level_census(spec, L, p, order_cap)
        sums, nonzero = h1_series(c)
        meta = dict(level=L, prime=p, spec=spec.to_json())
        out.append(
            LevelReport(
                L,
                c,
                GrowthSeries(dict(c.counts), "total", **meta),
                GrowthSeries(sums, "h1_sum", **meta),
                GrowthSeries(nonzero, "h1_nonzero", **meta),
            )
        )
    return GrowthReport(spec, p, out)
