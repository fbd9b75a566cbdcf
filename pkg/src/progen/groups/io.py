"""Group files: "degree n" followed by one generator per line in cycle notation."""

from __future__ import annotations

from pathlib import Path

from .named import named_group
from .perm import Perm, parse_cycles
from .permgroup import PermGroup


def parse_group(text: str, name: str | None = None) -> PermGroup:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty group file")
    head = lines[0].split()
    if len(head) != 2 or head[0] != "degree" or not head[1].isdigit():
        raise ValueError(f"expected 'degree n', got {lines[0]!r}")
    n = int(head[1])
    gens = [parse_cycles(ln, n) for ln in lines[1:]]
    return PermGroup(gens, degree=n, name=name)


def format_group(G: PermGroup) -> str:
    lines = [f"degree {G.degree}"]
    lines += [Perm(g).to_cycles() for g in G.gens]
    return "\n".join(lines) + "\n"


def load_group(ref: str) -> PermGroup:
    """A named id such as "A5" or "C2xC4", or the path of a group file."""
    p = Path(ref)
    if p.suffix or p.exists():
        return parse_group(p.read_text(), name=p.stem)
    return named_group(ref)
