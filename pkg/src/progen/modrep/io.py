"""Module files: a "group <ref> q <q> dim <d>" header and one matrix block per generator."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from ..ffalg.field import gf
from ..ffalg.matrix import Matrix, parse_block
from ..groups.io import load_group
from ..groups.permgroup import PermGroup
from .module import GModule


def parse_module(text: str, group: PermGroup | None = None, base: Path | None = None) -> GModule:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty module file")
    head = lines[0].split()
    if len(head) != 6 or head[0::2] != ["group", "q", "dim"]:
        raise ValueError(f"expected 'group <id> q <q> dim <d>', got {lines[0]!r}")
    ref, q, d = head[1], int(head[3]), int(head[5])
    if group is None:
        path = (base / ref) if base is not None and (base / ref).exists() else None
        group = load_group(str(path) if path else ref)
    F = gf(q)
    mats, i = [], 1
    while i < len(lines):
        m, i = parse_block(lines, i)
        if m.field.q != q or m.shape != (d, d):
            raise ValueError("generator matrix does not match the header")
        mats.append(m.entries.astype(np.uint8))
    if len(mats) != group.ngens:
        raise ValueError(f"expected {group.ngens} generator matrices, found {len(mats)}")
    return GModule(group, F, mats, check=True, dim=d)


def format_module(M: GModule, group_ref: str) -> str:
    out = [f"group {group_ref} q {M.field.q} dim {M.dim}\n"]
    out += [Matrix(M.field, A).to_text() for A in M.mats]
    return "".join(out)


def load_module(path: str | Path, group: PermGroup | None = None) -> GModule:
    p = Path(path)
    return parse_module(p.read_text(), group, base=p.parent)
