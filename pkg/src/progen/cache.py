"""On-disk memo of irreducible censuses, keyed by a content hash of (group, field, seed)."""

from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

import numpy as np

from .ffalg.field import DTYPE, gf
from .groups.permgroup import PermGroup
from .modrep.census import IrrCensus, IrrClass, irr_census
from .modrep.module import GModule

ENV = "PROGEN_CACHE_DIR"
FORMAT = 1


def census_key(G: PermGroup, q: int, seed: int) -> str:
    h = hashlib.sha256()
    h.update(f"census/{FORMAT}/{G.degree}/{q}/{seed}/".encode())
    for g in G.gens:
        h.update(np.ascontiguousarray(g, dtype=np.int64).tobytes())
    return h.hexdigest()


def _dump(C: IrrCensus) -> str:
    data = {
        "q": C.field.q,
        "classes": [
            {"label": c.label, "endo_size": c.endo_size, "f": c.f, "dim": c.dim, "mats": [A.tolist() for A in c.module.mats]}
            for c in C
        ],
    }
    return json.dumps(data, sort_keys=True)


def _load(text: str, G: PermGroup) -> IrrCensus:
    data = json.loads(text)
    F = gf(data["q"])
    classes = []
    for c in data["classes"]:
        mats = [np.array(A, dtype=DTYPE).reshape(c["dim"], c["dim"]) for A in c["mats"]]
        M = GModule(G, F, mats, check=False, dim=c["dim"])
        classes.append(IrrClass(M, c["endo_size"], c["label"], c["f"]))
    return IrrCensus(G, F, classes, complete=True)


def cached_census(G: PermGroup, q: int, seed: int = 0, directory: str | None = None) -> IrrCensus:
    """irr_census, memoized under $PROGEN_CACHE_DIR when that is set."""
    directory = directory or os.environ.get(ENV)
    if not directory:
        return irr_census(G, q, seed=seed)
    path = Path(directory) / f"{census_key(G, q, seed)}.json"
    if path.exists():
        return _load(path.read_text(), G)
    C = irr_census(G, q, seed=seed)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(f".{os.getpid()}.tmp")
    tmp.write_text(_dump(C))
    os.replace(tmp, path)
    return C
