"""Command-line batch runner.

Every command takes its parameters from a JSON config (``--config``) and/or
``--param KEY=VALUE`` flags, computes, and only then writes its artifacts
atomically into ``--out``.  Exit statuses:

    0  success
    2  configuration error (nothing written)
    3  a size cap was exceeded
    4  a computation failed
    5  a verification suite reported failures
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from . import caps
from .cache import cached_census

EXIT_OK, EXIT_CONFIG, EXIT_CAP, EXIT_COMPUTE, EXIT_VERIFY = 0, 2, 3, 4, 5

REQUIRED = object()

# command -> {parameter: default}; REQUIRED marks mandatory parameters
COMMANDS: dict[str, dict] = {
    "genprob": {"mode": "group", "group": REQUIRED, "k": REQUIRED, "p": None, "module": None, "normal": None, "method": "exact", "trials": 10_000},
    "lattice": {"group": REQUIRED},
    "frattini": {"group": REQUIRED},
    "census": {"group": REQUIRED, "p": REQUIRED},
    "resolution": {"group": REQUIRED, "p": REQUIRED, "length": 2, "module": "trivial"},
    "cohom": {"group": REQUIRED, "p": REQUIRED, "degrees": [0, 1, 2], "module": None, "route": "reduced", "decomposition": False},
    "growth": {"group": REQUIRED, "p": REQUIRED, "degree": 1},
    "tower": {"spec": REQUIRED, "p": REQUIRED, "levels": None, "order_cap": None},
    "verify": {"suite": REQUIRED},
}
COMMON = ("seed", "caps")
STOCHASTIC = {("genprob", "mc")}


class ConfigError(ValueError):
    pass


@dataclass
class JobConfig:
    command: str
    params: dict
    seed: int = 0
    caps: dict = field(default_factory=dict)
    out: Path = Path(".")

    @classmethod
    def build(cls, command: str, raw: dict, seed: int | None, cap_overrides: dict, out: str) -> "JobConfig":
        if command not in COMMANDS:
            raise ConfigError(f"unknown command {command!r}")
        schema = COMMANDS[command]
        unknown = set(raw) - set(schema) - set(COMMON) - {"command"}
        if unknown:
            raise ConfigError(f"unknown keys for {command}: {sorted(unknown)}")
        if raw.get("command", command) != command:
            raise ConfigError("config command does not match the CLI command")
        params = {}
        for key, default in schema.items():
            if key in raw:
                params[key] = raw[key]
            elif default is REQUIRED:
                raise ConfigError(f"missing required key {key!r}")
            else:
                params[key] = default
        if seed is None:
            seed = raw.get("seed")
        mode = params.get("method")
        if seed is None and (command, mode) in STOCHASTIC:
            raise ConfigError("a seed is required for sampling jobs")
        if not isinstance(seed if seed is not None else 0, int):
            raise ConfigError("seed must be an integer")
        cap_values = dict(raw.get("caps", {}))
        cap_values.update(cap_overrides)
        bad = set(cap_values) - set(caps.DEFAULTS)
        if bad:
            raise ConfigError(f"unknown caps: {sorted(bad)}")
        return cls(command, params, int(seed or 0), cap_values, Path(out))


# -- helpers ------------------------------------------------------------------


def frac(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def write_atomic(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _group(ref):
    from .groups.io import load_group

    if not isinstance(ref, str):
        raise ConfigError("group must be a named id or a file path")
    try:
        return load_group(ref)
    except (KeyError, ValueError, OSError) as exc:
        raise ConfigError(f"cannot resolve group {ref!r}: {exc}") from None


def _q(value) -> int:
    from .ffalg.field import prime_power

    if not isinstance(value, int):
        raise ConfigError("p must be an integer prime power")
    try:
        prime_power(value)
    except ValueError:
        raise ConfigError(f"{value} is not a prime power") from None
    return value


def _census(G, q: int, seed: int):
    return cached_census(G, q, seed)


def _module(G, q: int, ref, seed: int):
    """Resolve a module reference: a file path, a construction name, or "irr:<index or label>"."""
    from .modrep import io as mio
    from .modrep.module import augmentation_module, permutation_module, regular_module, trivial_module

    if not isinstance(ref, str):
        raise ConfigError("module must be a string reference")
    builders = {"trivial": trivial_module, "regular": regular_module, "permutation": permutation_module, "augmentation": augmentation_module}
    if ref in builders:
        return builders[ref](G, q)
    if ref.startswith("irr:"):
        key = ref[4:]
        C = _census(G, q, seed)
        for i, c in enumerate(C):
            if key == str(i) or key == c.label:
                return c.module
        raise ConfigError(f"no census class {key!r}")
    path = Path(ref)
    if not path.exists():
        raise ConfigError(f"unknown module reference {ref!r}")
    try:
        M = mio.load_module(path, group=G)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    if M.field.q != q:
        raise ConfigError("module field does not match p")
    return M


def _positive_int(value, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ConfigError(f"{name} must be a nonnegative integer")
    return value


# -- commands -----------------------------------------------------------------


def job_genprob(cfg: JobConfig) -> dict[str, str]:
    from .groups.genprob import gen_prob_enum, gen_prob_exact, gen_prob_mc, normal_gen_prob, normal_gen_prob_mc
    from .modrep.genprob import min_generators, module_gen_prob, module_gen_prob_enum, module_gen_prob_mc

    P = cfg.params
    G = _group(P["group"])
    k = _positive_int(P["k"], "k")
    method, mode = P["method"], P["mode"]
    if method not in ("exact", "enum", "mc"):
        raise ConfigError("method must be exact, enum or mc")
    trials = _positive_int(P["trials"], "trials")
    out: dict = {"group": P["group"], "k": k, "mode": mode, "method": method}
    if mode == "group":
        if method == "mc":
            est = gen_prob_mc(G, k, trials, cfg.seed)
        else:
            out["value"] = frac((gen_prob_exact if method == "exact" else gen_prob_enum)(G, k))
    elif mode == "module":
        if P["p"] is None or P["module"] is None:
            raise ConfigError("module mode needs p and module")
        q = _q(P["p"])
        N = _module(G, q, P["module"], cfg.seed)
        out.update(p=q, module=P["module"], dim=N.dim)
        if method == "mc":
            est = module_gen_prob_mc(N, k, trials, cfg.seed)
        else:
            out["value"] = frac((module_gen_prob if method == "exact" else module_gen_prob_enum)(N, k))
            out["min_generators"] = min_generators(N)
    elif mode == "normal":
        A = _normal_subgroup(G, P["normal"])
        out["normal_order"] = int(A.sum())
        if method == "mc":
            est = normal_gen_prob_mc(G, A, k, trials, cfg.seed)
        else:
            out["value"] = frac(normal_gen_prob(G, A, k))
    else:
        raise ConfigError("mode must be group, module or normal")
    if method == "mc":
        out.update(seed=cfg.seed, trials=trials, successes=est.successes, estimate=frac(est.estimate))
    return {"genprob.json": dumps(out)}


def _normal_subgroup(G, ref) -> np.ndarray:
    from .groups.perm import parse_cycles

    if ref == "derived":
        return G.derived_mask()
    if ref == "whole":
        return np.ones(G.order(), bool)
    if not isinstance(ref, list) or not all(isinstance(x, str) for x in ref):
        raise ConfigError('normal must be "derived", "whole" or a list of generators in cycle notation')
    try:
        idx = [G.elements.index(parse_cycles(x, G.degree)) for x in ref]
    except (KeyError, ValueError) as exc:
        raise ConfigError(f"bad normal generator: {exc}") from None
    A = G.normal_closure(np.array(idx, dtype=np.int64))
    return A


def job_lattice(cfg: JobConfig) -> dict[str, str]:
    from .groups.lattice import subgroup_lattice

    G = _group(cfg.params["group"])
    L = subgroup_lattice(G)
    rows = [
        {"index": i, "order": L.orders[i], "mobius": L.mobius[i], "normal": bool(G.is_normal(L.masks[i])), "maximal": i in L.maximal}
        for i in range(len(L))
    ]
    data = {"group": cfg.params["group"], "order": G.order(), "subgroups": len(L), "mobius_ok": L.check_mobius(), "lattice": rows}
    return {"lattice.json": dumps(data)}


def job_frattini(cfg: JobConfig) -> dict[str, str]:
    from .groups.chief import chief_series
    from .groups.genprob import gen_prob_exact
    from .groups.homomorphism import quotient
    from .groups.lattice import frattini_mask

    G = _group(cfg.params["group"])
    phi = frattini_mask(G)
    Q = quotient(G, phi).group
    S = chief_series(G)
    factors = [
        {"order": f.order, "abelian": f.abelian, "prime": f.prime, "non_frattini": f.non_frattini}
        for f in S.factors
    ]
    data = {
        "group": cfg.params["group"],
        "order": G.order(),
        "frattini_order": int(phi.sum()),
        "quotient_order": Q.order(),
        "gen_prob_equal": [gen_prob_exact(G, k) == gen_prob_exact(Q, k) for k in (1, 2, 3)],
        "chief_factors": factors,
    }
    return {"frattini.json": dumps(data)}


def job_census(cfg: JobConfig) -> dict[str, str]:
    G = _group(cfg.params["group"])
    q = _q(cfg.params["p"])
    C = _census(G, q, cfg.seed)
    return {"census.json": dumps(C.to_json())}


def job_resolution(cfg: JobConfig) -> dict[str, str]:
    from .modrep.projective import minimal_resolution

    P = cfg.params
    G = _group(P["group"])
    q = _q(P["p"])
    n = _positive_int(P["length"], "length")
    N = _module(G, q, P["module"], cfg.seed)
    R = minimal_resolution(G, q, n, N=N, seed=cfg.seed)
    labels = [c.label for c in R.table.census]
    data = {
        "group": P["group"],
        "p": q,
        "module": P["module"],
        "terms": [{"dim": T.dim, "summands": [labels[i] for i in s], "kernel_dim": len(K)} for T, s, K in zip(R.terms, R.summands, R.kernels)],
        "exact": R.check_exact(),
        "minimal": R.check_minimal(),
    }
    return {"resolution.json": dumps(data)}


def job_cohom(cfg: JobConfig) -> dict[str, str]:
    from .cohom.decomposition import h1_decomposition
    from .cohom.ext import ROUTES, h_dim

    P = cfg.params
    G = _group(P["group"])
    q = _q(P["p"])
    if P["route"] not in ROUTES:
        raise ConfigError(f"route must be one of {ROUTES}")
    degrees = P["degrees"]
    if not isinstance(degrees, list) or not all(d in (0, 1, 2) for d in degrees):
        raise ConfigError("degrees must be a list drawn from 0, 1, 2")
    if P["module"] is None:
        targets = [(c.label, c.module) for c in _census(G, q, cfg.seed)]
    else:
        targets = [(P["module"], _module(G, q, P["module"], cfg.seed))]
    rows = []
    for label, M in targets:
        row = {"module": label, "dim": M.dim, "h": {str(n): h_dim(G, M, n, P["route"]) for n in degrees}}
        if P["decomposition"]:
            D = h1_decomposition(G, M)
            row["decomposition"] = {"h1": D.h1, "delta": D.delta, "h_prime": D.h_prime, "ok": D.ok}
        rows.append(row)
    return {"cohom.json": dumps({"group": P["group"], "p": q, "route": P["route"], "modules": rows})}


def job_growth(cfg: JobConfig) -> dict[str, str]:
    from .cohom.growth import growth_sums

    P = cfg.params
    G = _group(P["group"])
    q = _q(P["p"])
    m = _positive_int(P["degree"], "degree")
    if m > 2:
        raise ConfigError("degree must be at most 2")
    C = _census(G, q, cfg.seed)
    T = growth_sums(G, C.prime, m, C)
    return {"growth.csv": T.to_csv(), "growth.json": T.to_json()}


def job_tower(cfg: JobConfig) -> dict[str, str]:
    from .tower.growth import InsufficientData, growth_report, slope_fit
    from .tower.spec import TowerSpec, TowerSpecError

    P = cfg.params
    try:
        if isinstance(P["spec"], dict):
            spec = TowerSpec.from_dict(P["spec"])
        else:
            spec = TowerSpec.from_json(Path(P["spec"]).read_text())
    except (TowerSpecError, OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"bad tower spec: {exc}") from None
    p = _q(P["p"])
    levels = P["levels"]
    if levels is not None and (not isinstance(levels, list) or not all(isinstance(x, int) and 0 <= x < len(spec) for x in levels)):
        raise ConfigError("levels must be a list of level indices")
    cap = P["order_cap"]
    if cap is not None and (not isinstance(cap, int) or cap < 1):
        raise ConfigError("order_cap must be a positive integer")
    R = growth_report(spec, p, levels, cap)
    fits = []
    for r in R.levels:
        for s in r.series():
            try:
                slope, flag = slope_fit(s)
                fits.append({"level": r.level, "statistic": s.statistic, "slope": round(slope, 6), "superpolynomial": flag})
            except InsufficientData:
                fits.append({"level": r.level, "statistic": s.statistic, "slope": None, "superpolynomial": None})
    summary = {"spec": spec.to_dict(), "prime": p, "totals": [str(t) for t in R.totals()], "fits": fits}
    return {"tower.csv": R.to_csv(), "tower.plot.dat": R.plot_data(), "tower.json": dumps(summary)}


def job_verify(cfg: JobConfig) -> dict[str, str]:
    from .verify import SUITES, run_suite

    name = cfg.params["suite"]
    if name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    report = run_suite(name)
    return {"verify.json": dumps(report.to_dict())}


JOBS = {
    "genprob": job_genprob,
    "lattice": job_lattice,
    "frattini": job_frattini,
    "census": job_census,
    "resolution": job_resolution,
    "cohom": job_cohom,
    "growth": job_growth,
    "tower": job_tower,
    "verify": job_verify,
}


def run_job(cfg: JobConfig) -> tuple[int, dict[str, str]]:
    """Run a job and write its artifacts; returns (exit status, artifacts)."""
    try:
        with caps.override(**cfg.caps):
            artifacts = JOBS[cfg.command](cfg)
    except ConfigError:
        raise
    except caps.CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP, {}
    except Exception as exc:  # noqa: BLE001 - every other failure is a compute failure
        print(f"computation failed: {exc}", file=sys.stderr)
        return EXIT_COMPUTE, {}
    for name, text in artifacts.items():
        write_atomic(cfg.out / name, text)
    if cfg.command == "verify" and not json.loads(artifacts["verify.json"])["passed"]:
        return EXIT_VERIFY, artifacts
    return EXIT_OK, artifacts


# -- argument parsing ---------------------------------------------------------


def _parse_value(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return text


def _pairs(items: list[str], what: str) -> dict:
    out = {}
    for item in items:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise ConfigError(f"{what} must look like KEY=VALUE, got {item!r}")
        out[key] = _parse_value(value)
    return out


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="progen", description="Generation probabilities, module censuses and cohomology of finite groups.")
    ap.add_argument("command", choices=sorted(COMMANDS))
    ap.add_argument("--config", help="JSON job config")
    ap.add_argument("--seed", type=int, help="master seed (overrides the config)")
    ap.add_argument("--cap-override", action="append", default=[], metavar="KEY=VAL", help="raise or lower a size cap")
    ap.add_argument("--param", action="append", default=[], metavar="KEY=VAL", help="set a job parameter (JSON value)")
    ap.add_argument("--out", default=".", help="output directory")
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        raw: dict = {}
        if args.config:
            try:
                raw = json.loads(Path(args.config).read_text())
            except (OSError, json.JSONDecodeError) as exc:
                raise ConfigError(f"cannot read config: {exc}") from None
            if not isinstance(raw, dict):
                raise ConfigError("config must be a JSON object")
        raw.update(_pairs(args.param, "--param"))
        cap_overrides = _pairs(args.cap_override, "--cap-override")
        if not all(isinstance(v, int) for v in cap_overrides.values()):
            raise ConfigError("cap values must be integers")
        cfg = JobConfig.build(args.command, raw, args.seed, cap_overrides, args.out)
        status, _ = run_job(cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return status


if __name__ == "__main__":
    sys.exit(main())
