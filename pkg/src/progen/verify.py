"""Invariant suites: each runs one property over its corpus and reports every instance."""

from __future__ import annotations

import itertools
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import corpus
from .cohom.bar import CochainSpace, h_dim_bar
from .cohom.decomposition import h1_decomposition
from .cohom.ext import ext_dim, h_dim
from .cohom.extension import extension_from_cocycle, h2_class_reps
from .ffalg.field import gf
from .groups.genprob import gen_prob_enum, gen_prob_exact, gen_prob_mc, normal_gen_prob
from .groups.homomorphism import quotient
from .groups.lattice import frattini_mask, subgroup_lattice
from .groups.small import all_small_groups
from .modrep.genprob import (
    head_data,
    hom_growth_sum,
    max_submodule_census,
    max_submodules_enum,
    min_generators,
    min_generators_brute,
    module_gen_prob,
    module_gen_prob_enum,
    module_gen_prob_mc,
    restriction_index,
    restriction_translates,
)
from .modrep.hom import hom_dim, i_mult
from .modrep.module import trivial_module
from .modrep.projective import minimal_resolution, projective_cover
from .tower.census import check_tensor_census, chop_counts, direct_h1_series, h1_series, level_census
from .tower.spec import TowerSpec

ENUM_LIMIT = 2**24


@dataclass
class Check:
    invariant: str
    instance: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check]

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.ok for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "total": len(self.checks),
            "failed": sum(not c.ok for c in self.checks),
            "checks": [asdict(c) for c in self.checks],
        }


def _f(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


# -- groups -------------------------------------------------------------------


def suite_mobius() -> list[Check]:
    out = []
    for gid in corpus.GENPROB_GROUPS + ("A5", "SL25"):
        L = subgroup_lattice(corpus.group(gid))
        out.append(Check("mobius recursion", gid, L.check_mobius(), f"{len(L)} subgroups"))
    return out


def suite_genprob_oracle(max_k: int = 3) -> list[Check]:
    out = []
    for gid in corpus.GENPROB_GROUPS:
        G = corpus.group(gid)
        for k in range(1, max_k + 1):
            a, b = gen_prob_exact(G, k), gen_prob_enum(G, k)
            out.append(Check("P(G,k) formula = enumeration", f"{gid} k={k}", a == b, f"{_f(a)} vs {_f(b)}"))
    return out


def suite_frattini_quotient(max_k: int = 3) -> list[Check]:
    out = []
    for gid in corpus.GENPROB_GROUPS:
        G = corpus.group(gid)
        Q = quotient(G, frattini_mask(G)).group
        for k in range(1, max_k + 1):
            a, b = gen_prob_exact(G, k), gen_prob_exact(Q, k)
            out.append(Check("P(G,k) = P(G/Phi(G),k)", f"{gid} k={k}", a == b, f"{_f(a)} vs {_f(b)}"))
    return out


def normal_chains(G) -> list[tuple[np.ndarray, np.ndarray]]:
    """All pairs (B, A) of normal subgroups of G with B <= A."""
    L = subgroup_lattice(G)
    normals = [L.masks[i] for i in L.normal_indices()]
    return [(B, A) for A in normals for B in normals if not (B & ~A).any()]


def suite_normal_generation(max_order: int = 16, kl=((1, 1), (2, 1))) -> list[Check]:
    """P^G(A, k + l) >= P^{G/B}(A/B, k) P^G(B, l) over chains B <= A of normal subgroups."""
    out = []
    for (n, i), G in all_small_groups(max_order):
        chains = normal_chains(G)
        bad, worst = 0, None
        for B, A in chains:
            Q = quotient(G, B)
            AB = Q.image(A)
            for k, l in kl:
                lhs = normal_gen_prob(G, A, k + l)
                rhs = normal_gen_prob(Q.group, AB, k) * normal_gen_prob(G, B, l)
                if lhs < rhs:
                    bad += 1
                    worst = (k, l, _f(lhs), _f(rhs))
        out.append(Check("normal generation product inequality", f"SmallGroup({n},{i})", bad == 0, f"{len(chains)} chains" + (f"; fails {worst}" if bad else "")))
    return out


# -- modules ------------------------------------------------------------------


def _ks(N, max_k: int = 3) -> list[int]:
    return [k for k in range(1, max_k + 1) if N.size**k <= ENUM_LIMIT]


def suite_module_genprob() -> list[Check]:
    out = []
    for name, N in corpus.modules():
        terms = head_data(N)
        for k in _ks(N):
            a, b = module_gen_prob(N, k, terms), module_gen_prob_enum(N, k)
            out.append(Check("product formula = enumeration", f"{name} k={k}", a == b, f"{_f(a)} vs {_f(b)}"))
    return out


def suite_min_generators() -> list[Check]:
    out = []
    for name, N in corpus.modules():
        terms = head_data(N)
        d = min_generators(N, terms)
        brute = min_generators_brute(N)
        least = next(k for k in range(0, N.dim + 2) if module_gen_prob(N, k, terms) > 0)
        out.append(Check("d(N) formula = brute force = least k with P > 0", name, d == brute == least, f"{d}, {brute}, {least}"))
    return out


def suite_pmsmg() -> list[Check]:
    """m_k(N) <= sum_{|S|=k} (|Hom(N,S)| - 1) <= k^d m_k(N), with m_k checked by enumeration."""
    out = []
    for name, N in corpus.modules():
        G, F = N.group, N.field
        C = corpus.census(G.name, F.q)
        terms = head_data(N)
        d = min_generators(N, terms)
        m = max_submodule_census(N, terms)
        sums = hom_growth_sum(N, C)
        ok, detail = True, []
        if N.size <= 2**12:
            enum = max_submodules_enum(N)
            ok &= enum == m
            detail.append(f"m_k enum {enum}")
        for k, s in sums.items():
            mk = m.get(k, 0)
            ok &= mk <= s <= k**d * mk
        detail.append(f"m_k {m}, sums {sums}, d={d}")
        out.append(Check("PMSMG sandwich", name, bool(ok), "; ".join(detail)))
    return out


def suite_restriction_index(seed: int = 0) -> list[Check]:
    """The t*c translates of t generators over left coset reps generate Res_H M.

    The index of the H-span of the t generators alone is reported alongside;
    it can exceed c^t for finite modules, so it is informational only.
    """
    out = []
    rng = np.random.default_rng(seed)
    for name, N in corpus.modules():
        G = N.group
        if G.order() == 1 or N.dim == 0:
            continue
        L = subgroup_lattice(G)
        t = min_generators(N)
        gens = None
        for _ in range(200):
            V = N.field.random((t, N.dim), rng)
            if len(N.spin(V)) == N.dim:
                gens = V
                break
        if gens is None:
            out.append(Check("restriction index bound", name, False, "no generating tuple found"))
            continue
        ok, notes = True, []
        for i in L.maximal:
            H = L.subgroup(i)
            c = G.order() // H.order()
            ok &= len(restriction_translates(N, H, L.masks[i], gens)) == N.dim
            notes.append(f"|H|={H.order()}: index {restriction_index(N, H, gens)} vs c^t={c**t}")
        out.append(Check("translates of t generators generate the restriction", name, bool(ok), f"t={t}; " + "; ".join(notes)))
    return out


# -- cohomology ---------------------------------------------------------------

BAR_GROUPS = (("C2", 2), ("C3", 3), ("C4", 2), ("V4", 2), ("S3", 2), ("S3", 3), ("Q8", 2), ("D8", 2), ("A4", 2), ("A4", 3), ("S4", 2), ("S4", 3))


def suite_bar_reduced() -> list[Check]:
    out = []
    for gid, p in BAR_GROUPS:
        G = corpus.group(gid)
        for c in corpus.census(gid, p):
            for n in (1, 2):
                a, b = h_dim(G, c.module, n), h_dim_bar(G, c.module, n)
                out.append(Check("reduced route = bar complex", f"{gid} F{p} {c.label} n={n}", a == b, f"{a} vs {b}"))
            dd = all(CochainSpace(G, c.module, n).check_dd() for n in (0, 1))
            out.append(Check("d o d = 0", f"{gid} F{p} {c.label}", dd))
    return out


def suite_ext_hdim() -> list[Check]:
    out = []
    for gid, p in corpus.RESOLUTION_CASES:
        G = corpus.group(gid)
        triv = trivial_module(G, gf(p))
        for c in corpus.census(gid, p):
            for n in (0, 1, 2):
                a, b = h_dim(G, c.module, n), ext_dim(triv, c, n)
                out.append(Check("h_dim = ext_dim(trivial, S, n)", f"{gid} F{p} {c.label} n={n}", a == b, f"{a} vs {b}"))
    return out


def suite_resolution_identity() -> list[Check]:
    """i_{K_{n-1}}(M) = h^n(G, M) for n = 1, 2, with h^n from the bar complex."""
    out = []
    for gid, p in corpus.RESOLUTION_CASES:
        G = corpus.group(gid)
        res = minimal_resolution(G, p, 2)
        ok_res = res.check_exact() and res.check_minimal()
        out.append(Check("resolution exact and minimal", f"{gid} F{p}", ok_res, f"dims {[P.dim for P in res.terms]}"))
        for c in corpus.census(gid, p):
            for n in (1, 2):
                K = res.kernel_modules[n - 1] if n - 1 < len(res.kernel_modules) else None
                i = i_mult(K, c.module, c.f) if K is not None and K.dim else 0
                h = h_dim_bar(G, c.module, n)
                out.append(Check("i_{K_{n-1}}(M) = h^n(G,M)", f"{gid} F{p} {c.label} n={n}", h % c.f == 0 and i == h // c.f, f"{i} vs {h}/{c.f}"))
    return out


def suite_les_bound() -> list[Check]:
    """sum (|Ext^1(N,S)| - 1) <= sum (|Hom(K,S)| - 1) per order, for 0 -> K -> P -> N -> 0."""
    out = []
    for name, N in corpus.modules():
        G, F = N.group, N.field
        if G.order() * F.q > 400 or N.dim == 0:
            continue
        C = corpus.census(G.name, F.q)
        cov = projective_cover(N)
        K = cov.P.submodule(cov.kernel) if len(cov.kernel) else None
        ext, hom = {}, {}
        for c in C:
            e = ext_dim(N, c, 1)
            h = hom_dim(K, c.module) if K is not None else 0
            ext[c.order] = ext.get(c.order, 0) + F.q**e - 1
            hom[c.order] = hom.get(c.order, 0) + F.q**h - 1
        ok = all(ext[k] <= hom[k] for k in ext)
        out.append(Check("long exact sequence bound", name, ok, f"ext {ext} hom {hom}"))
    return out


def suite_h1_decomposition() -> list[Check]:
    out = []
    for name, G, M in corpus.cohomology_pairs():
        D = h1_decomposition(G, M)
        out.append(Check("h1 = delta + h'", name, D.ok, str(D.as_tuple()[:3])))
    return out


def suite_coprime_vanishing() -> list[Check]:
    out = []
    for gid, p in (("A5", 7), ("S3", 5), ("C3", 2), ("A4", 5), ("SL25", 7)):
        G = corpus.group(gid)
        for c in corpus.census(gid, p):
            h = (h_dim(G, c.module, 1), h_dim(G, c.module, 2))
            out.append(Check("coprime vanishing", f"{gid} F{p} {c.label}", h == (0, 0), str(h)))
    return out


EXTENSION_CASES = (("C2", 2), ("C4", 2), ("V4", 2), ("C3", 3), ("S3", 2), ("S3", 3), ("D8", 2), ("Q8", 2), ("A4", 2), ("A5", 2))


def suite_extensions() -> list[Check]:
    """Each class of H^2 gives an extension of order |G||M| that splits exactly for the zero class."""
    out = []
    for gid, p in EXTENSION_CASES:
        G = corpus.group(gid)
        for c in corpus.census(gid, p):
            if G.order() * c.order > 10_000:
                continue
            reps = h2_class_reps(G, c.module)
            flags = []
            for f in reps:
                E, split = extension_from_cocycle(G, c.module, f)
                flags.append(split if E.order() == G.order() * c.order else None)
            ok = flags[0] is True and all(s is False for s in flags[1:])
            h2 = h_dim(G, c.module, 2)
            ok &= len(reps) == c.module.field.q**h2
            out.append(Check("nonsplit extensions = nonzero H^2 classes", f"{gid} F{p} {c.label}", ok, f"h2={h2}, split flags {flags}"))
    return out


# -- towers -------------------------------------------------------------------


def suite_tensor_census() -> list[Check]:
    out = []
    s3 = TowerSpec.powers("S3", [1, 2])
    c = level_census(s3, 1, 2)
    chop = chop_counts(c)
    out.append(Check("tensor census = direct chop", "S3xS3 p=2", chop == c.counts, f"{c.counts} vs {chop}"))
    a5 = TowerSpec.powers("A5", [1, 2])
    for p in (2, 3):
        c = level_census(a5, 1, p)
        chk = check_tensor_census(c)
        out.append(Check("tensor census = level group census", f"A5xA5 p={p}", chk.ok, str(chk)))
    c = level_census(a5, 1, 2)
    rule, direct = h1_series(c), direct_h1_series(c)
    out.append(Check("H1 product rule = direct computation", "A5xA5 p=2", rule == direct, f"{rule} vs {direct}"))
    return out


# -- sampling -----------------------------------------------------------------


def suite_mc_consistency(trials: int = 10_000, seed: int = corpus.MC_SEED, z: float = 4.0) -> list[Check]:
    out = []
    task = itertools.count()
    for gid in corpus.GENPROB_GROUPS:
        G = corpus.group(gid)
        for k in (1, 2, 3):
            exact = gen_prob_exact(G, k)
            est = gen_prob_mc(G, k, trials, seed, next(task))
            out.append(Check("group MC within 4 sigma", f"{gid} k={k}", est.within(exact, z), f"{est.successes}/{trials} vs {_f(exact)}"))
    for name, N in corpus.modules():
        terms = head_data(N)
        for k in (1, 2):
            exact = module_gen_prob(N, k, terms)
            est = module_gen_prob_mc(N, k, trials, seed, next(task))
            out.append(Check("module MC within 4 sigma", f"{name} k={k}", est.within(exact, z), f"{est.successes}/{trials} vs {_f(exact)}"))
    return out


SUITES: dict[str, Callable[[], list[Check]]] = {
    "mobius": suite_mobius,
    "genprob-oracle": suite_genprob_oracle,
    "frattini-quotient": suite_frattini_quotient,
    "normal-generation": suite_normal_generation,
    "module-genprob": suite_module_genprob,
    "min-generators": suite_min_generators,
    "pmsmg": suite_pmsmg,
    "restriction-index": suite_restriction_index,
    "bar-reduced": suite_bar_reduced,
    "ext-hdim": suite_ext_hdim,
    "resolution-identity": suite_resolution_identity,
    "les-bound": suite_les_bound,
    "h1-decomposition": suite_h1_decomposition,
    "extensions": suite_extensions,
    "coprime-vanishing": suite_coprime_vanishing,
    "tensor-census": suite_tensor_census,
    "mc-consistency": suite_mc_consistency,
}


def run_suite(name: str) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    return SuiteReport(name, SUITES[name]())
