"""The twelve acceptance criteria, each at its stated runtime budget."""

import time

from conftest import ACCEPTANCE
from progen import corpus
from progen.cohom import extension_from_cocycle, h2_ratio_report, nonsplit_cocycle, schur_p_rank
from progen.ffalg import gf
from progen.groups import GroupHom, gen_prob_exact, is_frattini_cover, named_group, psl25_on_lines, sl25
from progen.modrep import trivial_module
from progen.tower import TowerSpec, direct_h1_series, growth_report, h1_series, level_census
from progen.verify import run_suite


def record(n: int, title: str, ok: bool, seconds: float, budget: float | None, detail: str = "") -> None:
    """Print and keep one summary line; budget None means no stated runtime limit."""
    within = budget is None or seconds <= budget
    status = "PASS" if ok and within else "FAIL"
    limit = f" / {budget:.0f}s" if budget is not None else ""
    line = f"criterion {n}: {status}  {title}  ({seconds:.1f}s{limit})"
    if detail:
        line += f"  {detail}"
    print(line)
    ACCEPTANCE.append(line)
    assert ok, detail
    assert within, f"runtime {seconds:.1f}s over the {budget:.0f}s budget"


def suite(name: str):
    t = time.perf_counter()
    report = run_suite(name)
    failed = [c for c in report.checks if not c.ok]
    detail = f"{len(report.checks)} checks, {len(failed)} failed"
    if failed:
        detail += f"; first: {failed[0].instance} {failed[0].detail}"
    return report, time.perf_counter() - t, detail


def test_c01_generation_oracle():
    report, dt, detail = suite("genprob-oracle")
    groups = {c.instance.split()[0] for c in report.checks}
    ks = {c.instance.split()[1] for c in report.checks}
    ok = report.passed and ks == {"k=1", "k=2", "k=3"}
    ok &= all(corpus.group(g).order() <= 48 for g in groups)
    ok &= {"S3", "A4", "S4", "Q8", "C2xC2", "C2xC4", "D8"} <= groups
    record(1, "gen_prob_exact = exhaustive tuple counting", ok, dt, 60, detail)


def test_c02_product_formula():
    report, dt, detail = suite("module-genprob")
    names = {c.instance.rsplit(" k=", 1)[0] for c in report.checks}
    ok = report.passed and len(names) >= 20 and "C3 2-dim F2 (q_M=4)" in names
    record(2, "module_gen_prob = enumeration", ok, dt, 120, f"{len(names)} modules; {detail}")


def test_c03_min_generators():
    report, dt, detail = suite("min-generators")
    record(3, "d(N) formula = brute force = least k", report.passed, dt, 60, detail)


def test_c04_pmsmg():
    report, dt, detail = suite("pmsmg")
    enumerated = sum("m_k enum" in c.detail for c in report.checks)
    ok = report.passed and len(report.checks) >= 10 and enumerated >= 10
    record(4, "PMSMG sandwich", ok, dt, None, f"{enumerated} with enumerated m_k; {detail}")


def test_c05_resolution_identity():
    report, dt, detail = suite("resolution-identity")
    groups = {c.instance.split()[0] for c in report.checks}
    ok = report.passed and {"C2", "C3", "S3", "A4"} <= groups
    record(5, "i_{K_{n-1}}(M) = h^n(G,M) via the bar complex", ok, dt, None, detail)


def test_c06_h1_decomposition():
    report, dt, detail = suite("h1-decomposition")
    groups = {c.instance.split()[0] for c in report.checks}
    ok = report.passed and len(report.checks) >= 15 and "A5" in groups and "S4" in groups
    record(6, "h^1 = delta + h'", ok, dt, None, detail)


def test_c07_coprime_vanishing():
    report, dt, detail = suite("coprime-vanishing")
    inst = [c.instance for c in report.checks]
    ok = report.passed and any(i.startswith("A5 F7") for i in inst) and any(i.startswith("S3 F5") for i in inst)
    record(7, "h^1 = h^2 = 0 in coprime characteristic", ok, dt, None, detail)


def test_c08_frattini_schur_cover():
    t = time.perf_counter()
    S = sl25()
    P, _ = psl25_on_lines()
    f = GroupHom(S, P, P.gens)
    cover = P.order() == 60 and f.kernel_mask().sum() == 2 and is_frattini_cover(f)
    A5 = named_group("A5")
    probs = {k: (gen_prob_exact(S, k), gen_prob_exact(A5, k)) for k in (2, 3)}
    equal = all(a == b for a, b in probs.values())
    rank = schur_p_rank(A5, 2)
    M = trivial_module(A5, gf(2))
    E, split = extension_from_cocycle(A5, M, nonsplit_cocycle(A5, M))
    ext_ok = E.order() == 120 and not split and int((E.element_orders == 2).sum()) == 1
    ok = cover and equal and rank == 1 and ext_ok
    detail = f"kernel in Phi: {cover}; P(k=2,3) {[str(a) for a, _ in probs.values()]}; schur 2-rank {rank}; nonsplit order-{E.order()} extension: {ext_ok}"
    record(8, "SL(2,5) -> A5 is a Frattini cover", ok, time.perf_counter() - t, 600, detail)


def test_c09_h2_ratio_bound():
    t = time.perf_counter()
    r = h2_ratio_report(sl25(), 2, max_dim=4)
    ok = len(r.ratios) >= 3 and r.max_ratio <= 3
    record(9, "dim H^2 / dim M <= 3 for SL(2,5), p = 2", ok, time.perf_counter() - t, 900, f"max ratio {r.max_ratio}")


def test_c10_normal_generation():
    report, dt, detail = suite("normal-generation")
    record(10, "normal generation product inequality, |G| <= 16", report.passed and len(report.checks) == 42, dt, None, detail)


def test_c11_tower_dichotomy():
    t = time.perf_counter()
    spec = TowerSpec.powers("A5", [1, 2, 3, 4])
    coprime = growth_report(spec, 7)
    totals = coprime.totals()
    zero = all(r.h1_sum.is_zero() and r.h1_nonzero.is_zero() for r in coprime.levels)
    increasing = all(a < b for a, b in zip(totals, totals[1:]))
    modular = growth_report(spec, 2)
    rule = all((r.h1_sum.counts, r.h1_nonzero.counts) == tuple(h1_series(r.census)) for r in modular.levels)
    direct = all(h1_series(level_census(spec, L, 2)) == direct_h1_series(level_census(spec, L, 2)) for L in (0, 1))
    nonzero_p2 = all(not r.h1_sum.is_zero() for r in modular.levels)
    ok = zero and increasing and rule and direct and nonzero_p2
    detail = f"p=7 totals {totals}, H1 zero {zero}; p=2 product rule = direct at m<=2: {direct}"
    record(11, "tower dichotomy for A5^m", ok, time.perf_counter() - t, 600, detail)


def test_c12_monte_carlo():
    report, dt, detail = suite("mc-consistency")
    record(12, f"Monte-Carlo within 4 sigma (seed {corpus.MC_SEED})", report.passed, dt, 300, detail)
