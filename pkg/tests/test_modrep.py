from collections import Counter
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from progen import corpus
from progen.ffalg import gf
from progen.groups import named_group
from progen.modrep import (
    GModule,
    composition_factors,
    endo_degree,
    format_module,
    head_data,
    hom_dim,
    irr_census,
    is_irreducible,
    is_iso,
    load_module,
    max_submodule_census,
    max_submodules_enum,
    min_generators,
    min_generators_brute,
    minimal_resolution,
    module_census,
    module_gen_prob,
    module_gen_prob_brute,
    module_gen_prob_enum,
    parse_module,
    permutation_module,
    projective_cover,
    regular_module,
    trivial_module,
)

# (dim, |End|) per irreducible, from the modular character tables
CENSUS = {
    ("A5", 2): [(1, 2), (4, 2), (4, 4)],
    ("A5", 4): [(1, 4), (2, 4), (2, 4), (4, 4)],
    ("A5", 3): [(1, 3), (4, 3), (6, 9)],
    ("A5", 5): [(1, 5), (3, 5), (5, 5)],
    ("S4", 2): [(1, 2), (2, 2)],
    ("S4", 3): [(1, 3), (1, 3), (3, 3), (3, 3)],
    ("C3", 2): [(1, 2), (2, 4)],
    ("C5", 2): [(1, 2), (4, 16)],
    ("Q8", 2): [(1, 2)],
    ("SL25", 5): [(1, 5), (2, 5), (3, 5), (4, 5), (5, 5)],
}


@pytest.mark.parametrize("key", sorted(CENSUS))
def test_census_matches_character_tables(key):
    gid, q = key
    C = corpus.census(gid, q)
    assert sorted((c.dim, c.endo_size) for c in C) == sorted(CENSUS[key])
    # over the splitting field, classes count p-regular conjugacy classes
    assert sum(c.f for c in C) == corpus.group(gid).conjugacy_class_count(C.prime)


def test_census_modules_irreducible_and_distinct():
    C = corpus.census("A5", 4)
    for c in C:
        assert is_irreducible(c.module)
        assert endo_degree(c.module) == c.f
    for i, a in enumerate(C):
        for b in list(C)[i + 1 :]:
            assert not is_iso(a.module, b.module)


def test_census_is_deterministic():
    G = named_group("S4")
    a = [c.label for c in irr_census(G, 3, seed=0)]
    b = [c.label for c in irr_census(G, 3, seed=7)]
    assert a == b


def test_composition_factors_of_regular_module():
    G = named_group("S3")
    factors = composition_factors(regular_module(G, gf(2)))
    # over F2 the trivial and the 2-dim module each occur twice
    assert Counter(M.dim for M in factors) == Counter({1: 2, 2: 2})


def test_module_census_multiplicities():
    N = corpus.irr("S3", 2, 2).power(3) + trivial_module(named_group("S3"), gf(2))
    mult = sorted((c.dim, m) for c, m in module_census(N))
    assert mult == [(1, 1), (2, 3)]


def test_hom_dims():
    G = named_group("S4")
    F = gf(3)
    T = trivial_module(G, F)
    P = permutation_module(G, F)
    assert hom_dim(T, P) == 1 and hom_dim(P, T) == 1
    assert hom_dim(regular_module(G, F), T) == 1
    M = corpus.irr("C3", 2, 2)
    assert hom_dim(M, M) == 2


def test_known_module_probabilities():
    # C3 on F4 viewed over F2: q_M = 4, |M| = 4
    M = corpus.irr("C3", 2, 2)
    assert module_gen_prob(M, 1) == Fraction(3, 4)
    assert module_gen_prob(M.power(2), 1) == 0
    assert module_gen_prob(M.power(2), 2) == (1 - Fraction(1, 16)) * (1 - Fraction(4, 16))
    assert module_gen_prob(trivial_module(named_group("S3"), gf(2)).power(3), 3) == Fraction(21, 64)


@pytest.mark.parametrize("name,N", corpus.modules()[:14], ids=[n for n, _ in corpus.modules()[:14]])
def test_product_formula_vs_enumeration(name, N):
    for k in (1, 2):
        if N.size**k <= 2**16:
            assert module_gen_prob(N, k) == module_gen_prob_enum(N, k)


def test_product_formula_vs_brute():
    for N in (corpus.irr("C3", 2, 2), corpus.irr("S3", 2, 2) + trivial_module(named_group("S3"), gf(2))):
        assert module_gen_prob(N, 2) == module_gen_prob_brute(N, 2)


def test_min_generators():
    for name, N in corpus.modules()[:16]:
        assert min_generators(N) == min_generators_brute(N), name


def test_maximal_submodule_counts():
    for name, N in corpus.modules()[:12]:
        assert max_submodule_census(N) == max_submodules_enum(N), name


def test_resolution_exact_and_minimal():
    G = named_group("S3")
    res = minimal_resolution(G, 2, 2)
    assert res.check_exact() and res.check_minimal()
    # periodic resolution of the trivial F2 S3-module: P_i are the trivial PIM
    assert [P.dim for P in res.terms] == [2, 2, 2]
    res3 = minimal_resolution(G, 3, 2)
    assert res3.check_exact() and res3.check_minimal()


def test_projective_cover_of_projective_is_itself():
    G = named_group("A4")
    R = regular_module(G, gf(2))
    cov = projective_cover(R)
    assert cov.P.dim == R.dim and len(cov.kernel) == 0


def test_module_io_round_trip(tmp_path):
    M = corpus.irr("A4", 2, 2)
    text = format_module(M, "A4")
    N = parse_module(text)
    assert N.field.q == M.field.q and all((a == b).all() for a, b in zip(N.mats, M.mats))
    path = tmp_path / "m.mod"
    path.write_text(text)
    assert load_module(path).dim == 2


def test_module_io_rejects_bad_input():
    with pytest.raises(ValueError):
        parse_module("group S3 q 2 dim 2\n")
    with pytest.raises(ValueError):
        parse_module("group S3 dim 2\n")


def test_non_action_rejected():
    G = named_group("S3")
    F = gf(2)
    # an involution for the 3-cycle breaks a^3 = 1
    bad = [np.array([[0, 1], [1, 0]], np.uint8), np.array([[1, 0], [0, 1]], np.uint8)]
    with pytest.raises(ValueError):
        GModule(G, F, bad)


@settings(max_examples=15, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=1, max_size=4))
def test_direct_sum_census_is_multiset_union(picks):
    C = corpus.census("A4", 2)
    parts = [list(C)[i % len(C)].module for i in picks]
    N = parts[0]
    for P in parts[1:]:
        N = N + P
    got = Counter({c.label: m for c, m in module_census(N)})
    want = Counter(list(C)[i % len(C)].label for i in picks)
    assert got == want
    assert sum(M.dim for M in composition_factors(N)) == N.dim


@settings(max_examples=15, deadline=None)
@given(st.integers(1, 3), st.integers(1, 3))
def test_gen_prob_monotone_in_k(m, k):
    N = corpus.irr("S3", 2, 2).power(m)
    assert module_gen_prob(N, k) <= module_gen_prob(N, k + 1)
    assert (module_gen_prob(N, k) > 0) == (k >= min_generators(N))
