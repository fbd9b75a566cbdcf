from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy.combinatorics import Permutation, PermutationGroup

from progen import corpus
from progen.groups import (
    GroupHom,
    PermGroup,
    all_small_groups,
    chief_series,
    format_group,
    frattini_mask,
    gen_prob_brute,
    gen_prob_enum,
    gen_prob_exact,
    gen_prob_mc,
    is_frattini_cover,
    load_group,
    named_group,
    normal_gen_prob,
    normal_gen_prob_brute,
    parse_group,
    power,
    psl25_on_lines,
    quotient,
    sl25,
    subgroup_lattice,
)

NAMES = ["C1", "C6", "D8", "D10", "S3", "S4", "A4", "A5", "Q8", "V4", "C2xC4", "SL25"]


def _sympy(G: PermGroup) -> PermutationGroup:
    return PermutationGroup([Permutation(list(map(int, g))) for g in G.gens] or [Permutation(list(range(max(G.degree, 1))))])


@pytest.mark.parametrize("name", NAMES)
def test_order_matches_sympy(name):
    G = named_group(name)
    assert G.order() == _sympy(G).order()
    assert len(G.elements) == G.order()


@pytest.mark.parametrize("name", ["S3", "S4", "A4", "A5", "D8", "Q8", "SL25"])
def test_class_count_matches_sympy(name):
    G = named_group(name)
    assert G.conjugacy_class_count() == len(_sympy(G).conjugacy_classes())


def test_p_regular_class_counts():
    # frozen from a brute orbit count over element orders
    expect = {"S3": (3, 2, 2), "A5": (5, 4, 4), "S4": (5, 2, 4), "SL25": (9, 4, 7)}
    for name, (c, c2, c3) in expect.items():
        G = named_group(name)
        assert (G.conjugacy_class_count(), G.conjugacy_class_count(2), G.conjugacy_class_count(3)) == (c, c2, c3)


def test_table_is_group_law():
    G = named_group("S4")
    T = G.table
    n = G.order()
    assert (T[0] == np.arange(n)).all() and (T[:, 0] == np.arange(n)).all()
    a, b, c = np.random.default_rng(1).integers(0, n, (3, 200))
    assert (T[T[a, b], c] == T[a, T[b, c]]).all()
    assert (T[np.arange(n), G.inverse_index] == 0).all()


def test_known_generation_probabilities():
    assert gen_prob_exact(named_group("S3"), 2) == Fraction(1, 2)
    assert gen_prob_exact(named_group("A5"), 2) == Fraction(19, 30)
    assert gen_prob_exact(named_group("V4"), 2) == Fraction(3, 8)
    assert gen_prob_exact(named_group("C6"), 1) == Fraction(1, 3)
    assert gen_prob_exact(named_group("C1"), 1) == 1


@pytest.mark.parametrize("name", ["C4", "S3", "D8", "Q8", "A4", "C2xC4"])
@pytest.mark.parametrize("k", [1, 2])
def test_genprob_routes_agree(name, k):
    G = named_group(name)
    assert gen_prob_exact(G, k) == gen_prob_enum(G, k) == gen_prob_brute(G, k)


def test_mobius_lattice():
    for name in ("S3", "S4", "A4", "D8", "Q8"):
        L = subgroup_lattice(named_group(name))
        assert L.check_mobius()
    assert len(subgroup_lattice(named_group("S4")).orders) == 30


def test_frattini_subgroups():
    assert frattini_mask(named_group("Q8")).sum() == 2
    assert frattini_mask(named_group("D8")).sum() == 2
    assert frattini_mask(named_group("S4")).sum() == 1
    assert frattini_mask(named_group("C4")).sum() == 2
    assert frattini_mask(sl25()).sum() == 2


def test_frattini_quotient_preserves_probability():
    for name in ("Q8", "D8", "C8", "SL25"):
        G = named_group(name)
        Q = quotient(G, frattini_mask(G)).group
        for k in (2, 3):
            assert gen_prob_exact(G, k) == gen_prob_exact(Q, k)


def test_sl25_cover():
    S = sl25()
    P, line_of = psl25_on_lines()
    f = GroupHom(S, P, P.gens)
    assert P.order() == 60 and is_frattini_cover(f)
    assert f.kernel_mask().sum() == 2


def test_hom_rejects_non_homomorphism():
    S = named_group("S3")
    C = named_group("C3")
    with pytest.raises(ValueError):
        GroupHom(S, C, [C.gens[0]] * S.ngens).element_images


def test_chief_series_orders():
    cs = chief_series(named_group("S4"))
    assert sorted(f.order for f in cs.factors) == [2, 3, 4]
    cs = chief_series(named_group("A5"))
    assert [f.order for f in cs.factors] == [60]


def test_normal_generation_brute():
    G = named_group("S4")
    A = G.derived_mask()
    for k in (1, 2):
        assert normal_gen_prob(G, A, k) == normal_gen_prob_brute(G, A, k)


def test_small_group_counts():
    groups = all_small_groups(16)
    by_order: dict[int, int] = {}
    for (n, _), _G in groups:
        by_order[n] = by_order.get(n, 0) + 1
    # numbers of groups of each order up to 16
    assert [by_order[n] for n in range(1, 17)] == [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14]


def test_power_and_corpus():
    assert power(named_group("S3"), 3).order() == 216
    assert all(corpus.group(g).order() <= 48 for g in corpus.GENPROB_GROUPS)


def test_group_io_round_trip(tmp_path):
    G = named_group("D10")
    text = format_group(G)
    H = parse_group(text, "D10")
    assert H.order() == 10 and [list(g) for g in H.gens] == [list(g) for g in G.gens]
    path = tmp_path / "d10.grp"
    path.write_text("# dihedral\n" + text)
    assert load_group(str(path)).order() == 10
    with pytest.raises(ValueError):
        parse_group("degree 3\n(1,2,7)\n", "bad")


def test_mc_deterministic_and_consistent():
    G = named_group("S3")
    a = gen_prob_mc(G, 2, 4000, seed=5)
    b = gen_prob_mc(G, 2, 4000, seed=5)
    assert a.successes == b.successes
    assert a.within(gen_prob_exact(G, 2))


@settings(max_examples=25, deadline=None)
@given(st.lists(st.permutations(range(5)), min_size=1, max_size=3))
def test_random_subgroups_of_s5(perms):
    G = PermGroup([list(p) for p in perms], degree=5)
    n = G.order()
    assert 120 % n == 0
    assert n == _sympy(G).order()
    assert gen_prob_exact(G, 3) <= 1
    # adding a generator never shrinks the probability
    assert gen_prob_exact(G, 2) <= gen_prob_exact(G, 3)
