import json
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from progen.cohom import h_dim
from progen.groups import named_group
from progen.tower import (
    GrowthSeries,
    InsufficientData,
    TowerSpec,
    TowerSpecError,
    check_tensor_census,
    chop_counts,
    direct_h1_series,
    growth_report,
    h1_product_rule,
    h1_series,
    level_census,
    slope_fit,
)
from progen.tower.census import factor_data


def test_spec_round_trip():
    s = TowerSpec.powers("A5", [1, 2, 3])
    assert TowerSpec.from_json(s.to_json()) == s
    assert s.level_order(2) == 60**3
    assert s.positions(1) == ["A5", "A5"]
    d = {"levels": [[{"factor": "S3", "mult": 1}], [{"factor": "S3", "mult": 1}, {"factor": "A5", "mult": 1}]]}
    assert TowerSpec.from_dict(d).level_order(1) == 360


@pytest.mark.parametrize(
    "bad",
    [
        {"levels": [[{"factor": "NOPE", "mult": 1}]]},
        {"levels": [[{"factor": "A5", "mult": 0}]]},
        {"levels": [[{"factor": "A5", "mult": 2}], [{"factor": "A5", "mult": 1}]]},
        {"levels": [[{"factor": "A5", "mult": 1}], [{"factor": "S3", "mult": 1}]]},
        {"levels": "A5"},
        {},
    ],
)
def test_spec_validation(bad):
    with pytest.raises(TowerSpecError):
        TowerSpec.from_dict(bad)


def test_single_factor_census_unchanged():
    c = level_census(TowerSpec.powers("A5", [1]), 0, 2)
    # F4 splits A5 in characteristic 2
    assert c.Q == 4 and c.counts == {4: 1, 16: 2, 256: 1}


def test_all_trivial_class_unique():
    for m in (1, 2, 3):
        c = level_census(TowerSpec.powers("S3", [m]), 0, 2)
        assert c.by_dim()[1] == 1


def test_s3_squared_chop():
    c = level_census(TowerSpec.powers("S3", [1, 2]), 1, 2)
    assert chop_counts(c) == c.counts


@pytest.mark.parametrize("p", [2, 3])
def test_a5_squared_census(p):
    c = level_census(TowerSpec.powers("A5", [1, 2]), 1, p)
    chk = check_tensor_census(c)
    assert chk.ok
    assert c.total == named_group("A5").conjugacy_class_count(p) ** 2


def test_product_rule():
    spec = TowerSpec.powers("A5", [1, 2])
    c = level_census(spec, 1, 2)
    fd = factor_data("A5", c.Q)
    triv = fd.trivial
    nontriv = [i for i in range(len(fd.census)) if i != triv]
    assert h1_product_rule(c, (triv, triv)) == 0
    for i in nontriv:
        assert h1_product_rule(c, (i, triv)) == fd.h1[i]
        assert h1_product_rule(c, (triv, i)) == fd.h1[i]
    assert h1_product_rule(c, (nontriv[0], nontriv[0])) == 0
    two = [i for i in nontriv if fd.census.classes[i].dim == 2][0]
    G = named_group("A5")
    assert fd.h1[two] == h_dim(G, fd.census.classes[two].module, 1) == 1
    with pytest.raises(ValueError):
        h1_product_rule(c, (triv,))


def test_product_rule_matches_direct():
    c = level_census(TowerSpec.powers("A5", [1, 2]), 1, 2)
    assert h1_series(c) == direct_h1_series(c)


def test_growth_report_coprime():
    rep = growth_report(TowerSpec.powers("A5", [1, 2, 3, 4]), 7)
    assert rep.totals() == [5, 25, 125, 625]
    for r in rep.levels:
        assert r.h1_sum.is_zero() and r.h1_nonzero.is_zero()


def test_growth_report_char_two():
    rep = growth_report(TowerSpec.powers("A5", [1, 2, 3, 4]), 2)
    for m, r in enumerate(rep.levels, start=1):
        # per position: the two 2-dim F4 classes, each with h^1 = 1 over F4
        assert {k: v for k, v in r.h1_nonzero.counts.items() if v} == {16: 2 * m}
        assert r.h1_sum.counts[16] == 6 * m


def test_report_outputs():
    rep = growth_report(TowerSpec.powers("A5", [1, 2]), 2)
    lines = rep.to_csv().splitlines()
    assert lines[0] == "level,prime,order,total,h1_sum,h1_nonzero"
    assert len(lines) == 1 + len(rep.rows())
    plot = rep.plot_data()
    assert plot.count("# level") == 2
    # the product rule needs perfect factors
    with pytest.raises(ValueError):
        growth_report(TowerSpec.powers("S3", [1]), 2)


def test_slope_fit_polynomial():
    s = GrowthSeries({k: k * k - (k - 1) ** 2 for k in range(2, 4097)})
    slope, flag = slope_fit(s)
    assert abs(slope - 2) < 0.1 and not flag
    s = GrowthSeries({2**i: 4**i for i in range(1, 40)})
    slope, flag = slope_fit(s)
    assert abs(slope - 2) < 0.1 and not flag


def test_slope_fit_superpolynomial():
    s = GrowthSeries({k: int(2 ** math.sqrt(k)) for k in range(2, 400)})
    assert slope_fit(s)[1]


def test_slope_fit_constant():
    s = GrowthSeries({1: 5, **{k: 0 for k in range(2, 1000)}})
    slope, flag = slope_fit(s)
    assert abs(slope) < 0.1 and not flag


def test_slope_fit_needs_data():
    with pytest.raises(InsufficientData):
        slope_fit(GrowthSeries({2: 1, 4: 1}))
    with pytest.raises(ValueError):
        GrowthSeries({2: -1}).cumulative()


@settings(max_examples=25, deadline=None)
@given(st.floats(0.5, 4.0), st.integers(8, 16))
def test_slope_fit_recovers_exponents(a, bits):
    # cumulative count k^a sampled at every integer order
    ks = range(2, 2**bits)
    counts = {k: math.ceil(k**a) - math.ceil((k - 1) ** a) for k in ks}
    counts[2] += 1
    slope, flag = slope_fit(GrowthSeries(counts))
    assert abs(slope - a) < 0.15
    assert not flag


@settings(max_examples=10, deadline=None)
@given(st.lists(st.sampled_from(["S3", "A5", "C2"]), min_size=1, max_size=3))
def test_census_total_multiplicative(factors):
    levels = [[{"factor": f, "mult": 1} for f in factors]]
    spec = TowerSpec.from_dict({"levels": levels})
    c = level_census(spec, 0, 2)
    expect = 1
    for f in factors:
        expect *= named_group(f).conjugacy_class_count(2)
    assert c.total == expect
    assert json.loads(spec.to_json()) == spec.to_dict()
