import pytest
from hypothesis import given, settings

from conftest import brute_isomorphic, knots, links
from freeknot.diagram import even_self_chords, serialize
from freeknot.invariant import (
    GammaGraph,
    InvariantValue,
    LinearCombination,
    delta,
    delta_n,
    gamma_graph,
    i_n,
    i_n_raw,
    i_of_combination,
    i_of_diagram,
    j_number,
    smoothing_sequences,
    split_smooth,
)
from freeknot.moves import apply_r1, apply_r2, apply_r3, find_r1_sites, find_r2_sites, find_r3_sites


def test_split_smooth_examples(D):
    assert serialize(split_smooth(D("1 1"), "1")) == "- | -"
    assert serialize(split_smooth(D("1 2 3 1 2 3"), "1")) == "2 3 | 2 3"
    assert serialize(split_smooth(D("1 2 1 2"), "1")) == "2 | 2"


def test_split_smooth_mixed(D):
    with pytest.raises(ValueError):
        split_smooth(D("1 | 1"), "1")


@given(links())
def test_split_adds_one_circle(d):
    for c in d.labels:
        if d.is_self_chord(c):
            out = split_smooth(d, c)
            assert out.num_circles == d.num_circles + 1
            assert c not in out.ends


def test_linear_combination_cancels(D):
    x = LinearCombination([D("1 2 1 2"), D("2 1 2 1"), D("1 1")])
    assert len(x) == 1
    assert x.diagrams() == [D("1 1")]
    assert not (x + x)
    assert LinearCombination() + x == x


def test_linear_combination_json(D):
    x = LinearCombination([D("1 1"), D("- | -")])
    data = x.to_json()
    assert {"diagram": "1 1", "count_mod2": 1} in data
    assert LinearCombination.from_json(data) == x


def test_delta_examples(D):
    assert not delta(D("1 2 1 2"))
    assert [serialize(d) for d in delta(D("1 1")).diagrams()] == ["- | -"]
    out = delta(D("1 2 3 1 2 3"))
    assert [serialize(d) for d in out.diagrams()] == ["2 3 | 2 3"]


def test_delta_n_examples(D):
    assert not delta_n(D("1 1"), 2)
    with pytest.raises(ValueError):
        delta_n(D("1 1"), 0)


@given(links(max_chords=5), links(max_chords=5))
@settings(max_examples=50)
def test_delta_is_linear(a, b):
    x, y = LinearCombination([a]), LinearCombination([b])
    assert delta(x + y) == delta(x) + delta(y)
    assert not delta(LinearCombination())


@given(links(max_chords=5))
@settings(max_examples=50)
def test_delta_terms_are_smoothings(d):
    """Each surviving class is represented by an odd number of raw smoothings."""
    raw = [split_smooth(d, c) for c in even_self_chords(d)]
    for e in delta(d).diagrams():
        assert sum(brute_isomorphic(e, r) for r in raw) % 2 == 1


def test_gamma_examples(D):
    assert gamma_graph(D("2 | 2")) == GammaGraph(2, frozenset({(0, 1)}))
    assert gamma_graph(D("2 3 | 2 3")) == GammaGraph(2, frozenset())
    assert gamma_graph(D("1 2 | 1 3 | 2 3")).edges == {(0, 1), (0, 2), (1, 2)}


def test_gamma_dot(D):
    dot = gamma_graph(D("2 | 2")).to_dot()
    assert dot.startswith("graph Gamma {")
    assert "0 -- 1;" in dot


def test_j_number(D):
    assert j_number(D("2 | 2")) == 1
    assert j_number(D("2 3 | 2 3")) == 0
    assert j_number(D("1 2 | 1 3 | 2 3")) == 3
    assert j_number(D("1 2 1 2")) == 0
    assert j_number(D("1 | 1 | -")) == 0


def test_i_of_diagram(D):
    assert i_of_diagram(D("2 | 2")) == InvariantValue(frozenset({1}))
    assert i_of_diagram(D("1 2 1 2")) == InvariantValue()
    assert i_of_diagram(D("1 2 | 1 3 | 2 3")).to_json() == {"support": [3]}


def test_invariant_value_algebra():
    a = InvariantValue(frozenset({1, 4}))
    assert (a + a).to_json() == {"support": []}
    assert InvariantValue.from_json({"support": [4, 1]}) == a
    assert str(a) == "a1 + a4"
    with pytest.raises(ValueError):
        InvariantValue(frozenset({0}))


def test_i_n_examples(D):
    assert i_n(D("1 2 3 1 2 3"), 1) == InvariantValue()
    for n in (1, 2, 3, 4):
        assert i_n(D("-"), n) == InvariantValue()
    with pytest.raises(ValueError):
        i_n(D("1 | 1"), 1)


@given(knots(max_chords=7))
@settings(max_examples=40)
def test_dedup_matches_raw(d):
    for n in (1, 2, 3):
        assert i_n(d, n) == i_n_raw(d, n)


def test_smoothing_sequences_count(D):
    # three even chords; each smoothing leaves "x y | x y" with no self-chords
    assert [s for s, _ in smoothing_sequences(D("1 2 3 1 2 3"), 1)] == [("1",), ("2",), ("3",)]
    assert list(smoothing_sequences(D("1 2 3 1 2 3"), 2)) == []


@given(knots(max_chords=7))
@settings(max_examples=40, deadline=None)
def test_i_n_invariant_under_r3(d):
    base = [i_n(d, n) for n in (1, 2, 3)]
    for site in find_r3_sites(d):
        assert [i_n(apply_r3(d, site), n) for n in (1, 2, 3)] == base


@given(knots(max_chords=7))
@settings(max_examples=40, deadline=None)
def test_i_n_invariant_under_r1_r2(d):
    base = [i_n(d, n) for n in (1, 2, 3)]
    for site in find_r1_sites(d):
        assert [i_n(apply_r1(d, site), n) for n in (1, 2, 3)] == base
    for site in find_r2_sites(d):
        assert [i_n(apply_r2(d, site), n) for n in (1, 2, 3)] == base


@given(links(max_chords=6, max_circles=3))
def test_gamma_invariant_under_moves(d):
    g = gamma_graph(d)
    for site in find_r1_sites(d):
        assert gamma_graph(apply_r1(d, site)) == g
    for site in find_r2_sites(d):
        assert gamma_graph(apply_r2(d, site)) == g
    for site in find_r3_sites(d):
        assert gamma_graph(apply_r3(d, site)) == g


def test_witness(D):
    from freeknot.knots import WITNESS

    d = D(WITNESS)
    assert [len(delta_n(d, n)) for n in (1, 2, 3)] == [3, 2, 2]
    assert i_n(d, 3).to_json() == {"support": [4]}
    assert not i_n(d, 1) and not i_n(d, 2)
    assert i_n(d, 3) == i_n_raw(d, 3)
