import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import knots
from freeknot.diagram import enumerate_knots, even_self_chords
from freeknot.gf2 import GF2Matrix, gf2_rank
from freeknot.invariant import split_smooth
from freeknot.oracle import gf2_nullity, nullity_components, trace_components


def brute_nullity(m: GF2Matrix) -> int:
    """log2 of the number of kernel vectors, by trying all of them."""
    n = m.size
    kernel = 0
    for v in range(1 << n):
        if all(bin(row & v).count("1") % 2 == 0 for row in m.rows):
            kernel += 1
    return kernel.bit_length() - 1


def test_nullity_examples():
    assert gf2_nullity(GF2Matrix((), ())) == 0
    assert gf2_nullity(GF2Matrix.from_lists([[0, 1], [1, 0]])) == 0
    k3 = GF2Matrix.from_lists([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert brute_nullity(k3) == 1
    assert gf2_nullity(k3) == 1


@given(st.integers(0, 7).flatmap(lambda n: st.lists(st.integers(0, (1 << n) - 1), min_size=n, max_size=n)))
def test_nullity_matches_kernel_count(rows):
    m = GF2Matrix(tuple(str(i) for i in range(len(rows))), tuple(rows))
    assert gf2_nullity(m) == brute_nullity(m)


def test_rank_handles_repeated_rows():
    assert gf2_rank([3, 3, 3]) == 1
    assert gf2_rank([1, 1, 2]) == 2
    assert gf2_rank([0, 0]) == 0


def test_submatrix():
    m = GF2Matrix.from_lists([[0, 1, 1], [1, 0, 0], [1, 0, 0]], labels="abc")
    assert m.submatrix(["a", "c"]).to_lists() == [[0, 1], [1, 0]]


def test_trace_examples(D):
    assert trace_components(D("1 1"), {"1"}) == 2
    assert trace_components(D("1 2 1 2"), {"1", "2"}) == 1
    assert trace_components(D("1 2 3 1 2 3"), {"1", "2", "3"}) == 2
    assert trace_components(D("-"), set()) == 1


def test_nullity_component_examples(D):
    assert nullity_components(D("1 2 3 1 3 2"), set()) == 1
    assert nullity_components(D("1 2 1 2"), {"1", "2"}) == 1
    assert nullity_components(D("1 2 3 1 2 3"), {"1", "2", "3"}) == 2


def test_oracle_errors(D):
    with pytest.raises(KeyError):
        trace_components(D("1 1"), {"7"})
    with pytest.raises(KeyError):
        nullity_components(D("1 1"), {"7"})
    with pytest.raises(ValueError):
        trace_components(D("1 | 1"), set())


@pytest.mark.parametrize("m", range(6))
def test_trace_equals_nullity_exhaustive(m):
    for d in enumerate_knots(m):
        labels = d.labels
        for r in range(len(labels) + 1):
            for subset in itertools.combinations(labels, r):
                assert trace_components(d, subset) == nullity_components(d, subset), (d, subset)


@given(knots(max_chords=8))
def test_single_chord_splits(d):
    for c in d.labels:
        assert trace_components(d, {c}) == 2


def _sequences(d, depth, prefix=()):
    yield prefix, d
    if depth == 0:
        return
    for c in even_self_chords(d):
        yield from _sequences(split_smooth(d, c), depth - 1, prefix + (c,))


@given(knots(max_chords=7))
def test_sequential_smoothing_matches_trace(d):
    for seq, out in _sequences(d, 3):
        assert out.num_circles == len(seq) + 1 == trace_components(d, seq)
