import itertools

import pytest
from hypothesis import strategies as st

from freeknot.diagram import ChordDiagram, parse_gauss_words, random_knot


def relabel_first_occurrence(circles):
    mapping = {}
    out = []
    for c in circles:
        word = []
        for label in c:
            mapping.setdefault(label, len(mapping) + 1)
            word.append(mapping[label])
        out.append(tuple(word))
    return tuple(out)


def circle_symmetries(word):
    n = len(word)
    if n == 0:
        return [()]
    rev = word[::-1]
    return [w[r:] + w[:r] for w in (word, rev) for r in range(n)]


def orbit(d: ChordDiagram):
    """Every relabelled spelling reachable by the symmetry group, by brute force."""
    out = set()
    for perm in itertools.permutations(d.circles):
        for choice in itertools.product(*(circle_symmetries(c) for c in perm)):
            out.add(relabel_first_occurrence(choice))
    return out


def brute_isomorphic(a: ChordDiagram, b: ChordDiagram) -> bool:
    return relabel_first_occurrence(b.circles) in orbit(a)


@pytest.fixture
def D():
    return parse_gauss_words


@st.composite
def knots(draw, max_chords=6):
    m = draw(st.integers(0, max_chords))
    seed = draw(st.integers(0, 2**63 - 1))
    return random_knot(m, seed)


@st.composite
def links(draw, max_chords=5, max_circles=3):
    """Random multi-circle diagrams, empty circles allowed."""
    k = draw(st.integers(1, max_circles))
    m = draw(st.integers(0, max_chords))
    slots = [str(i) for i in range(1, m + 1) for _ in range(2)]
    slots = draw(st.permutations(slots))
    cuts = sorted(draw(st.lists(st.integers(0, len(slots)), min_size=k - 1, max_size=k - 1)))
    bounds = [0] + cuts + [len(slots)]
    return ChordDiagram(tuple(tuple(slots[bounds[i]:bounds[i + 1]]) for i in range(k)))


ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion, then assert."""

    def record(number, passed, detail=""):
        ACCEPTANCE.append((number, bool(passed), detail))
        assert passed, f"criterion {number} failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
