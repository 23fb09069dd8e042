"""Multi-circle Gauss diagrams.

A diagram is stored as its Gauss words: one tuple of chord labels per
circle, read cyclically.  Every label occurs exactly twice in the whole
diagram; a label whose two occurrences lie on one circle is a self-chord,
otherwise it is a mixed chord joining two circles.  Slots are addressed as
``(circle, position)``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from freeknot.gf2 import GF2Matrix

__all__ = [
    "ChordDiagram",
    "GaussWordError",
    "Slot",
    "CanonicalKey",
    "parse_gauss_words",
    "serialize",
    "canonical_key",
    "canonical_form",
    "self_interlacement",
    "is_even_chord",
    "even_self_chords",
    "crossing_weights",
    "label_sort_key",
    "random_knot",
    "random_link",
    "enumerate_knots",
]

Slot = Tuple[int, int]
CanonicalKey = Tuple[Tuple[int, ...], ...]

_LABEL_RE = re.compile(r"^[A-Za-z0-9]+$")


class GaussWordError(ValueError):
    """Raised for malformed Gauss-word input."""


def label_sort_key(label: str) -> Tuple[int, int, str]:
    """Natural order: numeric labels by value, then the rest alphabetically."""
    if label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


@dataclass(frozen=True)
class ChordDiagram:
    circles: Tuple[Tuple[str, ...], ...]

    def __post_init__(self) -> None:
        circles = tuple(tuple(str(x) for x in c) for c in self.circles)
        object.__setattr__(self, "circles", circles)
        counts: Dict[str, int] = {}
        for c in circles:
            for label in c:
                counts[label] = counts.get(label, 0) + 1
        bad = sorted((l for l, n in counts.items() if n != 2), key=label_sort_key)
        if bad:
            label = bad[0]
            raise GaussWordError(
                f"label {label} occurs {counts[label]} time(s), expected 2"
            )

    @classmethod
    def from_words(cls, *circles: Iterable) -> "ChordDiagram":
        return cls(tuple(tuple(c) for c in circles))

    @property
    def num_circles(self) -> int:
        return len(self.circles)

    @property
    def num_chords(self) -> int:
        return sum(len(c) for c in self.circles) // 2

    @cached_property
    def ends(self) -> Dict[str, Tuple[Slot, Slot]]:
        """Map each label to its two slots, in reading order."""
        seen: Dict[str, List[Slot]] = {}
        for ci, circle in enumerate(self.circles):
            for pos, label in enumerate(circle):
                seen.setdefault(label, []).append((ci, pos))
        return {label: (s[0], s[1]) for label, s in seen.items()}

    @property
    def labels(self) -> List[str]:
        return sorted(self.ends, key=label_sort_key)

    def is_self_chord(self, label: str) -> bool:
        (c1, _), (c2, _) = self.ends[label]
        return c1 == c2

    def partner(self, slot: Slot) -> Slot:
        a, b = self.ends[self.circles[slot[0]][slot[1]]]
        return b if a == slot else a

    def fresh_labels(self, count: int) -> List[str]:
        """The ``count`` smallest positive integers not already used as labels."""
        used = set(self.ends)
        out: List[str] = []
        n = 1
        while len(out) < count:
            if str(n) not in used:
                out.append(str(n))
            n += 1
        return out

    def __str__(self) -> str:
        return serialize(self)


def parse_gauss_words(text: str) -> ChordDiagram:
    """Parse ``"1 2 1 2"``, ``"a | a"``, ``"- | -"`` style input."""
    if not text or not text.strip():
        raise GaussWordError("empty input")
    circles = []
    for part in text.split("|"):
        tokens = part.split()
        if not tokens:
            raise GaussWordError("empty circle must be written as '-'")
        if tokens == ["-"]:
            circles.append(())
            continue
        for tok in tokens:
            if not _LABEL_RE.match(tok):
                raise GaussWordError(f"malformed token {tok!r}")
        circles.append(tuple(tokens))
    return ChordDiagram(tuple(circles))


def serialize(d: ChordDiagram) -> str:
    return " | ".join(" ".join(c) if c else "-" for c in d.circles)


def _circle_variants(circle: Tuple[str, ...]) -> List[Tuple[str, ...]]:
    if not circle:
        return [()]
    out = set()
    n = len(circle)
    rev = circle[::-1]
    for r in range(n):
        out.add(circle[r:] + circle[:r])
        out.add(rev[r:] + rev[:r])
    return list(out)


def _encode(word: Tuple[str, ...], mapping: Dict[str, int]) -> Tuple[Tuple[int, ...], Dict[str, int]]:
    new = mapping
    enc = []
    for label in word:
        v = new.get(label)
        if v is None:
            if new is mapping:
                new = dict(mapping)
            v = len(new) + 1
            new[label] = v
        enc.append(v)
    return tuple(enc), new


def canonical_key(d: ChordDiagram) -> CanonicalKey:
    """Lexicographically least relabelled word over all symmetries.

    Circles are chosen one at a time; at each step only the branches that
    realise the least possible next circle survive, so the search stays
    small unless the diagram is highly symmetric.
    """
    variants = [_circle_variants(c) for c in d.circles]
    states: List[Tuple[frozenset, Dict[str, int]]] = [(frozenset(), {})]
    key: List[Tuple[int, ...]] = []
    for _ in range(len(d.circles)):
        best = None
        survivors: Dict[tuple, Tuple[frozenset, Dict[str, int]]] = {}
        for used, mapping in states:
            for ci, vs in enumerate(variants):
                if ci in used:
                    continue
                for v in vs:
                    enc, new = _encode(v, mapping)
                    if best is None or enc < best:
                        best = enc
                        survivors = {}
                    if enc == best:
                        u = used | {ci}
                        survivors[(u, tuple(sorted(new.items())))] = (u, new)
        key.append(best)
        states = list(survivors.values())
    return tuple(key)


def canonical_form(d: ChordDiagram) -> ChordDiagram:
    """The representative of ``d`` spelled by its canonical key."""
    return ChordDiagram(tuple(tuple(str(x) for x in c) for c in canonical_key(d)))


def _circle_self_chords(d: ChordDiagram, circle: int) -> List[str]:
    return [l for l in d.labels if d.ends[l][0][0] == circle and d.ends[l][1][0] == circle]


def _linked(d: ChordDiagram, a: str, b: str) -> bool:
    (_, a1), (_, a2) = d.ends[a]
    (_, b1), (_, b2) = d.ends[b]
    return (a1 < b1 < a2) != (a1 < b2 < a2)


def self_interlacement(d: ChordDiagram, circle: int) -> GF2Matrix:
    """Linking matrix of the self-chords of one circle."""
    if not 0 <= circle < d.num_circles:
        raise IndexError(f"no circle {circle}")
    chords = _circle_self_chords(d, circle)
    rows = []
    for a in chords:
        row = 0
        for j, b in enumerate(chords):
            if a != b and _linked(d, a, b):
                row |= 1 << j
        rows.append(row)
    return GF2Matrix(tuple(chords), tuple(rows))


def is_even_chord(d: ChordDiagram, chord: str) -> bool:
    if chord not in d.ends:
        raise KeyError(f"unknown chord {chord!r}")
    if not d.is_self_chord(chord):
        raise ValueError("parity undefined for mixed chord")
    circle = d.ends[chord][0][0]
    linked = sum(
        1 for b in _circle_self_chords(d, circle) if b != chord and _linked(d, chord, b)
    )
    return linked % 2 == 0


def even_self_chords(d: ChordDiagram) -> List[str]:
    return [l for l in d.labels if d.is_self_chord(l) and is_even_chord(d, l)]


def crossing_weights(d: ChordDiagram) -> List[List[int]]:
    k = d.num_circles
    w = [[0] * k for _ in range(k)]
    for (c1, _), (c2, _) in d.ends.values():
        if c1 == c2:
            w[c1][c1] += 1
        else:
            w[c1][c2] += 1
            w[c2][c1] += 1
    return w


def _word_from_matching(pairs: Sequence[Tuple[int, int]], size: int) -> Tuple[str, ...]:
    word = [""] * size
    order = sorted(pairs, key=min)
    for n, (x, y) in enumerate(order, start=1):
        word[x] = word[y] = str(n)
    return tuple(word)


def random_knot(chords: int, seed: int | random.Random) -> ChordDiagram:
    """Uniformly random one-circle diagram; labels follow first occurrence."""
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    slots = list(range(2 * chords))
    rng.shuffle(slots)
    pairs = [(slots[i], slots[i + 1]) for i in range(0, len(slots), 2)]
    return ChordDiagram((_word_from_matching(pairs, 2 * chords),))


def random_link(chords: int, circles: int, seed: int | random.Random) -> ChordDiagram:
    """Random diagram on ``circles`` circles; circles may come out empty."""
    if circles < 1:
        raise ValueError("need at least one circle")
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    word = list(random_knot(chords, rng).circles[0])
    cuts = sorted(rng.randint(0, len(word)) for _ in range(circles - 1))
    bounds = [0] + cuts + [len(word)]
    return ChordDiagram(tuple(tuple(word[bounds[i]:bounds[i + 1]]) for i in range(circles)))


def _matchings(slots: List[int]) -> Iterator[List[Tuple[int, int]]]:
    if not slots:
        yield []
        return
    first, rest = slots[0], slots[1:]
    for i, other in enumerate(rest):
        for m in _matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


def enumerate_knots(chords: int) -> List[ChordDiagram]:
    """All one-circle diagrams with ``chords`` chords, one per isomorphism class.

    Returned in increasing canonical-key order, each spelled canonically.
    """
    keys = set()
    for m in _matchings(list(range(2 * chords))):
        keys.add(canonical_key(ChordDiagram((_word_from_matching(m, 2 * chords),))))
    return [ChordDiagram(tuple(tuple(str(x) for x in c) for c in k)) for k in sorted(keys)]
