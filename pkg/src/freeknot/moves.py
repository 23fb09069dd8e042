"""Reidemeister moves and elementary cobordisms on Gauss diagrams.

Removal moves are driven by sites found in the diagram; insertions take an
explicit gap.  A gap ``g`` on a circle is the insertion point immediately
before slot ``g`` (``g == len(circle)`` appends).  Segments of a symmetric
configuration are written ``(start, length)``: they begin at gap ``start``
and cover ``length`` consecutive slots, wrapping around the circle.
"""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from freeknot.diagram import ChordDiagram, Slot, canonical_key, label_sort_key

__all__ = [
    "MoveError",
    "ConfigurationError",
    "MoveSite",
    "SymmetricConfiguration",
    "find_r1_sites",
    "find_r2_sites",
    "find_r3_sites",
    "apply_r1",
    "apply_r2",
    "apply_r3",
    "insert_r1",
    "insert_r2",
    "verify_symmetric_configuration",
    "find_symmetric_configurations",
    "apply_elementary_cobordism",
    "insert_configuration",
    "palindromic_blocks",
    "random_palindromic_block",
    "delete_chords",
    "shrink",
]

Pair = Tuple[Slot, Slot]
Segment = Tuple[int, int]
Block = Tuple[Tuple[int, int], ...]


class MoveError(ValueError):
    """Raised when a move is requested at a site the diagram does not have."""


class ConfigurationError(ValueError):
    """A segment set that is not an even symmetric configuration.

    ``condition`` is the number of the violated requirement (3, 4 or 5), or
    0 for malformed input such as overlapping segments.
    """

    def __init__(self, condition: int, message: str) -> None:
        super().__init__(f"condition {condition} violated: {message}" if condition else message)
        self.condition = condition


@dataclass(frozen=True)
class MoveSite:
    kind: str
    chords: Tuple[str, ...]
    slots: Tuple[Pair, ...]

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "chords": list(self.chords),
            "slots": [[list(a), list(b)] for a, b in self.slots],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MoveSite":
        slots = tuple((tuple(a), tuple(b)) for a, b in data["slots"])
        return cls(data["kind"].upper(), tuple(str(c) for c in data["chords"]), slots)


def _adjacent_pairs(d: ChordDiagram) -> List[Pair]:
    """Consecutive slot pairs on every circle, wrap-around included."""
    out = []
    for ci, word in enumerate(d.circles):
        n = len(word)
        if n < 2:
            continue
        for p in range(n if n > 2 else 1):
            out.append(((ci, p), (ci, (p + 1) % n)))
    return out


def _label(d: ChordDiagram, slot: Slot) -> str:
    return d.circles[slot[0]][slot[1]]


def _site_order(site: MoveSite):
    return (site.kind, [label_sort_key(c) for c in site.chords], site.slots)


def find_r1_sites(d: ChordDiagram) -> List[MoveSite]:
    sites = {}
    for a, b in _adjacent_pairs(d):
        la = _label(d, a)
        if la == _label(d, b) and la not in sites:
            sites[la] = MoveSite("R1", (la,), ((a, b),))
    return sorted(sites.values(), key=_site_order)


def _pairs_by_labels(d: ChordDiagram) -> Dict[FrozenSet[str], List[Pair]]:
    groups: Dict[FrozenSet[str], List[Pair]] = {}
    for a, b in _adjacent_pairs(d):
        labels = frozenset((_label(d, a), _label(d, b)))
        if len(labels) == 2:
            groups.setdefault(labels, []).append((a, b))
    return groups


def _disjoint(*pairs: Pair) -> bool:
    slots = [s for p in pairs for s in p]
    return len(set(slots)) == len(slots)


def find_r2_sites(d: ChordDiagram) -> List[MoveSite]:
    """Pairs of chords bounding a bigon: two disjoint adjacent slot pairs."""
    sites = []
    for labels, pairs in _pairs_by_labels(d).items():
        chords = tuple(sorted(labels, key=label_sort_key))
        for p, q in itertools.combinations(pairs, 2):
            if _disjoint(p, q):
                sites.append(MoveSite("R2", chords, (p, q)))
    return sorted(sites, key=_site_order)


def find_r3_sites(d: ChordDiagram) -> List[MoveSite]:
    """Triangles: three disjoint adjacent pairs labelled (a,b), (b,c), (c,a)."""
    groups = _pairs_by_labels(d)
    sites = []
    for a, b, c in itertools.combinations(sorted(d.ends, key=label_sort_key), 3):
        ab = groups.get(frozenset((a, b)), ())
        bc = groups.get(frozenset((b, c)), ())
        ca = groups.get(frozenset((c, a)), ())
        for p, q, r in itertools.product(ab, bc, ca):
            if _disjoint(p, q, r):
                sites.append(MoveSite("R3", (a, b, c), (p, q, r)))
    return sorted(sites, key=_site_order)


def _check_site(d: ChordDiagram, site: MoveSite, kind: str, finder) -> None:
    if site.kind != kind:
        raise MoveError(f"expected an {kind} site, got {site.kind}")
    if site not in finder(d):
        raise MoveError(f"{site.to_json()} is not an {kind} site of {d}")


def delete_chords(d: ChordDiagram, chords: Iterable[str]) -> ChordDiagram:
    gone = set(chords)
    return ChordDiagram(tuple(tuple(l for l in c if l not in gone) for c in d.circles))


def apply_r1(d: ChordDiagram, site: MoveSite) -> ChordDiagram:
    """Remove the loop at ``site``."""
    _check_site(d, site, "R1", find_r1_sites)
    return delete_chords(d, site.chords)


def apply_r2(d: ChordDiagram, site: MoveSite) -> ChordDiagram:
    """Remove the bigon at ``site``."""
    _check_site(d, site, "R2", find_r2_sites)
    return delete_chords(d, site.chords)


def apply_r3(d: ChordDiagram, site: MoveSite) -> ChordDiagram:
    """Swap the two slots of each side of the triangle.

    The same site (same slot pairs) is an R3 site of the result, and
    applying the move there again gives ``d`` back.
    """
    _check_site(d, site, "R3", find_r3_sites)
    circles = [list(c) for c in d.circles]
    for (c1, p), (c2, q) in site.slots:
        circles[c1][p], circles[c2][q] = circles[c2][q], circles[c1][p]
    return ChordDiagram(tuple(tuple(c) for c in circles))


def _check_gap(d: ChordDiagram, circle: int, gap: int) -> None:
    if not 0 <= circle < d.num_circles:
        raise MoveError(f"no circle {circle}")
    if not 0 <= gap <= len(d.circles[circle]):
        raise MoveError(f"gap {gap} out of range on circle {circle}")


def _splice(d: ChordDiagram, insertions: Sequence[Tuple[int, int, Sequence[str]]]) -> ChordDiagram:
    """Insert words at (circle, gap) points; gaps refer to the original ``d``."""
    circles = [list(c) for c in d.circles]
    # right to left, so earlier gaps keep their meaning; stable on ties
    order = sorted(range(len(insertions)), key=lambda i: (insertions[i][0], insertions[i][1], i))
    for i in reversed(order):
        ci, gap, word = insertions[i]
        circles[ci][gap:gap] = list(word)
    return ChordDiagram(tuple(tuple(c) for c in circles))


def insert_r1(d: ChordDiagram, circle: int, gap: int, label: Optional[str] = None) -> ChordDiagram:
    """Add a loop (a chord with adjacent ends) at a gap."""
    _check_gap(d, circle, gap)
    label = label or d.fresh_labels(1)[0]
    if label in d.ends:
        raise MoveError(f"label {label} already in use")
    return _splice(d, [(circle, gap, (label, label))])


def insert_r2(
    d: ChordDiagram,
    first: Tuple[int, int],
    second: Tuple[int, int],
    labels: Optional[Tuple[str, str]] = None,
    crossed: bool = False,
) -> ChordDiagram:
    """Add a bigon: ``a b`` at the first gap, ``b a`` (or ``a b`` if crossed) at the second."""
    _check_gap(d, *first)
    _check_gap(d, *second)
    a, b = labels or d.fresh_labels(2)
    if a == b or a in d.ends or b in d.ends:
        raise MoveError("R2 insertion needs two distinct fresh labels")
    return _splice(d, [(*first, (a, b)), (*second, (a, b) if crossed else (b, a))])


@dataclass(frozen=True)
class SymmetricConfiguration:
    size: int
    segments: Tuple[Segment, ...]
    involution: Tuple[int, ...]
    gamma: Tuple[str, ...]
    beta: Tuple[str, ...]
    alpha: Tuple[Tuple[str, str], ...]

    @property
    def chords(self) -> Tuple[str, ...]:
        """The chords an elementary cobordism deletes."""
        out = list(self.beta) + [c for pair in self.alpha for c in pair]
        return tuple(sorted(out, key=label_sort_key))

    def chord_map(self) -> Dict[str, str]:
        m = {b: b for b in self.beta}
        for a, abar in self.alpha:
            m[a] = abar
            m[abar] = a
        return m

    def to_json(self) -> dict:
        return {
            "segments": [
                {"start_gap": s, "end_gap": (s + n) % self.size, "length": n}
                for s, n in self.segments
            ],
            "gamma": list(self.gamma),
            "beta": list(self.beta),
            "alpha": [list(p) for p in self.alpha],
        }

    @staticmethod
    def segments_from_json(data: dict) -> List[Segment]:
        return [(int(s["start_gap"]), int(s["length"])) for s in data["segments"]]


def _segment_slots(seg: Segment, size: int) -> List[int]:
    start, length = seg
    return [(start + k) % size for k in range(length)]


def verify_symmetric_configuration(d: ChordDiagram, segments: Iterable[Segment]) -> SymmetricConfiguration:
    if d.num_circles != 1:
        raise ConfigurationError(0, "cobordisms are defined on one-circle diagrams")
    word = d.circles[0]
    size = len(word)
    segments = tuple((int(s), int(n)) for s, n in segments)
    if not segments:
        raise ConfigurationError(0, "no segments given")

    involution = list(range(size))
    inside = set()
    for seg in segments:
        start, length = seg
        if not 0 <= start < size or not 1 <= length <= size:
            raise ConfigurationError(0, f"segment {seg} does not fit a circle of {size} slots")
        slots = _segment_slots(seg, size)
        if inside.intersection(slots):
            raise ConfigurationError(0, "segments overlap")
        inside.update(slots)
        for k, s in enumerate(slots):
            involution[s] = slots[length - 1 - k]

    labels = sorted(d.ends, key=label_sort_key)
    for label in labels:
        (_, p), (_, q) = d.ends[label]
        if (p in inside) != (q in inside):
            raise ConfigurationError(4, f"chord {label} leaves the configuration")
    for seg in segments:
        if seg[1] % 2:
            raise ConfigurationError(3, f"segment {seg} holds {seg[1]} chord ends")

    gamma, beta, alpha = [], [], []
    for label in labels:
        (_, p), (_, q) = d.ends[label]
        if p not in inside:
            gamma.append(label)
            continue
        ip, iq = involution[p], involution[q]
        image = word[ip]
        if word[iq] != image:
            raise ConfigurationError(5, f"reflection does not carry chord {label} to a chord")
        if image == label:
            beta.append(label)
        elif min(p, q) < min(d.ends[image][0][1], d.ends[image][1][1]):
            alpha.append((label, image))
    return SymmetricConfiguration(
        size, segments, tuple(involution), tuple(gamma), tuple(beta), tuple(alpha)
    )


def find_symmetric_configurations(d: ChordDiagram, max_segments: int = 2) -> List[SymmetricConfiguration]:
    """All configurations with at most ``max_segments`` segments, one per chord content.

    Two configurations have the same content when they delete the same
    chords and pair them the same way.
    """
    if d.num_circles != 1:
        raise ConfigurationError(0, "cobordisms are defined on one-circle diagrams")
    size = len(d.circles[0])
    singles = [(s, n) for n in range(2, size + 1, 2) for s in range(size)]
    found: Dict[tuple, SymmetricConfiguration] = {}

    def consider(segments):
        try:
            conf = verify_symmetric_configuration(d, segments)
        except ConfigurationError:
            return
        content = (frozenset(conf.chords), frozenset(conf.chord_map().items()))
        found.setdefault(content, conf)

    for count in range(1, max_segments + 1):
        for combo in itertools.combinations(singles, count):
            slots = [x for seg in combo for x in _segment_slots(seg, size)]
            if len(set(slots)) == len(slots):
                consider(combo)
    return list(found.values())


def apply_elementary_cobordism(d: ChordDiagram, conf: SymmetricConfiguration) -> ChordDiagram:
    """Delete every chord of a configuration, after re-checking it against ``d``."""
    try:
        check = verify_symmetric_configuration(d, conf.segments)
    except ConfigurationError as exc:
        raise MoveError(f"configuration not valid for {d}: {exc}") from exc
    if check != conf:
        raise MoveError("configuration was verified against a different diagram")
    return delete_chords(d, conf.chords)


def _check_block(block: Sequence[Tuple[int, int]]) -> Tuple[int, Block]:
    pairs = tuple(tuple(sorted((int(x), int(y)))) for x, y in block)
    size = 2 * len(pairs)
    slots = sorted(s for p in pairs for s in p)
    if slots != list(range(size)):
        raise MoveError("block is not a perfect matching on 0..2t-1")
    mirrored = {tuple(sorted((size - 1 - x, size - 1 - y))) for x, y in pairs}
    if mirrored != set(pairs):
        raise MoveError("block is not palindromic")
    return size, tuple(sorted(pairs))


def insert_configuration(d: ChordDiagram, block: Sequence[Tuple[int, int]], circle: int, gap: int) -> ChordDiagram:
    """Splice a palindromic matching in at a gap, using fresh labels.

    In the result the block occupies ``(gap, 2t)`` as a single segment and
    deleting it gives ``d`` back.
    """
    size, pairs = _check_block(block)
    _check_gap(d, circle, gap)
    labels = d.fresh_labels(len(pairs))
    word = [""] * size
    for label, (x, y) in zip(labels, pairs):
        word[x] = word[y] = label
    return _splice(d, [(circle, gap, word)])


def _block_matchings(slots: List[int]):
    if not slots:
        yield ()
        return
    first, rest = slots[0], slots[1:]
    for i, other in enumerate(rest):
        for m in _block_matchings(rest[:i] + rest[i + 1:]):
            yield ((first, other),) + m


def palindromic_blocks(t: int) -> List[Block]:
    out = []
    for m in _block_matchings(list(range(2 * t))):
        try:
            out.append(_check_block(m)[1])
        except MoveError:
            pass
    return out


def random_palindromic_block(t: int, rng: random.Random) -> Block:
    return rng.choice(palindromic_blocks(t))


def shrink(d: ChordDiagram, budget: int = 1000, max_segments: int = 2) -> ChordDiagram:
    """Fewest-chord diagram reachable by R3 moves and cobordism deletions.

    Breadth-first; ``budget`` caps the number of distinct diagrams expanded.
    """
    if d.num_circles != 1:
        raise ValueError("shrink works on one-circle diagrams")
    best = d
    best_rank = (d.num_chords, canonical_key(d))
    seen = {best_rank[1]}
    queue = deque([d])
    expanded = 0
    while queue and expanded < budget and best.num_chords > 0:
        cur = queue.popleft()
        expanded += 1
        nxt = [apply_r3(cur, s) for s in find_r3_sites(cur)]
        nxt += [delete_chords(cur, c.chords) for c in find_symmetric_configurations(cur, max_segments)]
        for e in sorted(nxt, key=canonical_key):
            k = canonical_key(e)
            if k in seen:
                continue
            seen.add(k)
            if (e.num_chords, k) < best_rank:
                best, best_rank = e, (e.num_chords, k)
            queue.append(e)
    return best
