"""The smoothing map, the component graph and the cobordism invariant."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Tuple

from freeknot.diagram import (
    CanonicalKey,
    ChordDiagram,
    canonical_key,
    crossing_weights,
    even_self_chords,
    serialize,
)

__all__ = [
    "LinearCombination",
    "GammaGraph",
    "InvariantValue",
    "split_smooth",
    "delta",
    "delta_n",
    "gamma_graph",
    "j_number",
    "i_of_diagram",
    "i_of_combination",
    "i_n",
    "i_n_raw",
    "smoothing_sequences",
]


def split_smooth(d: ChordDiagram, chord: str) -> ChordDiagram:
    """Smooth a self-chord so that its circle falls apart into two.

    The arc strictly between the chord's ends becomes a new last circle;
    the remaining arc stays at the original circle index.
    """
    (c1, p), (c2, q) = d.ends[chord]
    if c1 != c2:
        raise ValueError(f"chord {chord} is mixed; only self-chords split")
    word = d.circles[c1]
    inner = word[p + 1:q]
    outer = word[:p] + word[q + 1:]
    circles = list(d.circles)
    circles[c1] = outer
    circles.append(inner)
    return ChordDiagram(tuple(circles))


class LinearCombination:
    """Z2-linear combination of diagrams, identified up to isomorphism.

    Only keys with coefficient 1 are stored, together with one
    representative diagram per key.
    """

    __slots__ = ("_terms",)

    def __init__(self, diagrams: Iterable[ChordDiagram] = ()) -> None:
        counts: Dict[CanonicalKey, List] = {}
        for d in diagrams:
            k = canonical_key(d)
            entry = counts.get(k)
            if entry is None:
                counts[k] = [d, 1]
            else:
                entry[1] ^= 1
        self._terms: Dict[CanonicalKey, ChordDiagram] = {
            k: v[0] for k, v in sorted(counts.items()) if v[1]
        }

    @classmethod
    def _from_terms(cls, terms: Dict[CanonicalKey, ChordDiagram]) -> "LinearCombination":
        out = cls()
        out._terms = dict(sorted(terms.items()))
        return out

    def keys(self) -> List[CanonicalKey]:
        return list(self._terms)

    def diagrams(self) -> List[ChordDiagram]:
        return list(self._terms.values())

    def items(self) -> Iterator[Tuple[CanonicalKey, ChordDiagram]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, d: ChordDiagram) -> bool:
        return canonical_key(d) in self._terms

    def __add__(self, other: "LinearCombination") -> "LinearCombination":
        terms = dict(self._terms)
        for k, d in other._terms.items():
            if k in terms:
                del terms[k]
            else:
                terms[k] = d
        return LinearCombination._from_terms(terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LinearCombination):
            return NotImplemented
        return self._terms.keys() == other._terms.keys()

    def __repr__(self) -> str:
        body = " + ".join(f"[{serialize(d)}]" for d in self._terms.values())
        return f"LinearCombination({body or '0'})"

    def to_json(self) -> List[dict]:
        return [{"diagram": serialize(d), "count_mod2": 1} for d in self._terms.values()]

    @classmethod
    def from_json(cls, data: List[dict]) -> "LinearCombination":
        from freeknot.diagram import parse_gauss_words

        return cls(parse_gauss_words(t["diagram"]) for t in data if t.get("count_mod2", 1) % 2)


def delta(x: LinearCombination | ChordDiagram) -> LinearCombination:
    if isinstance(x, ChordDiagram):
        x = LinearCombination([x])
    return LinearCombination(
        split_smooth(d, c) for d in x.diagrams() for c in even_self_chords(d)
    )


def delta_n(d: ChordDiagram, n: int) -> LinearCombination:
    if n < 1:
        raise ValueError("n must be a positive integer")
    x = LinearCombination([d])
    for _ in range(n):
        if not x:
            break
        x = delta(x)
    return x


@dataclass(frozen=True)
class GammaGraph:
    """Graph on circles; an edge marks an odd number of shared chords."""

    vertices: int
    edges: FrozenSet[Tuple[int, int]] = field(default_factory=frozenset)

    def is_connected(self) -> bool:
        if self.vertices == 0:
            return True
        adj: Dict[int, List[int]] = {v: [] for v in range(self.vertices)}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertices

    def to_dot(self, name: str = "Gamma", labels: List[str] | None = None) -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.vertices):
            if labels is not None:
                lines.append(f'  {v} [label="{labels[v]}"];')
            else:
                lines.append(f"  {v};")
        for a, b in sorted(self.edges):
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines)


def gamma_graph(d: ChordDiagram) -> GammaGraph:
    w = crossing_weights(d)
    k = len(w)
    edges = frozenset((i, j) for i in range(k) for j in range(i + 1, k) if w[i][j] % 2)
    return GammaGraph(k, edges)


def j_number(d: ChordDiagram) -> int:
    g = gamma_graph(d)
    return len(g.edges) if g.is_connected() else 0


@dataclass(frozen=True)
class InvariantValue:
    """Element of the Z2-span of a_1, a_2, ...; ``support`` holds the indices."""

    support: FrozenSet[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "support", frozenset(self.support))
        if any(j < 1 for j in self.support):
            raise ValueError("basis indices start at 1")

    def __add__(self, other: "InvariantValue") -> "InvariantValue":
        return InvariantValue(self.support ^ other.support)

    def __bool__(self) -> bool:
        return bool(self.support)

    def to_json(self) -> dict:
        return {"support": sorted(self.support)}

    @classmethod
    def from_json(cls, data: dict) -> "InvariantValue":
        return cls(frozenset(int(j) for j in data["support"]))

    def __str__(self) -> str:
        if not self.support:
            return "0"
        return " + ".join(f"a{j}" for j in sorted(self.support))


def i_of_diagram(d: ChordDiagram) -> InvariantValue:
    j = j_number(d)
    return InvariantValue(frozenset({j}) if j else frozenset())


def i_of_combination(x: LinearCombination) -> InvariantValue:
    support: FrozenSet[int] = frozenset()
    for d in x.diagrams():
        support ^= i_of_diagram(d).support
    return InvariantValue(support)


def _require_knot(d: ChordDiagram) -> None:
    if d.num_circles != 1:
        raise ValueError(f"expected a one-circle diagram, got {d.num_circles} circles")


def i_n(d: ChordDiagram, n: int) -> InvariantValue:
    _require_knot(d)
    return i_of_combination(delta_n(d, n))


def smoothing_sequences(d: ChordDiagram, n: int) -> Iterator[Tuple[Tuple[str, ...], ChordDiagram]]:
    """Every length-``n`` sequence of split smoothings at even self-chords.

    Evenness is re-evaluated after each smoothing.  No identification of
    isomorphic results takes place.
    """
    if n == 0:
        yield (), d
        return
    for c in even_self_chords(d):
        for rest, out in smoothing_sequences(split_smooth(d, c), n - 1):
            yield (c,) + rest, out


def i_n_raw(d: ChordDiagram, n: int) -> InvariantValue:
    """``i_n`` by brute force over smoothing sequences, XOR-ing the j values."""
    _require_knot(d)
    support: FrozenSet[int] = frozenset()
    for _, out in smoothing_sequences(d, n):
        j = j_number(out)
        if j:
            support ^= {j}
    return InvariantValue(support)
