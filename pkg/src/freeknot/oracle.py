"""Independent component counts for smoothings of a one-circle diagram.

``trace_components`` walks the curve; ``nullity_components`` reads the same
number off the interlacement matrix over GF(2).  The two are kept apart so
that each can be used to check the other.
"""

from __future__ import annotations

from typing import Iterable, Set

from freeknot.diagram import ChordDiagram, self_interlacement
from freeknot.gf2 import GF2Matrix, gf2_nullity, gf2_rank

__all__ = ["GF2Matrix", "gf2_nullity", "gf2_rank", "trace_components", "nullity_components"]


def _check(d: ChordDiagram, subset: Iterable[str]) -> Set[str]:
    if d.num_circles != 1:
        raise ValueError("expected a one-circle diagram")
    subset = set(subset)
    unknown = subset - set(d.ends)
    if unknown:
        raise KeyError(f"unknown chord(s): {sorted(unknown)}")
    return subset


def trace_components(d: ChordDiagram, subset: Iterable[str]) -> int:
    """Circles left after smoothing every chord of ``subset`` at once.

    Each smoothed chord uses the resolution that keeps the direction of
    travel, i.e. arriving at one end you leave forwards from the other.  Arcs
    are numbered by their starting slot; the count is the number of cycles
    of the arc-successor permutation.
    """
    subset = _check(d, subset)
    word = d.circles[0]
    size = len(word)
    if size == 0:
        return 1
    partner = {}
    for a, b in (d.ends[l] for l in subset):
        partner[a[1]] = b[1]
        partner[b[1]] = a[1]

    seen = [False] * size
    cycles = 0
    for start in range(size):
        if seen[start]:
            continue
        cycles += 1
        arc = start
        while not seen[arc]:
            seen[arc] = True
            t = (arc + 1) % size
            arc = partner.get(t, t)
    return cycles


def nullity_components(d: ChordDiagram, subset: Iterable[str]) -> int:
    subset = _check(d, subset)
    m = self_interlacement(d, 0)
    keep = [l for l in m.labels if l in subset]
    return gf2_nullity(m.submatrix(keep)) + 1
