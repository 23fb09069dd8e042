"""Small GF(2) linear algebra on int-bitset rows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class GF2Matrix:
    """Square 0/1 matrix; bit ``j`` of ``rows[i]`` is entry ``(i, j)``."""

    labels: Tuple[str, ...]
    rows: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.rows)

    def to_lists(self) -> List[List[int]]:
        n = self.size
        return [[(r >> j) & 1 for j in range(n)] for r in self.rows]

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], labels: Sequence[str] | None = None) -> "GF2Matrix":
        rows = tuple(sum((int(v) & 1) << j for j, v in enumerate(r)) for r in entries)
        if labels is None:
            labels = [str(i) for i in range(len(rows))]
        return cls(tuple(labels), rows)

    def is_symmetric(self) -> bool:
        m = self.to_lists()
        return all(m[i][j] == m[j][i] for i in range(self.size) for j in range(self.size))

    def submatrix(self, keep: Sequence[str]) -> "GF2Matrix":
        idx = [self.labels.index(l) for l in keep]
        rows = []
        for i in idx:
            r = self.rows[i]
            rows.append(sum(((r >> j) & 1) << k for k, j in enumerate(idx)))
        return GF2Matrix(tuple(keep), tuple(rows))


def gf2_rank(rows: Sequence[int]) -> int:
    """Rank over GF(2) by elimination on leading bits."""
    work = [r for r in rows if r]
    rank = 0
    while work:
        pivot = work.pop(work.index(max(work)))
        top = pivot.bit_length() - 1
        work = [r ^ pivot if (r >> top) & 1 else r for r in work]
        work = [r for r in work if r]
        rank += 1
    return rank


def gf2_nullity(m: GF2Matrix) -> int:
    return m.size - gf2_rank(m.rows)
