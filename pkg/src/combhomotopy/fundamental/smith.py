"""Integer Smith normal form and abelian invariants (exact, arbitrary precision)."""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, Mapping

from .presentations import GroupPresentation


@dataclass(frozen=True)
class AbelianInvariants:
    rank: int
    torsion: tuple[int, ...] = ()

    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def __str__(self):
        parts = ["Z"] * (self.rank > 0)
        if self.rank > 1:
            parts = [f"Z^{self.rank}"]
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"

    def to_json(self):
        return {"rank": self.rank, "torsion": list(self.torsion)}


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    a = [list(map(int, row)) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    t = 0
    while t < min(m, n):
        pivot = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if dirty:
                # a smaller remainder now sits in row or column t: move it to the pivot
                best = min(((abs(a[i][t]), i, t) for i in range(t, m) if a[i][t]),
                           default=None)
                best_c = min(((abs(a[t][j]), t, j) for j in range(t, n) if a[t][j]),
                             default=None)
                cand = min(x for x in (best, best_c) if x is not None)
                _, i, j = cand
                if i != t:
                    a[t], a[i] = a[i], a[t]
                if j != t:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if a[i][j] % p), None)
            if bad is None:
                break
            a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def invariants_of_rows(n_columns: int, rows: Iterable[Mapping[int, int]]) -> AbelianInvariants:
    """Abelian group Z^n_columns modulo the given rows.

    Unit pivots are eliminated sparsely first (each contributes a trivial
    invariant factor); whatever remains goes through the dense Smith form.
    """
    rows = [{c: v for c, v in r.items() if v} for r in rows]
    rows = [r for r in rows if r]
    cols: dict[int, set[int]] = {}
    for i, r in enumerate(rows):
        for c in r:
            cols.setdefault(c, set()).add(i)
    alive = [True] * len(rows)
    heap = [(len(r), i) for i, r in enumerate(rows)]
    heapq.heapify(heap)
    rank = 0
    while heap:
        size, i = heapq.heappop(heap)
        if not alive[i] or size != len(rows[i]):
            continue
        row = rows[i]
        units = [c for c, v in row.items() if abs(v) == 1]
        if not units:
            continue
        c = min(units, key=lambda x: (len(cols[x]), x))
        sign = row[c]
        alive[i] = False
        rank += 1
        for c2 in row:
            cols[c2].discard(i)
        for k in list(cols[c]):
            other = rows[k]
            factor = other[c] * sign
            for c2, v in row.items():
                nv = other.get(c2, 0) - factor * v
                if nv:
                    if c2 not in other:
                        cols[c2].add(k)
                    other[c2] = nv
                elif c2 in other:
                    del other[c2]
                    cols[c2].discard(k)
            if other:
                heapq.heappush(heap, (len(other), k))
            else:
                alive[k] = False
        del cols[c]
    rest = [rows[i] for i in range(len(rows)) if alive[i] and rows[i]]
    used = sorted({c for r in rest for c in r})
    dense = [[r.get(c, 0) for c in used] for r in rest]
    diag = smith_diagonal(dense) if dense else []
    rank += len(diag)
    return AbelianInvariants(n_columns - rank, tuple(d for d in diag if d > 1))


def abelianization(p: GroupPresentation) -> AbelianInvariants:
    rows = []
    for r in p.relators:
        sums: dict[int, int] = {}
        for x in r:
            g = abs(x) - 1
            sums[g] = sums.get(g, 0) + (1 if x > 0 else -1)
        rows.append(sums)
    return invariants_of_rows(p.n_generators, rows)
