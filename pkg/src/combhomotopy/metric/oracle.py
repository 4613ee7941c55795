"""Independent first-homology check on small clouds: exhaustive pair and triple
scans, then exact row reduction of the boundary maps (no presentations)."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .points import PointCloud


def _reduce_rank(rows, modulus=None):
    """Rank of sparse integer rows over Q (modulus None) or over Z/p."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        row = {c: v % modulus if modulus else v for c, v in row.items()}
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            if col not in pivots:
                pivots[col] = row
                break
            piv = pivots[col]
            a, b = piv[col], row[col]
            new = {}
            for c in set(row) | set(piv):
                if modulus:
                    v = (a * row.get(c, 0) - b * piv.get(c, 0)) % modulus
                else:
                    v = a * row.get(c, 0) - b * piv.get(c, 0)
                if v:
                    new[c] = v
            if not modulus and new:
                g = 0
                for v in new.values():
                    g = gcd(g, v)
                new = {c: v // g for c, v in new.items()}
            row = new
    return len(pivots)


@dataclass(frozen=True)
class HomologyCheck:
    components: int
    betti1_rational: int
    betti1_mod2: int

    @property
    def h1_vanishes(self) -> bool:
        return self.betti1_rational == 0 and self.betti1_mod2 == 0


def dense_h1(cloud: PointCloud, eps) -> HomologyCheck:
    n = len(cloud)
    edges = [(i, j) for i, j in combinations(range(n), 2) if cloud.within(i, j, eps)]
    eset = {e: k for k, e in enumerate(edges)}
    tris = [(i, j, k) for i, j, k in combinations(range(n), 3)
            if (i, j) in eset and (j, k) in eset and (i, k) in eset]
    d1 = [{i: -1, j: 1} for i, j in edges]
    d2 = [{eset[(j, k)]: 1, eset[(i, k)]: -1, eset[(i, j)]: 1} for i, j, k in tris]
    out = []
    for modulus in (None, 2):
        r1 = _reduce_rank(d1, modulus)
        r2 = _reduce_rank(d2, modulus)
        out.append((n - r1, len(edges) - r1 - r2))
    return HomologyCheck(out[0][0], out[0][1], out[1][1])
