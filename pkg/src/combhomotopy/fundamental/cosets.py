"""Coset enumeration (HLT strategy with coincidence handling)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .presentations import GroupPresentation
from .words import cyclic_reduce, free_reduce

DEFAULT_COSET_LIMIT = 20_000


class CosetLimitExceeded(RuntimeError):
    pass


def _col(x: int) -> int:
    return 2 * (abs(x) - 1) + (x < 0)


@dataclass(frozen=True)
class CosetTable:
    """Complete action of the generators on the cosets of a subgroup; coset 0 is the subgroup."""

    n_generators: int
    table: tuple[tuple[int, ...], ...]

    @property
    def index(self) -> int:
        return len(self.table)

    def act(self, coset: int, word: Sequence[int]) -> int:
        for x in word:
            coset = self.table[coset][_col(x)]
        return coset


class _Enumerator:
    def __init__(self, n_gens, limit):
        self.ncols = 2 * n_gens
        self.table = [[None] * self.ncols]
        self.parent = [0]
        self.limit = limit

    def rep(self, c):
        root = c
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[c] != root:
            self.parent[c], c = root, self.parent[c]
        return root

    def define(self, c, x):
        if len(self.table) >= self.limit:
            raise CosetLimitExceeded(self.limit)
        d = len(self.table)
        self.table.append([None] * self.ncols)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][x ^ 1] = c

    def _merge(self, k, l, queue):
        k, l = self.rep(k), self.rep(l)
        if k != l:
            lo, hi = min(k, l), max(k, l)
            self.parent[hi] = lo
            queue.append(hi)

    def coincidence(self, a, b):
        queue = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(self.ncols):
                f = self.table[e][x]
                if f is None:
                    continue
                if self.table[f][x ^ 1] == e:
                    self.table[f][x ^ 1] = None
                e1, f1 = self.rep(e), self.rep(f)
                if self.table[e1][x] is not None:
                    self._merge(f1, self.table[e1][x], queue)
                elif self.table[f1][x ^ 1] is not None:
                    self._merge(e1, self.table[f1][x ^ 1], queue)
                else:
                    self.table[e1][x] = f1
                    self.table[f1][x ^ 1] = e1

    def scan_and_fill(self, c, word):
        t = self.table
        cols = [_col(x) for x in word]
        f, b = c, c
        i, j = 0, len(cols) - 1
        while True:
            while i <= j and t[f][cols[i]] is not None:
                f = t[f][cols[i]]
                i += 1
            if i > j:
                if f != c:
                    self.coincidence(f, c)
                return
            while j >= i and t[b][cols[j] ^ 1] is not None:
                b = t[b][cols[j] ^ 1]
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                t[f][cols[i]] = b
                t[b][cols[i] ^ 1] = f
                return
            self.define(f, cols[i])

    def live(self, c):
        return self.parent[c] == c


def enumerate_cosets(p: GroupPresentation, subgroup: Sequence[Sequence[int]] = (),
                     limit: int = DEFAULT_COSET_LIMIT) -> CosetTable:
    """Coset table of the subgroup generated by ``subgroup``; raises CosetLimitExceeded."""
    en = _Enumerator(p.n_generators, limit)
    for w in subgroup:
        en.scan_and_fill(0, free_reduce(w))
    # scanning assumes reduced words; a relator may be replaced by any conjugate
    relators = [r for r in map(cyclic_reduce, p.relators) if r]
    c = 0
    while c < len(en.table):
        for r in relators:
            if not en.live(c):
                break
            en.scan_and_fill(c, r)
        if en.live(c):
            for x in range(en.ncols):
                if en.table[c][x] is None:
                    en.define(c, x)
        c += 1
    alive = [c for c in range(len(en.table)) if en.live(c)]
    number = {c: k for k, c in enumerate(alive)}
    rows = tuple(tuple(number[en.rep(en.table[c][x])] for x in range(en.ncols)) for c in alive)
    return CosetTable(p.n_generators, rows)


def group_order(p: GroupPresentation, limit: int = DEFAULT_COSET_LIMIT) -> int | None:
    """Order of the group if enumeration over the trivial subgroup finishes, else None."""
    try:
        return enumerate_cosets(p, (), limit).index
    except CosetLimitExceeded:
        return None
