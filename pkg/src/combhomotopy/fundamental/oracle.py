"""Brute-force path classes by exhaustive moves, independent of any presentation."""
from __future__ import annotations

from dataclasses import dataclass

from ..core.truncated import TruncDirSet
from ..errors import InputError
from ..unionfind import UnionFind
from .homsets import DEFAULT_WORD_BUDGET, BudgetExceeded


@dataclass(frozen=True)
class OracleCount:
    """``saturated`` means a larger search margin did not change the count."""

    count: int
    saturated: bool
    margin: int

    def to_json(self):
        return {"count": self.count, "saturated": self.saturated, "margin": self.margin}


def _moves(space: TruncDirSet):
    """Length-changing moves on paths of nondegenerate edges.

    Degenerate steps are stripped from every path: inserting or deleting
    them never changes the class, and stripping never lengthens a path.
    """
    def strip(edges):
        return tuple(e for e in edges if not space.is_degenerate(e))

    moves = set()
    for a, b, c in space.triangle_closure:
        lhs, rhs = strip((a, b)), strip((c,))
        if lhs != rhs:
            moves.add((lhs, rhs, space.src[a]))
            moves.add((rhs, lhs, space.src[a]))
    if space.symmetric:
        for e in space.edges():
            pair = (e, space.rev[e])
            moves.add((pair, (), space.src[e]))
            moves.add(((), pair, space.src[e]))
    return sorted(moves)


def _paths(space, x, bound, budget):
    out = {}
    layer = [((), x)]
    out[()] = x
    for _ in range(bound):
        nxt = []
        for w, end in layer:
            for e in space.out_edges[end]:
                if not space.is_degenerate(e):
                    nxt.append((w + (e,), space.dst[e]))
        out.update(nxt)
        if len(out) > budget:
            raise BudgetExceeded(budget)
        layer = nxt
    return out


def _count(space, x, y, max_len, bound, moves, budget):
    paths = sorted((w for w, end in _paths(space, x, bound, budget).items() if end == y),
                   key=lambda w: (len(w), w))
    index = {w: i for i, w in enumerate(paths)}
    uf = UnionFind(len(paths))
    for w, i in index.items():
        objs = [x] + [space.dst[e] for e in w]
        for lhs, rhs, obj in moves:
            k = len(lhs)
            if k == 0:
                cands = (w[:p] + rhs + w[p:] for p, o in enumerate(objs) if o == obj)
            else:
                cands = (w[:p] + rhs + w[p + k:] for p in range(len(w) - k + 1)
                         if w[p:p + k] == lhs)
            for v in cands:
                j = index.get(v)
                if j is not None:
                    uf.union(i, j)
    return len({uf.find(i) for i, w in enumerate(paths) if len(w) <= max_len})


def brute_force_classes(space: TruncDirSet, x: int, y: int, max_len: int, margin: int = 2,
                        budget: int = DEFAULT_WORD_BUDGET) -> OracleCount:
    """Classes of edge paths x -> y with a representative of length <= max_len.

    Moves run over all paths up to ``max_len + margin``; the count is marked
    saturated when one more unit of margin leaves it unchanged.
    """
    for v in (x, y):
        if not 0 <= v < space.n_vertices:
            raise InputError(f"vertex {v} outside 0..{space.n_vertices - 1}")
    if max_len < 0 or margin < 0:
        raise InputError("max_len and margin must be nonnegative")
    moves = _moves(space)
    first = _count(space, x, y, max_len, max_len + margin, moves, budget)
    second = _count(space, x, y, max_len, max_len + margin + 1, moves, budget)
    return OracleCount(second, first == second, margin + 1)
