"""Directed homotopy relations between maps of directed complexes."""
from __future__ import annotations

from collections import deque
from typing import Sequence

from ..core.spaces import DirectedComplex, is_map
from ..errors import InputError

DEFAULT_BUDGET = 100_000


def _hinge_words(gen, f, g):
    # the cylinder over a word is generated by the words that switch from f
    # to g at a repeated entry
    for p in range(len(gen)):
        yield tuple(f[x] for x in gen[:p + 1]) + tuple(g[x] for x in gen[p:])


def immediate_homotopy(source: DirectedComplex, target: DirectedComplex,
                       f: Sequence[int], g: Sequence[int]) -> bool:
    """Whether there is an immediate homotopy f -> g."""
    for name, h in (("f", f), ("g", g)):
        if not is_map(source, target, h):
            raise InputError(f"{name} is not a map of directed complexes")
    return all(target.is_linked(w) for gen in source.generators for w in _hinge_words(gen, f, g))


def _successors(source: DirectedComplex, target: DirectedComplex, f):
    """Maps h with an immediate homotopy f -> h, by backtracking over vertices."""
    n = source.n_vertices
    by_last: dict[int, list] = {}
    for gen in source.generators:
        by_last.setdefault(max(gen), []).append(gen)
    h = [0] * n

    def assign(v):
        if v == n:
            yield tuple(h)
            return
        for w in range(target.n_vertices):
            h[v] = w
            if all(target.is_linked(word) for gen in by_last.get(v, ())
                   for word in _hinge_words(gen, f, h)):
                yield from assign(v + 1)

    yield from assign(0)


def bounded_homotopy_reachable(source: DirectedComplex, target: DirectedComplex,
                               f: Sequence[int], g: Sequence[int], max_steps: int | None = None,
                               budget: int = DEFAULT_BUDGET):
    """Breadth-first search along immediate homotopies from f.

    Returns True if g is reached within ``max_steps`` steps (no limit when
    None), False when the search space is exhausted without reaching g, and
    None when the node budget runs out first.
    """
    for name, h in (("f", f), ("g", g)):
        if not is_map(source, target, h):
            raise InputError(f"{name} is not a map of directed complexes")
    start, goal = tuple(f), tuple(g)
    if start == goal:
        return True
    seen = {start}
    frontier = deque([(start, 0)])
    while frontier:
        current, depth = frontier.popleft()
        if max_steps is not None and depth >= max_steps:
            continue
        for nxt in _successors(source, target, current):
            if nxt in seen:
                continue
            if nxt == goal:
                return True
            seen.add(nxt)
            if len(seen) > budget:
                return None
            frontier.append((nxt, depth + 1))
    return False


def telescopic_stage(m: int, t: int) -> tuple[int, ...]:
    """The map i -> 0 v (i ^ t) on the window [0, m]."""
    return tuple(max(0, min(i, t)) for i in range(m + 1))
