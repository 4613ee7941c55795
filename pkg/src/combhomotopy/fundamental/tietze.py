"""Greedy Tietze simplification of group presentations."""
from __future__ import annotations

import heapq
from collections import Counter
from dataclasses import dataclass

from .presentations import GroupPresentation
from .words import Word, canonical_relator, cyclic_reduce, free_reduce, inverse, substitute

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class TietzeResult:
    """Simplified presentation plus the image of each original generator in it."""

    presentation: GroupPresentation
    images: tuple[Word, ...]

    def translate(self, word) -> Word:
        return substitute(word, self.images)


def _solve_for(relator, g):
    """Word w with g = w, from a relator containing g exactly once."""
    i = next(k for k, x in enumerate(relator) if abs(x) - 1 == g)
    u, v = relator[:i], relator[i + 1:]
    return inverse(v + u) if relator[i] > 0 else v + u


def _replace(word, g, value):
    inv = inverse(value)
    out = []
    for x in word:
        if abs(x) - 1 == g:
            out.extend(value if x > 0 else inv)
        else:
            out.append(x)
    return free_reduce(out)


class _Relators:
    """Relator store with duplicate detection and a generator -> relator index."""

    def __init__(self):
        self.words: dict[int, Word] = {}
        self.keys: dict[Word, int] = {}
        self.containing: dict[int, set[int]] = {}
        self.heap: list = []
        self.next_id = 0

    def add(self, word):
        word = cyclic_reduce(word)
        if not word:
            return
        key = canonical_relator(word)
        if key in self.keys:
            return
        rid = self.next_id
        self.next_id += 1
        self.words[rid] = word
        self.keys[key] = rid
        counts = Counter(abs(x) - 1 for x in word)
        for g, c in counts.items():
            self.containing.setdefault(g, set()).add(rid)
            if c == 1:
                # shortest relator first, then the highest generator
                heapq.heappush(self.heap, (len(word), -g, rid))

    def remove(self, rid):
        word = self.words.pop(rid)
        del self.keys[canonical_relator(word)]
        for x in word:
            self.containing[abs(x) - 1].discard(rid)
        return word


def tietze_reduce(p: GroupPresentation, budget: int = DEFAULT_BUDGET) -> TietzeResult:
    """Eliminate generators that occur once in some relator, at most ``budget`` times."""
    store = _Relators()
    for r in p.relators:
        store.add(r)
    order: list[tuple[int, Word]] = []
    gone = set()
    while store.heap and len(order) < budget:
        _, neg, rid = heapq.heappop(store.heap)
        g = -neg
        if rid not in store.words or g in gone:
            continue
        value = _solve_for(store.remove(rid), g)
        gone.add(g)
        order.append((g, value))
        for other in sorted(store.containing.get(g, ())):
            store.add(_replace(store.remove(other), g, value))
    live = [g for g in range(p.n_generators) if g not in gone]
    images: list[Word] = [()] * p.n_generators
    for k, g in enumerate(live):
        images[g] = (k + 1,)
    for g, value in reversed(order):
        images[g] = substitute(value, images)
    relators = []
    for rid in sorted(store.words):
        r = cyclic_reduce(substitute(store.words[rid], images))
        if r:
            relators.append(r)
    return TietzeResult(GroupPresentation(len(live), tuple(relators)), tuple(images))


def tietze_simplify(p: GroupPresentation, budget: int = DEFAULT_BUDGET) -> GroupPresentation:
    return tietze_reduce(p, budget).presentation
