"""Bounded enumeration of hom-sets in presented categories and groupoids."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..core.truncated import TruncDirSet, TruncSymSet
from ..errors import InputError
from ..unionfind import UnionFind
from .cosets import DEFAULT_COSET_LIMIT, CosetLimitExceeded, enumerate_cosets
from .presentations import (CategoryPresentation, GroupoidPresentation, GroupPresentation,
                            edge_path_groupoid, fundamental_category, vertex_group_data)
from .tietze import tietze_reduce
from .words import Word, free_reduce

DEFAULT_WORD_BUDGET = 200_000


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class HomCount:
    """Class count of words x -> y of length at most ``max_len``.

    ``exact``: no relation rewrite leads from a counted word past the bound,
    so the count equals the number of true classes with a short representative.
    ``saturated``: exact, and every longer word is equal to a shorter one, so
    the count no longer changes as the bound grows.
    """

    count: int
    exact: bool
    saturated: bool
    classes: tuple[tuple[Word, ...], ...] = ()

    def to_json(self):
        return {"count": self.count, "exact": self.exact, "saturated": self.saturated}


def words_from(p: GroupoidPresentation, x: int, max_len: int,
               budget: int = DEFAULT_WORD_BUDGET) -> dict[Word, int]:
    """Every composable word starting at x of length <= max_len, mapped to its end."""
    out = {(): x}
    layer = [((), x)]
    for _ in range(max_len):
        nxt = []
        for w, end in layer:
            for lt in p.out_letters(end):
                nxt.append((w + (lt,), p.arrow(lt)[1]))
        out.update(nxt)
        if len(out) > budget:
            raise BudgetExceeded(budget)
        layer = nxt
    return out


def _rules(p: GroupoidPresentation):
    rules = []
    for lhs, rhs in p.relations:
        obj = p.relation_object(lhs, rhs)
        rules.append((lhs, rhs, obj))
        rules.append((rhs, lhs, obj))
    return rules


def _objects_along(p, start, word):
    objs = [start]
    for lt in word:
        objs.append(p.arrow(lt)[1])
    return objs


def rewrites(p: GroupoidPresentation, start: int, word: Word, rules=None):
    """All words one relation application away (either direction)."""
    rules = _rules(p) if rules is None else rules
    objs = None
    for lhs, rhs, obj in rules:
        k = len(lhs)
        if k == 0:
            if objs is None:
                objs = _objects_along(p, start, word)
            for i, o in enumerate(objs):
                if o == obj:
                    yield word[:i] + rhs + word[i:]
            continue
        for i in range(len(word) - k + 1):
            if word[i:i + k] == lhs:
                yield word[:i] + rhs + word[i + k:]


def _classes(p, start, words, bound, rules):
    index = {w: i for i, w in enumerate(words)}
    uf = UnionFind(len(words))
    escaped = False
    for w, i in index.items():
        for v in rewrites(p, start, w, rules):
            j = index.get(v)
            if j is not None:
                uf.union(i, j)
            elif len(v) > bound:
                escaped = True
    return uf, escaped


def hom_count(p: GroupoidPresentation, x: int, y: int, max_len: int,
              budget: int = DEFAULT_WORD_BUDGET) -> HomCount:
    """Classes of words x -> y up to length ``max_len`` under the relation congruence.

    For a groupoid presentation the free cancellations g g^-1 = 1 are included
    as relations, so the bound is almost never exact there; use
    :func:`groupoid_hom_count` for a word-problem based count instead.
    """
    for v in (x, y):
        if not 0 <= v < p.n_objects:
            raise InputError(f"object {v} outside 0..{p.n_objects - 1}")
    if max_len < 0:
        raise InputError("max_len must be nonnegative")
    rules = _rules(p)
    if p.invertible:
        for g, (s, d) in enumerate(p.generators):
            rules.append(((g + 1, -(g + 1)), (), s))
            rules.append(((-(g + 1), g + 1), (), d))
            rules.append(((), (g + 1, -(g + 1)), s))
            rules.append(((), (-(g + 1), g + 1), d))
    reach = words_from(p, x, max_len + 1, budget)
    short = sorted((w for w, e in reach.items() if e == y and len(w) <= max_len),
                   key=lambda w: (len(w), w))
    uf, escaped = _classes(p, x, short, max_len, rules)
    blocks = tuple(tuple(short[i] for i in block) for block in uf.classes())
    exact = not escaped
    saturated = False
    if exact:
        longer = sorted(reach, key=lambda w: (len(w), w))
        uf2, _ = _classes(p, x, longer, max_len + 1, rules)
        has_short = set()
        for i, w in enumerate(longer):
            if len(w) <= max_len:
                has_short.add(uf2.find(i))
        saturated = all(uf2.find(i) in has_short
                        for i, w in enumerate(longer) if len(w) == max_len + 1)
    return HomCount(len(blocks), exact, saturated, blocks)


class WordProblem:
    """Decides equality in a group presentation when it is free after Tietze
    reduction or when coset enumeration over the trivial subgroup finishes."""

    def __init__(self, p: GroupPresentation, coset_limit: int = DEFAULT_COSET_LIMIT):
        self.reduction = tietze_reduce(p)
        q = self.reduction.presentation
        self.table = None
        self.solved = True
        if q.relators:
            try:
                self.table = enumerate_cosets(q, (), coset_limit)
            except CosetLimitExceeded:
                self.solved = False

    def normal_form(self, word: Sequence[int]):
        if not self.solved:
            return None
        w = self.reduction.translate(word)
        if self.table is None:
            return free_reduce(w)
        return self.table.act(0, w)


@dataclass(frozen=True)
class GroupoidCount:
    count: int
    exact: bool

    def to_json(self):
        return {"count": self.count, "exact": self.exact}


def groupoid_hom_count(p: GroupoidPresentation, x: int, y: int, max_len: int,
                       budget: int = DEFAULT_WORD_BUDGET,
                       coset_limit: int = DEFAULT_COSET_LIMIT) -> GroupoidCount:
    """Distinct arrows x -> y that some word of length <= max_len represents."""
    if not p.invertible:
        raise InputError("groupoid_hom_count needs a groupoid presentation")
    data = vertex_group_data(p, x)
    if y not in data.tree_words:
        return GroupoidCount(0, True)
    solver = WordProblem(data.presentation, coset_limit)
    if not solver.solved:
        return GroupoidCount(0, False)
    forms = {solver.normal_form(data.element(w))
             for w, end in words_from(p, x, max_len, budget).items() if end == y}
    return GroupoidCount(len(forms), True)


@dataclass(frozen=True)
class MonoidTable:
    """Loop classes at a base point with their partial product table.

    ``table[i][j]`` is the class of the product, or None when the product's
    representative is longer than the bound.
    """

    base: int
    elements: tuple[Word, ...]
    table: tuple[tuple[int | None, ...], ...]
    exact: bool
    saturated: bool

    def to_json(self):
        return {"base": self.base, "elements": [list(w) for w in self.elements],
                "table": [list(r) for r in self.table], "exact": self.exact,
                "saturated": self.saturated}


def pi_monoid(space, base: int, max_len: int, budget: int = DEFAULT_WORD_BUDGET) -> MonoidTable:
    """Loop classes at ``base`` in the fundamental category, with concatenation."""
    if isinstance(space, TruncDirSet) and not isinstance(space, TruncSymSet):
        p = fundamental_category(space)
    elif isinstance(space, CategoryPresentation):
        p = space
    else:
        raise InputError("pi_monoid needs a directed truncated set or a category presentation")
    hc = hom_count(p, base, base, max_len, budget)
    reps = tuple(block[0] for block in hc.classes)
    where = {w: i for i, block in enumerate(hc.classes) for w in block}
    table = tuple(tuple(where.get(a + b) for b in reps) for a in reps)
    return MonoidTable(base, reps, table, hc.exact, hc.saturated)


def presentation_count(space, x: int, y: int, max_len: int,
                       budget: int = DEFAULT_WORD_BUDGET):
    """Presentation-side class count: (count, exact)."""
    if isinstance(space, TruncSymSet):
        r = groupoid_hom_count(edge_path_groupoid(space), x, y, max_len, budget)
        return r.count, r.exact
    r = hom_count(fundamental_category(space), x, y, max_len, budget)
    return r.count, r.exact
