"""Simple combinatorial spaces: complexes, tolerance sets, directed complexes, step sets."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from ..errors import InputError


def dedup_adjacent(word: Sequence[int]) -> tuple[int, ...]:
    out = []
    for x in word:
        if not out or out[-1] != x:
            out.append(x)
    return tuple(out)


def is_subsequence(small: Sequence[int], big: Sequence[int]) -> bool:
    it = iter(big)
    return all(any(x == y for y in it) for x in small)


def _check_vertices(n, vertices):
    for v in vertices:
        if not isinstance(v, int) or v < 0 or v >= n:
            raise InputError(f"unknown vertex id {v!r} (space has {n} vertices)")


def _maximal_sets(sets):
    """Drop every set contained in another one of the family."""
    uniq = sorted({frozenset(s) for s in sets}, key=lambda s: (-len(s), sorted(s)))
    kept: list[frozenset] = []
    by_vertex: dict[int, list[int]] = {}
    for s in uniq:
        if s:
            anchor = min(s, key=lambda v: len(by_vertex.get(v, ())))
            if any(s <= kept[i] for i in by_vertex.get(anchor, ())):
                continue
        elif kept:
            continue
        idx = len(kept)
        kept.append(s)
        for v in s:
            by_vertex.setdefault(v, []).append(idx)
    return kept


@dataclass(frozen=True)
class Complex:
    """Simplicial complex on vertices 0..n-1, stored by its maximal linked parts.

    Every singleton is linked; vertices not covered by a given facet get a
    singleton facet so that ``facets`` always covers the vertex set.
    """

    n_vertices: int
    facets: tuple[frozenset, ...]

    def __init__(self, n_vertices: int, facets: Iterable[Iterable[int]], *, maximal=False):
        facets = [frozenset(f) for f in facets]
        for f in facets:
            _check_vertices(n_vertices, f)
        covered = set().union(*facets) if facets else set()
        facets += [frozenset([v]) for v in range(n_vertices) if v not in covered]
        if not maximal:
            facets = _maximal_sets(facets)
        facets = tuple(sorted(facets, key=lambda f: (len(f), sorted(f))))
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "facets", facets)

    @cached_property
    def _facets_at(self):
        index: dict[int, list[frozenset]] = {}
        for f in self.facets:
            for v in f:
                index.setdefault(v, []).append(f)
        return index

    def is_linked(self, part: Iterable[int]) -> bool:
        part = frozenset(part)
        _check_vertices(self.n_vertices, part)
        if len(part) <= 1:
            return True
        v = next(iter(part))
        return any(part <= f for f in self._facets_at.get(v, ()))

    @property
    def dimension(self) -> int:
        return max((len(f) - 1 for f in self.facets), default=-1)

    def linked_subsets(self, size: int) -> list[tuple[int, ...]]:
        found = set()
        for f in self.facets:
            if len(f) >= size:
                found.update(combinations(sorted(f), size))
        return sorted(found)

    def linked_pairs(self):
        return self.linked_subsets(2)

    def linked_triples(self):
        return self.linked_subsets(3)


@dataclass(frozen=True)
class TolSet:
    """Reflexive symmetric relation; only the off-diagonal pairs are stored."""

    n_vertices: int
    edges: frozenset

    def __init__(self, n_vertices: int, edges: Iterable[Iterable[int]]):
        pairs = set()
        for e in edges:
            e = frozenset(e)
            _check_vertices(n_vertices, e)
            if len(e) == 2:
                pairs.add(e)
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "edges", frozenset(pairs))

    def tolerates(self, x: int, y: int) -> bool:
        return x == y or frozenset((x, y)) in self.edges

    def neighbours(self, x):
        return sorted(y for e in self.edges if x in e for y in e if y != x)


@dataclass(frozen=True)
class DirectedComplex:
    """Directed complex given by generator words.

    A word is linked when, after collapsing adjacent repeats, it is a
    subsequence of some generator.
    """

    n_vertices: int
    generators: tuple[tuple[int, ...], ...]

    def __init__(self, n_vertices: int, generators: Iterable[Sequence[int]]):
        gens = set()
        for g in generators:
            g = dedup_adjacent(g)
            _check_vertices(n_vertices, g)
            if g:
                gens.add(g)
        covered = {v for g in gens for v in g}
        gens.update((v,) for v in range(n_vertices) if v not in covered)
        # drop generators that are derived from longer ones
        ordered = sorted(gens, key=lambda g: (-len(g), g))
        kept = []
        for g in ordered:
            if not any(is_subsequence(g, h) for h in kept):
                kept.append(g)
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "generators", tuple(sorted(kept, key=lambda g: (len(g), g))))

    @cached_property
    def _generators_at(self):
        index: dict[int, list[tuple]] = {}
        for g in self.generators:
            for v in set(g):
                index.setdefault(v, []).append(g)
        return index

    def is_linked(self, word: Sequence[int]) -> bool:
        _check_vertices(self.n_vertices, word)
        w = dedup_adjacent(word)
        if len(w) <= 1:
            return True
        return any(is_subsequence(w, g) for g in self._generators_at.get(w[0], ()))

    def linked_words(self, length: int) -> list[tuple[int, ...]]:
        """Linked words of the given length with no adjacent repeats."""
        found = set()
        for g in self.generators:
            for idx in combinations(range(len(g)), length):
                w = tuple(g[i] for i in idx)
                if all(w[i] != w[i + 1] for i in range(length - 1)):
                    found.add(w)
        return sorted(found)


@dataclass(frozen=True)
class StepSet:
    """Reflexive precedence relation; the diagonal is implicit."""

    n_vertices: int
    steps: frozenset

    def __init__(self, n_vertices: int, steps: Iterable[tuple[int, int]]):
        pairs = set()
        for x, y in steps:
            _check_vertices(n_vertices, (x, y))
            if x != y:
                pairs.add((x, y))
        object.__setattr__(self, "n_vertices", n_vertices)
        object.__setattr__(self, "steps", frozenset(pairs))

    def precedes(self, x: int, y: int) -> bool:
        return x == y or (x, y) in self.steps


# -- functors between the simple categories ---------------------------------

def membership(space, part) -> bool:
    if isinstance(space, (Complex, DirectedComplex)):
        return space.is_linked(part)
    raise InputError(f"membership is defined for complexes, not {type(space).__name__}")


def tol_of(space: Complex) -> TolSet:
    return TolSet(space.n_vertices, space.linked_pairs())


def clique_complex(tol: TolSet, max_size: int | None = None) -> Complex:
    """Complex whose linked parts are the pairwise tolerant sets (optionally capped in size)."""
    adj = {v: set() for v in range(tol.n_vertices)}
    for e in tol.edges:
        x, y = tuple(e)
        adj[x].add(y)
        adj[y].add(x)
    cliques = []

    def expand(clique, candidates, excluded):
        if not candidates and not excluded:
            cliques.append(clique)
            return
        for v in sorted(candidates):
            expand(clique | {v}, candidates & adj[v], excluded & adj[v])
            candidates = candidates - {v}
            excluded = excluded | {v}

    expand(frozenset(), set(adj), set())
    if max_size is not None:
        capped = []
        for c in cliques:
            if len(c) <= max_size:
                capped.append(c)
            else:
                capped.extend(frozenset(s) for s in combinations(sorted(c), max_size))
        cliques = capped
    return Complex(tol.n_vertices, cliques)


def sym_forget(space: DirectedComplex) -> Complex:
    return Complex(space.n_vertices, [set(g) for g in space.generators])


def step_of(space: DirectedComplex) -> StepSet:
    return StepSet(space.n_vertices, [w for w in space.linked_words(2)])


def chain_complex(steps: StepSet) -> DirectedComplex:
    """Directed complex whose linked words are the step chains (x_p precedes x_q for p < q).

    Only antisymmetric relations have finitely many such chains up to repeats.
    """
    for x, y in steps.steps:
        if (y, x) in steps.steps:
            raise InputError(f"steps {x}->{y} and {y}->{x} give unbounded chains")
    succ = {v: [] for v in range(steps.n_vertices)}
    for x, y in sorted(steps.steps):
        succ[x].append(y)
    words = []

    def grow(word):
        extended = False
        for y in succ[word[-1]]:
            if y not in word and all(steps.precedes(x, y) for x in word):
                extended = True
                grow(word + (y,))
        if not extended:
            words.append(word)

    for v in range(steps.n_vertices):
        grow((v,))
    return DirectedComplex(steps.n_vertices, words)


def product(x, y):
    """Categorical product; vertex (a, b) gets id a * |Y| + b."""
    if isinstance(x, Complex) and isinstance(y, Complex):
        m = y.n_vertices
        facets = [{a * m + b for a in f for b in g} for f in x.facets for g in y.facets]
        return Complex(x.n_vertices * m, facets)
    if isinstance(x, DirectedComplex) and isinstance(y, DirectedComplex):
        m = y.n_vertices
        words = []
        for g in x.generators:
            for h in y.generators:
                words.extend(tuple(g[i] * m + h[j] for i, j in path)
                             for path in _staircases(len(g), len(h)))
        return DirectedComplex(x.n_vertices * m, words)
    raise InputError("product needs two complexes of the same kind")


def _staircases(p, q):
    """Monotone lattice paths from (0,0) to (p-1,q-1) with unit steps."""
    if p == 0 or q == 0:
        return
    stack = [((0, 0),)]
    while stack:
        path = stack.pop()
        i, j = path[-1]
        if (i, j) == (p - 1, q - 1):
            yield path
            continue
        if j + 1 < q:
            stack.append(path + ((i, j + 1),))
        if i + 1 < p:
            stack.append(path + ((i + 1, j),))


def projections(x, y):
    """Vertex maps of the two product projections."""
    m = y.n_vertices
    n = x.n_vertices * m
    return [v // m for v in range(n)], [v % m for v in range(n)]


def is_map(source, target, vmap) -> bool:
    """Whether a vertex map between simple spaces preserves linked parts/words."""
    if len(vmap) != source.n_vertices:
        return False
    if isinstance(source, Complex) and isinstance(target, Complex):
        return all(target.is_linked({vmap[v] for v in f}) for f in source.facets)
    if isinstance(source, DirectedComplex) and isinstance(target, DirectedComplex):
        return all(target.is_linked([vmap[v] for v in g]) for g in source.generators)
    raise InputError("map check needs two spaces of the same kind")


def enumerate_maps(source, target):
    """All structure-preserving vertex maps, by backtracking over vertices."""
    n = source.n_vertices
    if isinstance(source, Complex):
        constraints = [sorted(f) for f in source.facets]
        check = lambda vals: target.is_linked(set(vals))
    else:
        constraints = [list(g) for g in source.generators]
        check = target.is_linked
    by_last: dict[int, list[list[int]]] = {}
    for c in constraints:
        by_last.setdefault(max(c), []).append(c)
    vmap = [0] * n

    def assign(v):
        if v == n:
            yield tuple(vmap)
            return
        for w in range(target.n_vertices):
            vmap[v] = w
            if all(check([vmap[u] for u in c]) for c in by_last.get(v, ())):
                yield from assign(v + 1)

    yield from assign(0)

