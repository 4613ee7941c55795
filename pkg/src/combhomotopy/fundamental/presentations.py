"""Finite presentations of fundamental groupoids, categories and vertex groups."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from ..core.spaces import Complex, DirectedComplex
from ..core.truncated import TruncDirSet, TruncSymSet
from ..errors import InputError
from ..unionfind import UnionFind
from .words import Word, cyclic_reduce, free_reduce, letter, substitute


@dataclass(frozen=True)
class GroupoidPresentation:
    """Objects 0..n-1, generating arrows and relations between parallel words.

    ``edge_words`` (optional) records the word of each edge of the space the
    presentation was computed from, indexed by edge id.
    """

    n_objects: int
    generators: tuple[tuple[int, int], ...]
    relations: tuple[tuple[Word, Word], ...] = ()
    edge_words: tuple[Word, ...] = field(default=(), compare=False)

    invertible = True

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(tuple(g) for g in self.generators))
        object.__setattr__(self, "relations",
                           tuple((tuple(l), tuple(r)) for l, r in self.relations))
        object.__setattr__(self, "edge_words", tuple(tuple(w) for w in self.edge_words))
        for s, d in self.generators:
            if not (0 <= s < self.n_objects and 0 <= d < self.n_objects):
                raise InputError(f"generator endpoint outside 0..{self.n_objects - 1}")
        for lhs, rhs in self.relations:
            self.relation_object(lhs, rhs)

    def arrow(self, x: int) -> tuple[int, int]:
        """Source and target of a letter."""
        g = abs(x) - 1
        if x == 0 or g >= len(self.generators):
            raise InputError(f"letter {x} out of range")
        if x < 0 and not self.invertible:
            raise InputError("inverse letters are not allowed in a category presentation")
        s, d = self.generators[g]
        return (s, d) if x > 0 else (d, s)

    def walk(self, start: int, word: Sequence[int]) -> int:
        """End object of a word read from ``start``; raises if it is ill-typed."""
        here = start
        for x in word:
            s, d = self.arrow(x)
            if s != here:
                raise InputError(f"word {tuple(word)} is not composable at letter {x}")
            here = d
        return here

    def relation_object(self, lhs, rhs):
        word = lhs or rhs
        if not word:
            return None
        start = self.arrow(word[0])[0]
        if self.walk(start, lhs) != self.walk(start, rhs):
            raise InputError(f"relation {lhs} = {rhs} relates non-parallel words")
        return start

    @cached_property
    def _letters_at(self):
        index = [[] for _ in range(self.n_objects)]
        for g, (s, d) in enumerate(self.generators):
            index[s].append(letter(g))
            if self.invertible:
                index[d].append(letter(g, -1))
        return index

    def out_letters(self, obj: int) -> list[int]:
        """Letters readable from ``obj``, ordered by generator then sign."""
        return self._letters_at[obj]

    def to_json(self) -> dict:
        return {
            "kind": "groupoid_presentation" if self.invertible else "category_presentation",
            "objects": self.n_objects,
            "generators": [list(g) for g in self.generators],
            "relations": [[list(l), list(r)] for l, r in self.relations],
        }


@dataclass(frozen=True)
class CategoryPresentation(GroupoidPresentation):
    invertible = False


@dataclass(frozen=True)
class GroupPresentation:
    n_generators: int
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        rels = tuple(tuple(r) for r in self.relators)
        for r in rels:
            if any(x == 0 or abs(x) > self.n_generators for x in r):
                raise InputError(f"relator {r} uses a letter out of range")
        object.__setattr__(self, "relators", rels)

    def is_trivial_presentation(self) -> bool:
        return self.n_generators == 0 and not self.relators

    def to_json(self) -> dict:
        return {"generators": self.n_generators, "relators": [list(r) for r in self.relators]}


def pi0(space) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    n = space.n_objects if isinstance(space, GroupoidPresentation) else space.n_vertices
    uf = UnionFind(n)
    if isinstance(space, Complex):
        for f in space.facets:
            f = sorted(f)
            for v in f[1:]:
                uf.union(f[0], v)
    elif isinstance(space, DirectedComplex):
        for g in space.generators:
            for v in g[1:]:
                uf.union(g[0], v)
    elif isinstance(space, TruncDirSet):
        for e in space.edges():
            uf.union(space.src[e], space.dst[e])
    elif isinstance(space, GroupoidPresentation):
        for s, d in space.generators:
            uf.union(s, d)
    else:
        raise InputError(f"no components for {type(space).__name__}")
    return uf.classes()


def _relation(lhs, rhs):
    lhs, rhs = tuple(lhs), tuple(rhs)
    return None if lhs == rhs else (lhs, rhs)


def edge_path_groupoid(space: TruncSymSet) -> GroupoidPresentation:
    """One generator per reversal pair of nondegenerate edges, one relation per triangle."""
    if not space.symmetric:
        raise InputError("the edge-path groupoid needs a symmetric set")
    src, dst, rev = space.src, space.dst, space.rev
    words: list = [()] * space.n_edges
    assigned = [space.is_degenerate(e) for e in range(space.n_edges)]
    generators, relations = [], []
    for e in space.edges():
        if assigned[e]:
            continue
        r = rev[e]
        chosen = min(e, r, key=lambda x: (src[x], dst[x], x))
        g = len(generators)
        generators.append((src[chosen], dst[chosen]))
        words[chosen] = (letter(g),)
        assigned[e] = assigned[r] = True
        if r == e:
            relations.append(((letter(g), letter(g)), ()))
        else:
            words[r if chosen == e else e] = (letter(g, -1),)
    for a, b, c in space.triangles:
        rel = _relation(words[a] + words[b], words[c])
        if rel and free_reduce(rel[0]) != free_reduce(rel[1]):
            relations.append(rel)
    return GroupoidPresentation(space.n_vertices, tuple(generators), tuple(relations), tuple(words))


def fundamental_category(space: TruncDirSet) -> CategoryPresentation:
    """Generators are the nondegenerate edges in id order; triangles give a.b = c."""
    n = space.n_vertices
    words = [() if space.is_degenerate(e) else (letter(e - n),) for e in range(space.n_edges)]
    generators = [(space.src[e], space.dst[e]) for e in space.edges()]
    relations = []
    for a, b, c in space.triangles:
        rel = _relation(words[a] + words[b], words[c])
        if rel:
            relations.append(rel)
    return CategoryPresentation(n, tuple(generators), tuple(relations), tuple(words))


@dataclass(frozen=True)
class VertexGroup:
    """Vertex group at ``base`` with the data needed to translate groupoid words."""

    presentation: GroupPresentation
    base: int
    component: tuple[int, ...]
    tree_words: dict = field(compare=False)
    images: tuple[Word, ...] = field(compare=False)

    def element(self, word: Sequence[int]) -> Word:
        """Group word of a groupoid word between two objects of the component."""
        return substitute(word, self.images)


def vertex_group_data(p: GroupoidPresentation, base: int) -> VertexGroup:
    if not p.invertible:
        raise InputError("vertex groups need a groupoid presentation")
    if not 0 <= base < p.n_objects:
        raise InputError(f"base {base} outside the objects 0..{p.n_objects - 1}")
    tree_words = {base: ()}
    tree_gens = set()
    queue = deque([base])
    while queue:
        x = queue.popleft()
        for lt in p.out_letters(x):
            y = p.arrow(lt)[1]
            if y not in tree_words:
                tree_words[y] = tree_words[x] + (lt,)
                tree_gens.add(abs(lt) - 1)
                queue.append(y)
    images: list[Word] = []
    count = 0
    for g, (s, d) in enumerate(p.generators):
        if g in tree_gens or s not in tree_words:
            images.append(())
        else:
            count += 1
            images.append((count,))
    relators = []
    seen = set()
    for lhs, rhs in p.relations:
        word = lhs or rhs
        if not word or p.arrow(word[0])[0] not in tree_words:
            continue
        r = cyclic_reduce(substitute(lhs, images) + tuple(-x for x in reversed(substitute(rhs, images))))
        if r and r not in seen:
            seen.add(r)
            relators.append(r)
    return VertexGroup(GroupPresentation(count, tuple(relators)), base,
                       tuple(sorted(tree_words)), tree_words, tuple(images))


def vertex_group(p: GroupoidPresentation, base: int) -> GroupPresentation:
    return vertex_group_data(p, base).presentation
