"""Two-truncated simplicial sets (symmetric and directed), their maps and colimits.

Edge ids ``0 .. n_vertices-1`` are reserved for the degenerate edge at each
vertex, so ``deg(v) == v``; nondegenerate edges follow.  Triangles are kept as
a generating set of edge triples ``(a, b, c)`` meaning "a then b is c".
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from ..errors import InputError
from ..unionfind import UnionFind
from .spaces import Complex, DirectedComplex


@dataclass(frozen=True)
class TruncDirSet:
    n_vertices: int
    src: tuple[int, ...]
    dst: tuple[int, ...]
    triangles: tuple[tuple[int, int, int], ...] = ()

    symmetric = False

    def __post_init__(self):
        object.__setattr__(self, "src", tuple(self.src))
        object.__setattr__(self, "dst", tuple(self.dst))
        object.__setattr__(self, "triangles", tuple(sorted({tuple(t) for t in self.triangles})))
        self._validate()

    def _validate(self):
        n, m = self.n_vertices, len(self.src)
        if n < 0 or len(self.dst) != m or m < n:
            raise InputError("edge arrays must cover the degenerate edges of every vertex")
        for e in range(m):
            if not (0 <= self.src[e] < n and 0 <= self.dst[e] < n):
                raise InputError(f"edge {e} has an endpoint outside the vertex set")
        for v in range(n):
            if self.src[v] != v or self.dst[v] != v:
                raise InputError(f"edge {v} must be the degenerate edge at vertex {v}")
        for a, b, c in self.triangles:
            if not all(0 <= x < m for x in (a, b, c)):
                raise InputError(f"triangle {(a, b, c)} uses an unknown edge")
            if self.dst[a] != self.src[b] or self.src[a] != self.src[c] or self.dst[b] != self.dst[c]:
                raise InputError(f"triangle {(a, b, c)} has incompatible faces")

    @classmethod
    def build(cls, n_vertices: int, edges: Sequence[tuple[int, int]], triangles=()):
        """Nondegenerate edges are given as (src, dst) pairs and receive ids n, n+1, ..."""
        src = list(range(n_vertices)) + [e[0] for e in edges]
        dst = list(range(n_vertices)) + [e[1] for e in edges]
        return cls(n_vertices, tuple(src), tuple(dst), tuple(triangles))

    @property
    def n_edges(self) -> int:
        return len(self.src)

    def edges(self) -> range:
        """Ids of the nondegenerate edges."""
        return range(self.n_vertices, self.n_edges)

    def is_degenerate(self, e: int) -> bool:
        return e < self.n_vertices

    @cached_property
    def out_edges(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n_vertices)]
        for e in self.edges():
            out[self.src[e]].append(e)
        return tuple(tuple(x) for x in out)

    @cached_property
    def _pair_index(self):
        index: dict[tuple[int, int], list[int]] = {}
        for e in self.edges():
            index.setdefault((self.src[e], self.dst[e]), []).append(e)
        return index

    def edges_between(self, x: int, y: int) -> list[int]:
        return list(self._pair_index.get((x, y), ()))

    def edge_between(self, x: int, y: int) -> int:
        """The unique edge x -> y of a simple set (the degenerate one when x == y)."""
        if x == y:
            return x
        found = self._pair_index.get((x, y), ())
        if len(found) != 1:
            raise InputError(f"expected exactly one edge {x}->{y}, found {len(found)}")
        return found[0]

    def is_simple(self) -> bool:
        return all(len(v) == 1 and x != y for (x, y), v in self._pair_index.items())

    def _degenerate_triples(self, a, b):
        out = set()
        if self.is_degenerate(b):
            out.add(a)
        if self.is_degenerate(a):
            out.add(b)
        return out

    @cached_property
    def triangle_closure(self) -> frozenset:
        """Stored triangles plus the degenerate ones every simplicial set has."""
        closure = set(self.triangles)
        for a in range(self.n_edges):
            closure.add((a, self.dst[a], a))
            closure.add((self.src[a], a, a))
        return frozenset(closure)

    @cached_property
    def composites(self) -> dict[tuple[int, int], frozenset]:
        index: dict[tuple[int, int], set] = {}
        for a, b, c in self.triangle_closure:
            index.setdefault((a, b), set()).add(c)
        return {k: frozenset(v) for k, v in index.items()}

    def has_triangle(self, a, b, c) -> bool:
        return (a, b, c) in self.triangle_closure

    def to_json(self) -> dict:
        return {
            "kind": "trunc_dir",
            "vertices": self.n_vertices,
            "edges": [[self.src[e], self.dst[e]] for e in self.edges()],
            "triangles": [list(t) for t in self.triangles],
        }


@dataclass(frozen=True)
class TruncSymSet(TruncDirSet):
    rev: tuple[int, ...] = ()

    symmetric = True

    def __post_init__(self):
        object.__setattr__(self, "rev", tuple(self.rev))
        super().__post_init__()

    def _validate(self):
        super()._validate()
        m = self.n_edges
        if len(self.rev) != m:
            raise InputError("rev must be given for every edge")
        for e in range(m):
            r = self.rev[e]
            if not 0 <= r < m or self.rev[r] != e:
                raise InputError(f"rev is not an involution at edge {e}")
            if self.src[r] != self.dst[e] or self.dst[r] != self.src[e]:
                raise InputError(f"rev of edge {e} does not swap its endpoints")
        for v in range(self.n_vertices):
            if self.rev[v] != v:
                raise InputError(f"degenerate edge {v} must be its own reverse")

    @classmethod
    def build(cls, n_vertices: int, edges: Sequence[tuple[int, int]], rev: Sequence[int] = None,
              triangles=()):
        """Nondegenerate edges get ids n, n+1, ...; ``rev`` lists global ids per edge."""
        if rev is None:
            raise InputError("a symmetric set needs its reversal")
        src = list(range(n_vertices)) + [e[0] for e in edges]
        dst = list(range(n_vertices)) + [e[1] for e in edges]
        return cls(n_vertices, tuple(src), tuple(dst), tuple(triangles),
                   tuple(range(n_vertices)) + tuple(rev))

    @classmethod
    def from_simple(cls, n_vertices: int, pairs: Iterable[Iterable[int]], triples=()):
        """Symmetric set of a simple structure: both orientations of each pair, one
        triangle per linked 3-set {x<y<z}."""
        edges, rev, index = [], [], {}
        for p in sorted({tuple(sorted(p)) for p in pairs if len(set(p)) == 2}):
            x, y = p
            index[(x, y)] = n_vertices + len(edges)
            index[(y, x)] = n_vertices + len(edges) + 1
            edges += [(x, y), (y, x)]
            rev += [n_vertices + len(edges) - 1, n_vertices + len(edges) - 2]
        tris = []
        for t in triples:
            x, y, z = sorted(t)
            tris.append((index[(x, y)], index[(y, z)], index[(x, z)]))
        return cls.build(n_vertices, edges, rev, tris)

    @cached_property
    def triangle_closure(self) -> frozenset:
        """Closure under the symmetric-group action on each triangle, plus degenerate triples."""
        r = self.rev
        closure = set()
        for a, b, c in self.triangles:
            closure.update({(a, b, c), (r[a], c, b), (c, r[b], a),
                            (b, r[c], r[a]), (r[c], a, r[b]), (r[b], r[a], r[c])})
        for a in range(self.n_edges):
            closure.add((a, self.dst[a], a))
            closure.add((self.src[a], a, a))
            closure.add((a, r[a], self.src[a]))
        return frozenset(closure)

    def to_json(self) -> dict:
        out = super().to_json()
        out["kind"] = "trunc_sym"
        out["rev"] = [self.rev[e] for e in self.edges()]
        return out


def truncated_from_json(doc: dict):
    try:
        n = int(doc["vertices"])
        edges = [tuple(e) for e in doc.get("edges", [])]
        tris = [tuple(t) for t in doc.get("triangles", [])]
        if doc["kind"] == "trunc_sym":
            return TruncSymSet.build(n, edges, list(doc["rev"]), tris)
        if doc["kind"] == "trunc_dir":
            return TruncDirSet.build(n, edges, tris)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed truncated-set document: {exc}") from exc
    raise InputError(f"unknown space kind {doc.get('kind')!r}")


@dataclass(frozen=True)
class TruncMap:
    """Structure-preserving map; ``emap`` covers every edge id of the source."""

    source: TruncDirSet
    target: TruncDirSet
    vmap: tuple[int, ...]
    emap: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "vmap", tuple(self.vmap))
        object.__setattr__(self, "emap", tuple(self.emap))
        problem = self.problem()
        if problem:
            raise InputError(f"not a structure-preserving map: {problem}")

    def problem(self) -> str | None:
        s, t = self.source, self.target
        if s.symmetric != t.symmetric:
            return "source and target are of different kinds"
        if len(self.vmap) != s.n_vertices or len(self.emap) != s.n_edges:
            return "map arrays have the wrong length"
        if any(not 0 <= w < t.n_vertices for w in self.vmap):
            return "vertex image out of range"
        if any(not 0 <= f < t.n_edges for f in self.emap):
            return "edge image out of range"
        for v in range(s.n_vertices):
            if self.emap[v] != self.vmap[v]:
                return f"degenerate edge at {v} not sent to a degenerate edge"
        for e in range(s.n_edges):
            f = self.emap[e]
            if t.src[f] != self.vmap[s.src[e]] or t.dst[f] != self.vmap[s.dst[e]]:
                return f"edge {e} endpoints not preserved"
            if s.symmetric and self.emap[s.rev[e]] != t.rev[f]:
                return f"reversal not preserved at edge {e}"
        for a, b, c in s.triangles:
            if not t.has_triangle(self.emap[a], self.emap[b], self.emap[c]):
                return f"triangle {(a, b, c)} has no image triangle"
        return None

    @classmethod
    def from_vertex_map(cls, source, target, vmap):
        """Map between simple sets, determined by its vertex values."""
        emap = []
        for e in range(source.n_edges):
            emap.append(target.edge_between(vmap[source.src[e]], vmap[source.dst[e]]))
        return cls(source, target, vmap, emap)

    def then(self, other: "TruncMap") -> "TruncMap":
        """Composite: first self, then other."""
        return TruncMap(self.source, other.target,
                        [other.vmap[v] for v in self.vmap],
                        [other.emap[e] for e in self.emap])


def identity_map(x: TruncDirSet) -> TruncMap:
    return TruncMap(x, x, range(x.n_vertices), range(x.n_edges))


# -- embeddings and reflectors -----------------------------------------------

def two_skeleton(space: Complex) -> TruncSymSet:
    return TruncSymSet.from_simple(space.n_vertices, space.linked_pairs(), space.linked_triples())


def dir_two_skeleton(space: DirectedComplex) -> TruncDirSet:
    """Edges are the linked 2-words (x, y) with x != y; each linked 3-word
    (x, y, z) with no adjacent repeat gives a triangle (its third face is
    degenerate when x == z)."""
    n = space.n_vertices
    pairs = space.linked_words(2)
    index = {p: n + i for i, p in enumerate(pairs)}
    edge = lambda x, y: x if x == y else index[(x, y)]
    tris = [(edge(x, y), edge(y, z), edge(x, z)) for x, y, z in space.linked_words(3)]
    return TruncDirSet.build(n, pairs, tris)


def reflect_u(space: TruncSymSet) -> Complex:
    """Reflect into complexes: linked parts are the vertex sets of edges and triangles."""
    parts = [{space.src[e], space.dst[e]} for e in space.edges()]
    parts += [{space.src[a], space.dst[a], space.dst[b]} for a, b, _ in space.triangles]
    return Complex(space.n_vertices, parts)


def reflect_directed(space: TruncDirSet) -> DirectedComplex:
    words = [(space.src[e], space.dst[e]) for e in space.edges()]
    words += [(space.src[a], space.dst[a], space.dst[b]) for a, b, _ in space.triangles]
    return DirectedComplex(space.n_vertices, words)


def symmetrize(space: TruncDirSet) -> TruncSymSet:
    """Freely add a reverse for every nondegenerate edge."""
    if space.symmetric:
        return space
    n = space.n_vertices
    edges, rev = [], []
    for e in space.edges():
        edges.append((space.src[e], space.dst[e]))
    k = len(edges)
    edges += [(d, s) for s, d in edges]
    rev = [n + k + i for i in range(k)] + [n + i for i in range(k)]
    return TruncSymSet.build(n, edges, rev, space.triangles)


# -- colimits -------------------------------------------------------------------

@dataclass(frozen=True)
class Colimit:
    obj: TruncDirSet
    legs: tuple[TruncMap, ...]


def _same_kind(*spaces):
    kinds = {s.symmetric for s in spaces}
    if len(kinds) != 1:
        raise InputError("all spaces in a colimit must be of the same kind")
    return kinds.pop()


def quotient(parts: Sequence[TruncDirSet], vertex_pairs, edge_pairs) -> Colimit:
    """Quotient of a disjoint union by the given identifications (global ids)."""
    symmetric = _same_kind(*parts)
    v_off, e_off = [], []
    nv = ne = 0
    for p in parts:
        v_off.append(nv)
        e_off.append(ne)
        nv += p.n_vertices
        ne += p.n_edges
    src, dst, rev, is_deg = [0] * ne, [0] * ne, [0] * ne, [None] * ne
    for p, vo, eo in zip(parts, v_off, e_off):
        for e in range(p.n_edges):
            src[eo + e] = vo + p.src[e]
            dst[eo + e] = vo + p.dst[e]
            rev[eo + e] = eo + (p.rev[e] if symmetric else e)
            if p.is_degenerate(e):
                is_deg[eo + e] = vo + e
    vuf, euf = UnionFind(nv), UnionFind(ne)
    for a, b in vertex_pairs:
        vuf.union(a, b)
    for a, b in edge_pairs:
        euf.union(a, b)
        vuf.union(src[a], src[b])
        vuf.union(dst[a], dst[b])
    vlabel = vuf.labels()
    n = max(vlabel, default=-1) + 1
    new_id: dict[int, int] = {}
    for e in range(ne):
        if is_deg[e] is not None:
            new_id.setdefault(euf.find(e), vlabel[is_deg[e]])
    nxt = n
    new_src, new_dst = list(range(n)), list(range(n))
    reps = {}
    for e in range(ne):
        root = euf.find(e)
        if root not in new_id:
            new_id[root] = nxt
            nxt += 1
            new_src.append(vlabel[src[e]])
            new_dst.append(vlabel[dst[e]])
        reps.setdefault(new_id[root], e)
    elabel = [new_id[euf.find(e)] for e in range(ne)]
    tris = set()
    for p, eo in zip(parts, e_off):
        for a, b, c in p.triangles:
            tris.add((elabel[eo + a], elabel[eo + b], elabel[eo + c]))
    if symmetric:
        new_rev = [0] * nxt
        for f, e in reps.items():
            new_rev[f] = elabel[rev[e]]
        obj = TruncSymSet(n, tuple(new_src), tuple(new_dst), (), tuple(new_rev))
    else:
        obj = TruncDirSet(n, tuple(new_src), tuple(new_dst), ())
    tris = {t for t in tris if t not in obj.triangle_closure}
    if symmetric:
        obj = TruncSymSet(n, obj.src, obj.dst, tuple(tris), obj.rev)
    else:
        obj = TruncDirSet(n, obj.src, obj.dst, tuple(tris))
    legs = tuple(
        TruncMap(p, obj, vlabel[vo:vo + p.n_vertices], elabel[eo:eo + p.n_edges])
        for p, vo, eo in zip(parts, v_off, e_off))
    return Colimit(obj, legs)


def pushout(f: TruncMap, g: TruncMap) -> Colimit:
    """Pushout of X <-f- A -g-> Y; legs are the maps X -> P and Y -> P."""
    if f.source is not g.source and f.source != g.source:
        raise InputError("span maps must share their source")
    x, y = f.target, g.target
    vpairs = [(f.vmap[a], x.n_vertices + g.vmap[a]) for a in range(f.source.n_vertices)]
    epairs = [(f.emap[e], x.n_edges + g.emap[e]) for e in range(f.source.n_edges)]
    return quotient([x, y], vpairs, epairs)


def coequalizer(f: TruncMap, g: TruncMap) -> Colimit:
    if f.source != g.source or f.target != g.target:
        raise InputError("coequalizer needs two parallel maps")
    vpairs = list(zip(f.vmap, g.vmap))
    epairs = list(zip(f.emap, g.emap))
    return quotient([f.target], vpairs, epairs)


def disjoint_union(*spaces) -> Colimit:
    return quotient(list(spaces), (), ())


def point(symmetric=True) -> TruncDirSet:
    if symmetric:
        return TruncSymSet.build(1, [], [])
    return TruncDirSet.build(1, [])


def vertex_inclusion(target: TruncDirSet, v: int) -> TruncMap:
    return TruncMap(point(target.symmetric), target, (v,), (v,))


# -- isomorphisms and map enumeration ------------------------------------------

def _edge_assignments(s, t, vmap, iso):
    """Backtrack edge images compatible with a vertex map; yields full emaps."""
    m = s.n_edges
    emap = [None] * m
    for v in range(s.n_vertices):
        emap[v] = vmap[v]
    used = set()
    order = list(s.edges())

    def step(k):
        if k == len(order):
            yield tuple(emap)
            return
        e = order[k]
        if emap[e] is not None:
            yield from step(k + 1)
            return
        x, y = vmap[s.src[e]], vmap[s.dst[e]]
        cands = t.edges_between(x, y)
        if not iso and x == y:
            cands = [x] + cands
        for f in cands:
            if iso and f in used:
                continue
            pending = [(e, f)]
            if s.symmetric:
                re, rf = s.rev[e], t.rev[f]
                if re != e:
                    if iso and (rf == f or rf in used):
                        continue
                    if emap[re] is not None and emap[re] != rf:
                        continue
                    pending.append((re, rf))
                elif rf != f and not (t.is_degenerate(f)):
                    continue
            for a, b in pending:
                emap[a] = b
                used.add(b)
            yield from step(k + 1)
            for a, b in pending:
                emap[a] = None
                used.discard(b)

    yield from step(0)


def _triangles_ok(s, t, emap):
    return all(t.has_triangle(emap[a], emap[b], emap[c]) for a, b, c in s.triangles)


def enumerate_truncated_maps(s: TruncDirSet, t: TruncDirSet):
    """All structure-preserving maps s -> t (small inputs only)."""
    _same_kind(s, t)
    n = s.n_vertices

    def vmaps(prefix):
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for w in range(t.n_vertices):
            yield from vmaps(prefix + [w])

    for vmap in vmaps([]):
        for emap in _edge_assignments(s, t, vmap, iso=False):
            if _triangles_ok(s, t, emap):
                yield TruncMap(s, t, vmap, emap)


def find_isomorphism(s: TruncDirSet, t: TruncDirSet) -> TruncMap | None:
    if s.symmetric != t.symmetric or s.n_vertices != t.n_vertices or s.n_edges != t.n_edges:
        return None
    n = s.n_vertices

    def signature(x, v):
        out = sorted((x.src[e] == x.dst[e]) for e in x.out_edges[v])
        inn = sum(1 for e in x.edges() if x.dst[e] == v)
        return (len(x.out_edges[v]), inn, tuple(out))

    sig_s = [signature(s, v) for v in range(n)]
    sig_t = [signature(t, v) for v in range(n)]
    vmap = [None] * n
    taken = set()

    def assign(v):
        if v == n:
            for emap in _edge_assignments(s, t, vmap, iso=True):
                if _triangles_ok(s, t, emap) and _triangles_ok_inverse(s, t, emap):
                    return TruncMap(s, t, tuple(vmap), emap)
            return None
        for w in range(n):
            if w in taken or sig_s[v] != sig_t[w]:
                continue
            ok = all(len(s.edges_between(v, u)) == len(t.edges_between(w, vmap[u]))
                     and len(s.edges_between(u, v)) == len(t.edges_between(vmap[u], w))
                     for u in range(v) )
            if not ok or len(s.edges_between(v, v)) != len(t.edges_between(w, w)):
                continue
            vmap[v] = w
            taken.add(w)
            found = assign(v + 1)
            if found:
                return found
            taken.discard(w)
            vmap[v] = None
        return None

    return assign(0)


def _triangles_ok_inverse(s, t, emap):
    inverse = {f: e for e, f in enumerate(emap)}
    return all(s.has_triangle(inverse[a], inverse[b], inverse[c]) for a, b, c in t.triangles)
