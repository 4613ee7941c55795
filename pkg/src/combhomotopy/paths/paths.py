"""Paths on the integral line as based finite edge sequences."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..core.truncated import TruncDirSet, TruncMap
from ..errors import InputError, UnsupportedOperation
from .delays import Delay, Support


@dataclass(frozen=True)
class PathSeq:
    """A path carried on the window ``[base, base + len(edges)]``.

    Outside the window the path is extended by degenerate edges, so it is
    constant at ``start`` to the left and at ``end`` to the right.
    """

    context: TruncDirSet = field(compare=False, repr=False)
    start: int
    edges: tuple[int, ...] = ()
    base: int = 0

    def __post_init__(self):
        ctx = self.context
        object.__setattr__(self, "edges", tuple(self.edges))
        if not 0 <= self.start < ctx.n_vertices:
            raise InputError(f"start vertex {self.start} outside the space")
        here = self.start
        for k, e in enumerate(self.edges):
            if not 0 <= e < ctx.n_edges:
                raise InputError(f"unknown edge id {e}")
            if ctx.src[e] != here:
                raise InputError(f"edge {e} at position {k} does not start where the path is")
            here = ctx.dst[e]
        object.__setattr__(self, "end", here)

    @classmethod
    def from_vertices(cls, context: TruncDirSet, vertices: Sequence[int], base: int = 0):
        """Path through the given vertices of a simple set (repeats give degenerate steps)."""
        if not vertices:
            raise InputError("a path needs at least one vertex")
        edges = [context.edge_between(x, y) for x, y in zip(vertices, vertices[1:])]
        return cls(context, vertices[0], tuple(edges), base)

    @classmethod
    def constant(cls, context, v):
        return cls(context, v, (), 0)

    @property
    def window(self) -> Support:
        return Support(self.base, self.base + len(self.edges))

    def edge_at(self, i: int) -> int:
        """The edge from i to i+1."""
        k = i - self.base
        if k < 0:
            return self.start
        if k >= len(self.edges):
            return self.end
        return self.edges[k]

    def vertex_at(self, i: int) -> int:
        k = i - self.base
        if k <= 0:
            return self.start
        if k > len(self.edges):
            return self.end
        return self.context.dst[self.edges[k - 1]]

    def vertices(self) -> list[int]:
        return [self.vertex_at(i) for i in range(self.window.lo, self.window.hi + 1)]

    def is_constant(self) -> bool:
        return all(self.context.is_degenerate(e) for e in self.edges)

    def trimmed(self) -> "PathSeq":
        """Same line, carried on its standard support."""
        s = standard_support(self)
        return PathSeq(self.context, self.vertex_at(s.lo),
                       tuple(self.edge_at(i) for i in range(s.lo, s.hi)), s.lo)

    def same_line(self, other: "PathSeq") -> bool:
        return self.trimmed() == other.trimmed()

    def to_json(self) -> dict:
        return {"base": self.base, "start": self.start, "edges": list(self.edges)}

    @classmethod
    def from_json(cls, context, doc) -> "PathSeq":
        try:
            return cls(context, int(doc["start"]), tuple(int(e) for e in doc.get("edges", ())),
                       int(doc.get("base", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed path document: {exc}") from exc


def standard_support(a: PathSeq) -> Support:
    live = [k for k, e in enumerate(a.edges) if not a.context.is_degenerate(e)]
    if not live:
        return Support(0, 0)
    return Support(a.base + live[0], a.base + live[-1] + 1)


def _same_context(a, b):
    if a.context is not b.context and a.context != b.context:
        raise InputError("paths live in different spaces")


def concatenate(a: PathSeq, b: PathSeq) -> PathSeq:
    """Standard concatenation, pasting the two standard supports end to start."""
    _same_context(a, b)
    if a.end != b.start:
        raise InputError(f"paths are not consecutive: {a.end} != {b.start}")
    r, s = standard_support(a), standard_support(b)
    edges = [a.edge_at(i) for i in range(r.lo, r.hi)] + [b.edge_at(i) for i in range(s.lo, s.hi)]
    return PathSeq(a.context, a.start, tuple(edges), r.lo + s.lo)


def _require_symmetric(a, what):
    if not a.context.symmetric:
        raise UnsupportedOperation(f"{what} needs a symmetric context")


def reverse(a: PathSeq) -> PathSeq:
    _require_symmetric(a, "reversal")
    rev = a.context.rev
    return PathSeq(a.context, a.end, tuple(rev[e] for e in reversed(a.edges)), -a.window.hi)


def translate(a: PathSeq, k: int) -> PathSeq:
    return PathSeq(a.context, a.start, a.edges, a.base + k)


def apply_delay(a: PathSeq, d: Delay) -> PathSeq:
    """The delayed line t -> a(d(t)); held steps become degenerate edges."""
    lo = min(a.window.lo, d.window.lo)
    hi = max(a.window.hi, d.window.hi) + d.shift + 1
    edges = []
    for t in range(lo, hi):
        x, y = d(t), d(t + 1)
        edges.append(a.vertex_at(x) if x == y else a.edge_at(x))
    return PathSeq(a.context, a.vertex_at(d(lo)), tuple(edges), lo)


def delay_normal_form(a: PathSeq) -> PathSeq:
    live = tuple(e for e in a.edges if not a.context.is_degenerate(e))
    return PathSeq(a.context, a.start, live, 0)


def congruent(a: PathSeq, b: PathSeq) -> bool:
    _same_context(a, b)
    return delay_normal_form(a) == delay_normal_form(b)


def strong_normal_form(a: PathSeq) -> PathSeq:
    """Delay normal form with every backtrack e, rev(e) cancelled."""
    _require_symmetric(a, "strong reduction")
    rev = a.context.rev
    stack: list[int] = []
    for e in delay_normal_form(a).edges:
        if stack and stack[-1] == rev[e]:
            stack.pop()
        else:
            stack.append(e)
    return PathSeq(a.context, a.start, tuple(stack), 0)


def map_path(f: TruncMap, a: PathSeq) -> PathSeq:
    if f.source is not a.context and f.source != a.context:
        raise InputError("map does not start at the path's space")
    return PathSeq(f.target, f.vmap[a.start], tuple(f.emap[e] for e in a.edges), a.base)
