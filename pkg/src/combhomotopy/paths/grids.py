"""Double paths on finite windows of the plane, for simple spaces."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from ..core.spaces import Complex, DirectedComplex
from ..errors import InputError
from .paths import PathSeq, standard_support


@dataclass(frozen=True)
class PathGrid:
    """``rows[t][s]`` is the vertex at (base_s + s, base_t + t)."""

    base: tuple[int, int]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if not rows or len({len(r) for r in rows}) != 1 or not rows[0]:
            raise InputError("a grid needs a non-empty rectangular matrix")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "base", tuple(self.base))

    @property
    def width(self):
        return len(self.rows[0])

    @property
    def height(self):
        return len(self.rows)

    def at(self, s, t):
        return self.rows[t - self.base[1]][s - self.base[0]]

    def columns(self):
        return [tuple(r[s] for r in self.rows) for s in range(self.width)]

    def transpose(self) -> "PathGrid":
        return PathGrid((self.base[1], self.base[0]), self.columns())

    def to_json(self):
        return {"base": list(self.base), "rows": [list(r) for r in self.rows]}


def _simple_vertices(a: PathSeq):
    if not a.context.is_simple():
        raise InputError("grids are only built over simple spaces")
    return a.vertex_at


def caterpillar_indices(i: int, j: int, cols: range) -> list[list[int]]:
    """Integer grid B(s,t) = delta_{(i v t) ^ j}(s) for t in [i, j]."""
    def delta(k, s):
        return s if s <= k else s - 1
    return [[delta(min(max(i, t), j), s) for s in cols] for t in range(i, j + 1)]


def caterpillar_grid(a: PathSeq, i: int, j: int) -> PathGrid:
    """Grid linking the delayed path a.delta_i (row t = i) to a.delta_j (row t = j)."""
    at = _simple_vertices(a)
    sup = standard_support(a)
    if j < max(i, sup.hi):
        raise InputError(f"caterpillar needs j >= max(i, right end of support) = {max(i, sup.hi)}")
    lo = min(sup.lo, i)
    cols = range(lo, j + 2)
    rows = [[at(x) for x in row] for row in caterpillar_indices(i, j, cols)]
    return PathGrid((lo, i), rows)


def connection_grid(a: PathSeq, kind: str) -> PathGrid:
    at = _simple_vertices(a)
    if kind not in ("join", "meet"):
        raise InputError("connection kind is 'join' or 'meet'")
    pick = max if kind == "join" else min
    lo, hi = standard_support(a)
    span = range(lo, hi + 1)
    return PathGrid((lo, lo), [[at(pick(s, t)) for s in span] for t in span])


def validate_grid(grid: PathGrid, context) -> bool:
    """Whether the grid is a double path in a complex or directed complex."""
    rows = grid.rows
    h, w = grid.height, grid.width
    if isinstance(context, Complex):
        linked = context.is_linked
        for t in range(h):
            for s in range(w):
                if s + 1 < w and not linked({rows[t][s], rows[t][s + 1]}):
                    return False
                if t + 1 < h and not linked({rows[t][s], rows[t + 1][s]}):
                    return False
                if s + 1 < w and t + 1 < h and not linked(
                        {rows[t][s], rows[t][s + 1], rows[t + 1][s], rows[t + 1][s + 1]}):
                    return False
        return True
    if isinstance(context, DirectedComplex):
        linked = context.is_linked
        for t in range(h):
            for s in range(w):
                if s + 1 < w and not linked((rows[t][s], rows[t][s + 1])):
                    return False
                if t + 1 < h and not linked((rows[t][s], rows[t + 1][s])):
                    return False
                if s + 1 < w and t + 1 < h:
                    low = (rows[t][s], rows[t][s + 1], rows[t + 1][s + 1])
                    high = (rows[t][s], rows[t + 1][s], rows[t + 1][s + 1])
                    if not (linked(low) and linked(high)):
                        return False
        return True
    raise InputError("grids are validated against a complex or a directed complex")


def _compositions(total, parts):
    """All tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _expand(rows, col_mult, row_mult):
    out = []
    for r, m in zip(rows, row_mult):
        line = tuple(x for x, k in zip(r, col_mult) for _ in range(k))
        out.extend([line] * m)
    return tuple(out)


def delay_related(a: PathGrid, b: PathGrid, max_width: int, max_height: int) -> bool:
    """Exhaustive search for product delays making the two grids equal.

    Every delay in either direction duplicates some columns or rows; the
    search covers all duplications of both grids up to the given size.
    """
    for w in range(max(a.width, b.width), max_width + 1):
        for h in range(max(a.height, b.height), max_height + 1):
            expanded_a = {_expand(a.rows, cm, rm)
                          for cm in _compositions(w, a.width) for rm in _compositions(h, a.height)}
            for cm, rm in iproduct(_compositions(w, b.width), _compositions(h, b.height)):
                if _expand(b.rows, cm, rm) in expanded_a:
                    return True
    return False
