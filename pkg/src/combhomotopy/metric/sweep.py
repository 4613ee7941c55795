"""Homotopy invariants of a point cloud across a list of resolutions."""
from __future__ import annotations

from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from typing import Sequence

from ..core.truncated import TruncSymSet
from ..errors import InputError
from ..fundamental.homsets import BudgetExceeded, pi_monoid
from ..fundamental.presentations import edge_path_groupoid, pi0, vertex_group
from ..fundamental.smith import abelianization
from ..fundamental.tietze import tietze_simplify
from .points import PointCloud, StepMetricSpace
from .rips import rips2_truncated, step_rips2

DEFAULT_THRESHOLD = 500


@dataclass(frozen=True)
class InvariantRow:
    eps: Fraction
    components: int
    h1_rank: int
    h1_torsion: tuple[int, ...]
    generators: int
    relators: int
    reduced_generators: int | None = None
    reduced_relators: int | None = None
    loop_classes: int | None = None
    loops_saturated: bool | None = None

    def to_json(self):
        doc = asdict(self)
        doc["eps"] = str(self.eps)
        doc["h1_torsion"] = list(self.h1_torsion)
        return doc


@dataclass(frozen=True)
class InvariantReport:
    rows: tuple[InvariantRow, ...]
    base: int | None = None

    def __post_init__(self):
        eps = [r.eps for r in self.rows]
        if any(a >= b for a, b in zip(eps, eps[1:])):
            raise InputError("report rows must have strictly increasing eps")

    def to_json(self):
        return {"base": self.base, "rows": [r.to_json() for r in self.rows]}

    def to_text(self) -> str:
        cols = ["eps", "components", "h1_rank", "h1_torsion", "generators", "relators",
                "reduced_generators", "reduced_relators", "loop_classes", "loops_saturated"]
        table = [cols]
        for r in self.rows:
            d = r.to_json()
            table.append(["-" if d[c] is None else
                          (",".join(map(str, d[c])) or "-") if c == "h1_torsion" else str(d[c])
                          for c in cols])
        widths = [max(len(row[i]) for row in table) for i in range(len(cols))]
        return "\n".join("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip()
                         for row in table) + "\n"

    def first_eps(self, predicate):
        return next((r.eps for r in self.rows if predicate(r)), None)


def _check_eps_list(eps_list):
    eps = [Fraction(e) for e in eps_list]
    if any(e < 0 for e in eps):
        raise InputError("resolutions must be nonnegative")
    if any(a >= b for a, b in zip(eps, eps[1:])):
        raise InputError("eps list must be strictly increasing")
    return eps


def _chosen_component(space, base):
    blocks = pi0(space)
    if base is not None:
        return next(b for b in blocks if base in b)
    return max(blocks, key=lambda b: (len(b), -b[0]))


def symmetric_row(space: TruncSymSet, eps, base=None, threshold=DEFAULT_THRESHOLD) -> InvariantRow:
    blocks = pi0(space)
    block = _chosen_component(space, base)
    group = vertex_group(edge_path_groupoid(space), block[0] if base is None else base)
    inv = abelianization(group)
    reduced = (None, None)
    if space.n_vertices < threshold:
        small = tietze_simplify(group)
        reduced = (small.n_generators, len(small.relators))
    return InvariantRow(Fraction(eps), len(blocks), inv.rank, inv.torsion,
                        group.n_generators, len(group.relators), *reduced)


def eps_sweep(data: PointCloud | StepMetricSpace, eps_list: Sequence, base: int | None = None,
              threshold: int = DEFAULT_THRESHOLD, max_len: int = 6,
              budget: int = 200_000) -> InvariantReport:
    """One row per resolution; step spaces also report loop classes at the base."""
    eps_values = _check_eps_list(eps_list)
    cloud = data.cloud if isinstance(data, StepMetricSpace) else data
    if base is not None and not 0 <= base < len(cloud):
        raise InputError(f"base {base} outside the point set")
    if len(cloud) == 0:
        return InvariantReport((), base)
    rows = []
    for eps in eps_values:
        row = symmetric_row(rips2_truncated(cloud, eps), eps, base, threshold)
        if isinstance(data, StepMetricSpace):
            at = 0 if base is None else base
            try:
                monoid = pi_monoid(step_rips2(data, eps), at, max_len, budget)
                row = replace(row, loop_classes=len(monoid.elements),
                              loops_saturated=monoid.saturated)
            except BudgetExceeded:
                row = replace(row, loops_saturated=False)
        rows.append(row)
    return InvariantReport(tuple(rows), base)
