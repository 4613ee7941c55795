"""Colimit preservation: the fundamental groupoid of a pushout against the
pushout of fundamental groupoid presentations."""
from __future__ import annotations

from ..core.catalog import as_truncated, build_space
from ..core.truncated import TruncMap, pushout, truncated_from_json
from ..errors import InputError
from ..fundamental.homsets import BudgetExceeded, groupoid_hom_count, hom_count
from ..fundamental.presentations import (CategoryPresentation, GroupoidPresentation,
                                         edge_path_groupoid, fundamental_category, pi0,
                                         vertex_group)
from ..fundamental.smith import abelianization
from .reports import CheckReport, verdict_of


def _presentation(space):
    return edge_path_groupoid(space) if space.symmetric else fundamental_category(space)


def _shift(word, k):
    return tuple(x + k if x > 0 else x - k for x in word)


def presentation_pushout(f: TruncMap, g: TruncMap, vertex_x, vertex_y):
    """Disjoint union of the two presentations, objects sent through the given
    vertex maps, plus one equality relation per nondegenerate edge of the apex."""
    px, py = _presentation(f.target), _presentation(g.target)
    k = len(px.generators)
    gens = [(vertex_x[s], vertex_x[d]) for s, d in px.generators]
    gens += [(vertex_y[s], vertex_y[d]) for s, d in py.generators]
    rels = list(px.relations)
    rels += [(_shift(l, k), _shift(r, k)) for l, r in py.relations]
    for e in f.source.edges():
        lhs = px.edge_words[f.emap[e]]
        rhs = _shift(py.edge_words[g.emap[e]], k)
        if lhs != rhs:
            rels.append((lhs, rhs))
    n = max(list(vertex_x) + list(vertex_y), default=-1) + 1
    cls = GroupoidPresentation if px.invertible else CategoryPresentation
    return cls(n, tuple(gens), tuple(rels))


def _side(p, max_len, budget):
    """Invariants of one presentation: components, vertex groups, bounded hom counts."""
    out = {"components": len(pi0(p)), "abelian": {}, "hom": {}}
    exact = {}
    if p.invertible:
        for block in pi0(p):
            out["abelian"][str(block[0])] = abelianization(vertex_group(p, block[0])).to_json()
    for x in range(p.n_objects):
        for y in range(p.n_objects):
            if p.invertible:
                r = groupoid_hom_count(p, x, y, max_len, budget)
            else:
                r = hom_count(p, x, y, max_len, budget)
            out["hom"][f"{x},{y}"] = r.count
            exact[(x, y)] = r.exact
    return out, exact


def vankampen_check(f: TruncMap, g: TruncMap, case: str = "", max_len: int = 3,
                    budget: int = 200_000) -> CheckReport:
    if f.source != g.source:
        raise InputError("span maps must share their source")
    po = pushout(f, g)
    side_b_pres = presentation_pushout(f, g, po.legs[0].vmap, po.legs[1].vmap)
    mismatches, undecided = [], []
    try:
        side_a, exact_a = _side(_presentation(po.obj), max_len, budget)
        side_b, exact_b = _side(side_b_pres, max_len, budget)
    except BudgetExceeded:
        return CheckReport(case or "vankampen", {}, {}, {}, "inconclusive",
                           ("word budget exceeded",))
    if side_a["components"] != side_b["components"]:
        mismatches.append(f"components {side_a['components']} vs {side_b['components']}")
    if side_a["abelian"] != side_b["abelian"]:
        mismatches.append("abelian invariants of vertex groups differ")
    for key, ea in exact_a.items():
        x, y = key
        label = f"{x},{y}"
        if not (ea and exact_b[key]):
            undecided.append(f"hom({label}) not exact at bound {max_len}")
        elif side_a["hom"][label] != side_b["hom"][label]:
            mismatches.append(f"hom({label}): {side_a['hom'][label]} vs {side_b['hom'][label]}")
    invariants = {"components": side_a["components"], "abelian": side_a["abelian"],
                  "pushout_vertices": po.obj.n_vertices, "max_len": max_len}
    return CheckReport(case or "vankampen", side_a, side_b, invariants,
                       verdict_of(mismatches, undecided), tuple(mismatches + undecided))


# -- span documents ------------------------------------------------------------

def space_from_ref(ref):
    """A space given inline as a truncated-set document or as a catalog spec string."""
    if isinstance(ref, str):
        return as_truncated(build_space(ref))
    if isinstance(ref, dict):
        return truncated_from_json(ref)
    raise InputError(f"cannot read a space from {ref!r}")


def _leg(apex, doc):
    target = space_from_ref(doc["target"])
    vmap = list(doc["vertex_map"])
    if "edge_map" in doc:
        return TruncMap(apex, target, vmap, list(doc["edge_map"]))
    return TruncMap.from_vertex_map(apex, target, vmap)


def span_from_json(doc: dict):
    """(case, left map, right map) from a span document."""
    try:
        apex = space_from_ref(doc["apex"])
        return doc.get("case", "span"), _leg(apex, doc["left"]), _leg(apex, doc["right"])
    except KeyError as exc:
        raise InputError(f"span document lacks field {exc}") from None
