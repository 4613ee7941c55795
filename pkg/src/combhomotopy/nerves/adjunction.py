"""Unit and counit of the fundamental groupoid/category against the nerve."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from ..core.truncated import TruncMap, TruncSymSet
from ..errors import InputError
from ..fundamental.homsets import BudgetExceeded, WordProblem, hom_count
from ..fundamental.presentations import (edge_path_groupoid, fundamental_category, pi0,
                                         vertex_group_data)
from ..fundamental.smith import abelianization
from .categories import FiniteCategory, FiniteGroupoid
from .nerve import arrow_edges, nerve_trunc2
from .reports import CheckReport, verdict_of


def _key(x, y):
    return f"{x},{y}"


class _Component:
    """Word problem for the groupoid component of one base object."""

    def __init__(self, p, base, coset_limit):
        self.data = vertex_group_data(p, base)
        self.solver = WordProblem(self.data.presentation, coset_limit)

    def form(self, word):
        return self.solver.normal_form(self.data.element(word))


def _components(p, coset_limit):
    comps = {}
    for block in pi0(p):
        comp = _Component(p, block[0], coset_limit)
        for v in block:
            comps[v] = comp
    return comps


def _explore(p, comp, x, max_depth=None):
    """Breadth-first arrow classes out of x: {(end, form): shortest word}.

    Returns the classes and whether the search ran out of new classes
    before hitting ``max_depth``.
    """
    seen = {(x, comp.form(())): ()}
    frontier = deque([(x, ())])
    while frontier:
        z, w = frontier.popleft()
        if max_depth is not None and len(w) >= max_depth:
            # one more layer decides whether the bound cut anything off
            for lt in p.out_letters(z):
                if (p.arrow(lt)[1], comp.form(w + (lt,))) not in seen:
                    return seen, False
            continue
        for lt in p.out_letters(z):
            key = (p.arrow(lt)[1], comp.form(w + (lt,)))
            if key not in seen:
                seen[key] = w + (lt,)
                frontier.append((key[0], w + (lt,)))
    return seen, True


def counit_check(g: FiniteGroupoid, case: str = "", coset_limit: int = 20_000) -> CheckReport:
    """Compare the fundamental groupoid of the truncated nerve of g with g itself."""
    if not isinstance(g, FiniteGroupoid):
        raise InputError("counit_check needs a groupoid")
    x_space = nerve_trunc2(g)
    p = edge_path_groupoid(x_space)
    _, arrow_of = arrow_edges(g)
    gen_arrow = {}
    for e in x_space.edges():
        w = p.edge_words[e]
        if len(w) == 1 and w[0] > 0:
            gen_arrow[w[0] - 1] = arrow_of[e]

    def arrow_of_letter(lt):
        a = gen_arrow[abs(lt) - 1]
        return a if lt > 0 else g.inverses[a]

    comps = _components(p, coset_limit)
    side_a, side_b, invariants = {}, {}, {}
    mismatches, undecided = [], []
    for x in range(g.n_objects):
        comp = comps[x]
        if not comp.solver.solved:
            undecided.append(f"vertex group at {x} could not be enumerated")
            continue
        classes, _ = _explore(p, comp, x)
        value = {}
        for (z, form), word in classes.items():
            ev = g.identities[x]
            for lt in word:
                ev = g.then(ev, arrow_of_letter(lt))
            value[(z, form)] = ev
        # evaluation must respect every generator step out of every class
        for (z, form), word in classes.items():
            for lt in p.out_letters(z):
                nxt = (p.arrow(lt)[1], comp.form(word + (lt,)))
                if g.then(value[(z, form)], arrow_of_letter(lt)) != value[nxt]:
                    mismatches.append(f"composition disagrees at {x}: class {word} then letter {lt}")
        if x == comp.data.base:
            invariants[str(x)] = abelianization(comp.data.presentation).to_json()
        for y in range(g.n_objects):
            images = sorted(value[k] for k in value if k[0] == y)
            side_a[_key(x, y)] = len(images)
            side_b[_key(x, y)] = len(g.hom(x, y))
            if images != sorted(g.hom(x, y)):
                mismatches.append(f"hom({x},{y}): {len(images)} classes vs {len(g.hom(x, y))} arrows")
    return CheckReport(case or "counit", side_a, side_b, invariants,
                       verdict_of(mismatches, undecided), tuple(mismatches + undecided))


def dir_counit_check(c: FiniteCategory, case: str = "", max_len: int | None = None,
                     cap: int = 8, budget: int = 200_000) -> CheckReport:
    """Compare the fundamental category of the truncated nerve of c with c.

    Without ``max_len`` the bound is raised from 1 until every hom count is
    saturated or ``cap`` is reached.
    """
    x_space = nerve_trunc2(c)
    p = fundamental_category(x_space)
    _, arrow_of = arrow_edges(c)
    n = c.n_objects
    bounds = [max_len] if max_len is not None else range(1, cap + 1)
    counts = None
    try:
        for bound in bounds:
            counts = {(x, y): hom_count(p, x, y, bound, budget)
                      for x in range(n) for y in range(n)}
            if all(h.saturated for h in counts.values()):
                break
    except BudgetExceeded:
        counts = None
    side_a, side_b = {}, {}
    mismatches, undecided = [], []
    if counts is None:
        undecided.append("word budget exceeded")
        counts = {}
    for (x, y), h in counts.items():
        side_a[_key(x, y)] = h.count
        side_b[_key(x, y)] = len(c.hom(x, y))
        if not h.saturated:
            undecided.append(f"hom({x},{y}) not saturated at the bound")
        images = []
        for block in h.classes:
            values = set()
            for word in block:
                ev = c.identities[x]
                for lt in word:
                    ev = c.then(ev, arrow_of[n + lt - 1])
                values.add(ev)
            if len(values) != 1:
                mismatches.append(f"hom({x},{y}): one class evaluates to arrows {sorted(values)}")
            images.extend(values)
        if sorted(images) != sorted(c.hom(x, y)):
            mismatches.append(f"hom({x},{y}): {h.count} classes vs {len(c.hom(x, y))} arrows")
    return CheckReport(case or "dir_counit", side_a, side_b,
                       {"saturated": not undecided}, verdict_of(mismatches, undecided),
                       tuple(mismatches + undecided))


@dataclass(frozen=True)
class UnitMap:
    """Each edge of X sent to its arrow class in the fundamental groupoid.

    ``arrows`` lists (src, dst, shortest word). When every vertex group is
    finite, ``groupoid`` is the whole fundamental groupoid and ``as_map`` the
    comparison X -> nerve; otherwise ``partial`` is set and only classes with
    representatives up to the bound are listed.
    """

    arrows: tuple[tuple[int, int, tuple[int, ...]], ...]
    edge_classes: tuple[int, ...]
    preserves_triangles: bool
    partial: bool
    groupoid: FiniteGroupoid | None = None
    as_map: TruncMap | None = None


def unit_map(x_space: TruncSymSet, max_len: int = 4, coset_limit: int = 20_000) -> UnitMap:
    if not x_space.symmetric:
        raise InputError("unit_map needs a symmetric set")
    p = edge_path_groupoid(x_space)
    comps = _components(p, coset_limit)
    if not all(c.solver.solved for c in comps.values()):
        return UnitMap((), (), False, True)
    index, arrows, complete = {}, [], True
    for x in range(x_space.n_vertices):
        classes, done = _explore(p, comps[x], x, max_len)
        complete &= done
        for (z, form), word in sorted(classes.items(), key=lambda kv: (len(kv[1]), kv[1])):
            index[(x, z, form)] = len(arrows)
            arrows.append((x, z, word))

    def class_of(x, z, word):
        return index.get((x, z, comps[x].form(word)))

    src, dst = x_space.src, x_space.dst
    edge_classes = tuple(class_of(src[e], dst[e], p.edge_words[e]) for e in range(x_space.n_edges))
    ok = True
    for a, b, c in x_space.triangles:
        word = p.edge_words[a] + p.edge_words[b]
        if class_of(src[a], dst[b], word) != edge_classes[c]:
            ok = False
    if not complete:
        return UnitMap(tuple(arrows), edge_classes, ok, True)
    # finite: materialize the groupoid with identities first
    n = x_space.n_vertices
    order = [index[(v, v, comps[v].form(()))] for v in range(n)]
    order += [i for i in range(len(arrows)) if i not in set(order)]
    renum = {old: new for new, old in enumerate(order)}
    arrows = [arrows[i] for i in order]
    compose = {}
    for i, (s1, d1, w1) in enumerate(arrows):
        for j, (s2, d2, w2) in enumerate(arrows):
            if d1 == s2:
                compose[(i, j)] = renum[class_of(s1, d2, w1 + w2)]
    groupoid = FiniteGroupoid(n, [a[0] for a in arrows], [a[1] for a in arrows], range(n), compose)
    edge_of, _ = arrow_edges(groupoid)
    edge_classes = tuple(renum[k] for k in edge_classes)
    as_map = TruncMap(x_space, nerve_trunc2(groupoid), range(n),
                      [edge_of[k] for k in edge_classes])
    return UnitMap(tuple(arrows), edge_classes, ok, False, groupoid, as_map)
