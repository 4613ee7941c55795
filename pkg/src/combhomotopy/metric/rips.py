"""Tolerance and step structures of a point cloud at a given resolution."""
from __future__ import annotations

from fractions import Fraction
from itertools import product as iproduct
from math import floor

from ..core.spaces import Complex
from ..core.truncated import TruncDirSet, TruncSymSet
from ..errors import InputError
from .points import PointCloud, StepMetricSpace


def _check_eps(eps):
    eps = Fraction(eps)
    if eps < 0:
        raise InputError("resolution must be nonnegative")
    return eps


def neighbours(cloud: PointCloud, eps) -> list[list[int]]:
    """Sorted lists of the other points within eps of each point.

    Points are bucketed on a grid of cell size eps, so only adjacent cells
    are compared (every metric here bounds each coordinate difference).
    """
    eps = _check_eps(eps)
    n = len(cloud)
    out = [[] for _ in range(n)]
    if n == 0:
        return out
    if eps == 0:
        groups: dict = {}
        for i, p in enumerate(cloud.points):
            groups.setdefault(p, []).append(i)
        for members in groups.values():
            for i in members:
                out[i] = [j for j in members if j != i]
        return out
    cells: dict = {}
    for i, p in enumerate(cloud.points):
        cells.setdefault(tuple(floor(c / eps) for c in p), []).append(i)
    offsets = list(iproduct((-1, 0, 1), repeat=cloud.dimension))
    for key, members in cells.items():
        near = []
        for off in offsets:
            near.extend(cells.get(tuple(k + o for k, o in zip(key, off)), ()))
        for i in members:
            out[i] = sorted(j for j in near if j != i and cloud.within(i, j, eps))
    return out


def tolerance_graph(cloud: PointCloud, eps):
    """Edges (i, j), i < j, and triangles (i, j, k), i < j < k, of pairwise-tolerant points."""
    nb = neighbours(cloud, eps)
    sets = [set(x) for x in nb]
    edges = [(i, j) for i in range(len(cloud)) for j in nb[i] if i < j]
    triangles = [(i, j, k) for i, j in edges for k in nb[j] if k > j and k in sets[i]]
    return edges, triangles


def rips2(cloud: PointCloud, eps) -> Complex:
    """2-skeleton of the tolerance complex: triangles, uncovered edges, isolated points."""
    edges, triangles = tolerance_graph(cloud, eps)
    covered = {frozenset(p) for i, j, k in triangles for p in ((i, j), (i, k), (j, k))}
    facets = [frozenset(t) for t in triangles]
    facets += [frozenset(e) for e in edges if frozenset(e) not in covered]
    return Complex(len(cloud), facets, maximal=True)


def rips2_truncated(cloud: PointCloud, eps) -> TruncSymSet:
    """Same structure as :func:`rips2`, built directly as a symmetric truncated set."""
    edges, triangles = tolerance_graph(cloud, eps)
    return TruncSymSet.from_simple(len(cloud), edges, triangles)


def step_rips2(space: StepMetricSpace, eps) -> TruncDirSet:
    """Edges are steps x -> y (x != y) within eps; triangles are chains x -> y -> z
    whose outer pair is also a step within eps (degenerate third face when z == x)."""
    cloud = space.cloud
    nb = neighbours(cloud, eps)
    n = len(cloud)
    pairs = [(i, j) for i in range(n) for j in nb[i] if space.precedes(i, j)]
    index = {p: n + k for k, p in enumerate(pairs)}
    succ = [[] for _ in range(n)]
    for i, j in pairs:
        succ[i].append(j)
    tris = []
    for x, y in pairs:
        for z in succ[y]:
            if z == x:
                tris.append((index[(x, y)], index[(y, z)], x))
            elif (x, z) in index:
                tris.append((index[(x, y)], index[(y, z)], index[(x, z)]))
    return TruncDirSet.build(n, pairs, tris)
