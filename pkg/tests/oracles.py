"""Independent reference computations used by the tests.

Nothing here goes through presentations, Tietze moves or the Smith form:
homology is read off boundary matrices by plain Gaussian elimination.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def rank(rows, modulus=None):
    rows = [list(r) for r in rows if any(r)]
    if not rows:
        return 0
    if modulus:
        rows = [[x % modulus for x in r] for r in rows]
    else:
        rows = [[Fraction(x) for x in r] for r in rows]
    r = 0
    ncols = len(rows[0])
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                if modulus:
                    f = rows[i][c] * pow(rows[r][c], -1, modulus)
                    rows[i] = [(a - f * b) % modulus for a, b in zip(rows[i], rows[r])]
                else:
                    f = rows[i][c] / rows[r][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def complex_h1(n_vertices, facets, modulus=None):
    """(components, first Betti number) of a simplicial complex given by facets."""
    edges, triangles = set(), set()
    for f in facets:
        f = sorted(f)
        edges.update(combinations(f, 2))
        triangles.update(combinations(f, 3))
    edges = sorted(edges)
    index = {e: i for i, e in enumerate(edges)}
    d1 = [[0] * n_vertices for _ in edges]
    for i, (a, b) in enumerate(edges):
        d1[i][a] -= 1
        d1[i][b] += 1
    d2 = []
    for a, b, c in sorted(triangles):
        row = [0] * len(edges)
        row[index[(b, c)]] += 1
        row[index[(a, c)]] -= 1
        row[index[(a, b)]] += 1
        d2.append(row)
    r1 = rank(d1, modulus)
    r2 = rank(d2, modulus) if edges else 0
    return n_vertices - r1, len(edges) - r1 - r2


def truncated_h1(space, modulus=None):
    """Same for a symmetric truncated set: one chain per reversal pair of edges."""
    pairs, sign = {}, {}
    for e in range(space.n_vertices, space.n_edges):
        r = space.rev[e]
        key = min(e, r)
        pairs.setdefault(key, len(pairs))
        sign[e] = 1 if e == key else -1
    cols = len(pairs)

    def chain(e):
        v = [0] * cols
        if e >= space.n_vertices:
            v[pairs[min(e, space.rev[e])]] += sign[e]
        return v

    d1 = []
    for key in pairs:
        row = [0] * space.n_vertices
        row[space.src[key]] -= 1
        row[space.dst[key]] += 1
        d1.append(row)
    rel = []
    for e in range(space.n_vertices, space.n_edges):
        if space.rev[e] == e:
            rel.append([2 * x for x in chain(e)])
    for a, b, c in space.triangles:
        rel.append([x + y - z for x, y, z in zip(chain(a), chain(b), chain(c))])
    r1 = rank(d1, modulus)
    r2 = rank(rel, modulus) if cols else 0
    return space.n_vertices - r1, cols - r1 - r2
