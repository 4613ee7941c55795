"""Nerves of finite categories and groupoids, in full and truncated at dimension 2."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from ..core.truncated import TruncDirSet, TruncSymSet
from ..errors import InputError
from .categories import FiniteCategory, FiniteGroupoid

Matrix = tuple[tuple, ...]


@dataclass(frozen=True)
class NerveSimplexList:
    """n-simplices as (n+1)x(n+1) arrow matrices; entries below the diagonal
    are None for the nerve of a category."""

    dimension: int
    simplices: tuple[Matrix, ...]

    def __len__(self):
        return len(self.simplices)

    def to_json(self):
        return {"dimension": self.dimension, "simplices": [[list(r) for r in m] for m in self.simplices]}


def symmetric_nerve(g: FiniteGroupoid, n: int) -> NerveSimplexList:
    """All matrices with identity diagonal and a_ij then a_jk = a_ik, built from first rows."""
    if n < 0:
        raise InputError("dimension must be nonnegative")
    if not isinstance(g, FiniteGroupoid):
        raise InputError("the symmetric nerve needs a groupoid")
    inv = g.inverses
    out = []
    for x in range(g.n_objects):
        outgoing = [a for a in range(g.n_arrows) if g.src[a] == x]
        for tail in iproduct(outgoing, repeat=n):
            row = (g.identities[x],) + tail
            matrix = tuple(tuple(g.then(inv[row[i]], row[j]) for j in range(n + 1))
                           for i in range(n + 1))
            out.append(matrix)
    return NerveSimplexList(n, tuple(out))


def nerve(c: FiniteCategory, n: int) -> NerveSimplexList:
    """Composable chains of length n, as upper-triangular matrices of composites."""
    if n < 0:
        raise InputError("dimension must be nonnegative")
    chains = [[c.identities[x]] for x in range(c.n_objects)]
    out = []

    def extend(chain):
        if len(chain) == n + 1:
            out.append(chain)
            return
        last = c.dst[chain[-1]] if len(chain) > 1 else c.src[chain[0]]
        for a in range(c.n_arrows):
            if c.src[a] == last:
                extend(chain + [a])

    for start in chains:
        extend(start)
    simplices = []
    for chain in out:
        steps = chain[1:]
        objs = [c.src[chain[0]]] + [c.dst[a] for a in steps]
        rows = []
        for i in range(n + 1):
            row = [None] * (n + 1)
            acc = c.identities[objs[i]]
            row[i] = acc
            for j in range(i + 1, n + 1):
                acc = c.then(acc, steps[j - 1])
                row[j] = acc
            rows.append(tuple(row))
        simplices.append(tuple(rows))
    return NerveSimplexList(n, tuple(simplices))


def arrow_edges(c: FiniteCategory) -> tuple[list[int], list[int]]:
    """Edge id of every arrow in the truncated nerve, and the arrow of every edge.

    Identities become the degenerate edges; other arrows follow in id order.
    """
    n = c.n_objects
    edge_of = [0] * c.n_arrows
    arrow_of = list(c.identities)
    for a in range(c.n_arrows):
        if c.is_identity(a):
            edge_of[a] = c.src[a]
        else:
            edge_of[a] = len(arrow_of)
            arrow_of.append(a)
    return edge_of, arrow_of


def nerve_trunc2(c: FiniteCategory) -> TruncDirSet:
    """Objects, arrows and one triangle per composable pair of non-identity arrows."""
    edge_of, arrow_of = arrow_edges(c)
    n = c.n_objects
    src = [c.src[a] for a in arrow_of]
    dst = [c.dst[a] for a in arrow_of]
    tris = [(edge_of[a], edge_of[b], edge_of[c.then(a, b)])
            for a, b in c.composable_pairs() if not c.is_identity(a) and not c.is_identity(b)]
    if isinstance(c, FiniteGroupoid):
        rev = [edge_of[c.inverses[a]] for a in arrow_of]
        return TruncSymSet(n, tuple(src), tuple(dst), tuple(tris), tuple(rev))
    return TruncDirSet(n, tuple(src), tuple(dst), tuple(tris))
