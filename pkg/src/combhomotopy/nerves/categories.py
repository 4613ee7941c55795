"""Finite categories and groupoids given by explicit composition tables."""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iproduct
from typing import Mapping

from ..errors import InputError


@dataclass(frozen=True)
class FiniteCategory:
    """Arrows are 0..m-1; ``compose[(a, b)]`` is "a then b" for dst(a) == src(b)."""

    n_objects: int
    src: tuple[int, ...]
    dst: tuple[int, ...]
    identities: tuple[int, ...]
    compose: Mapping[tuple[int, int], int] = field(hash=False)
    names: tuple[str, ...] = field(default=(), compare=False)

    kind = "category"

    def __post_init__(self):
        for name in ("src", "dst", "identities", "names"):
            object.__setattr__(self, name, tuple(getattr(self, name)))
        object.__setattr__(self, "compose", {tuple(k): v for k, v in dict(self.compose).items()})
        problems = self.problems()
        if problems:
            raise InputError(f"invalid {self.kind}: " + "; ".join(problems))

    @property
    def n_arrows(self):
        return len(self.src)

    def name(self, a):
        return self.names[a] if self.names else str(a)

    def hom(self, x, y) -> list[int]:
        return [a for a in range(self.n_arrows) if self.src[a] == x and self.dst[a] == y]

    def then(self, a, b):
        return self.compose[(a, b)]

    def is_identity(self, a):
        return self.identities[self.src[a]] == a

    def composable_pairs(self):
        return [(a, b) for a in range(self.n_arrows) for b in range(self.n_arrows)
                if self.dst[a] == self.src[b]]

    def problems(self) -> list[str]:
        """Every failing axiom instance, described in words."""
        out = []
        n, m = self.n_objects, len(self.src)
        if n < 0 or len(self.dst) != m:
            return ["src and dst lists differ in length"]
        for a in range(m):
            if not (0 <= self.src[a] < n and 0 <= self.dst[a] < n):
                out.append(f"arrow {a} has an endpoint outside 0..{n - 1}")
        if out:
            return out
        if self.names and len(self.names) != m:
            out.append("names must label every arrow")
        if len(self.identities) != n:
            return out + ["one identity per object is required"]
        for x, i in enumerate(self.identities):
            if not (0 <= i < m and self.src[i] == x and self.dst[i] == x):
                return out + [f"identity of object {x} is not an endomorphism of {x}"]
        for (a, b), c in self.compose.items():
            if not (0 <= a < m and 0 <= b < m and 0 <= c < m):
                out.append(f"composite entry {(a, b)} -> {c} names an unknown arrow")
            elif self.dst[a] != self.src[b]:
                out.append(f"composite of non-composable arrows {a}, {b} is defined")
            elif self.src[c] != self.src[a] or self.dst[c] != self.dst[b]:
                out.append(f"composite {a} then {b} = {c} has wrong endpoints")
        if out:
            return out
        for a, b in self.composable_pairs():
            if (a, b) not in self.compose:
                out.append(f"composite {a} then {b} is missing")
        if out:
            return out
        for a in range(m):
            if self.compose[(self.identities[self.src[a]], a)] != a:
                out.append(f"left unit law fails at arrow {a}")
            if self.compose[(a, self.identities[self.dst[a]])] != a:
                out.append(f"right unit law fails at arrow {a}")
        for a, b in self.composable_pairs():
            ab = self.compose[(a, b)]
            for c in range(m):
                if self.src[c] == self.dst[b]:
                    if self.compose[(ab, c)] != self.compose[(a, self.compose[(b, c)])]:
                        out.append(f"associativity fails at ({a}, {b}, {c})")
        return out

    def to_json(self) -> dict:
        doc = {
            "kind": self.kind,
            "objects": self.n_objects,
            "arrows": [[s, d] for s, d in zip(self.src, self.dst)],
            "identities": list(self.identities),
            "compose": [[a, b, c] for (a, b), c in sorted(self.compose.items())],
        }
        if self.names:
            doc["names"] = list(self.names)
        return doc


@dataclass(frozen=True)
class FiniteGroupoid(FiniteCategory):
    kind = "groupoid"

    def problems(self):
        out = super().problems()
        if out:
            return out
        for a in range(self.n_arrows):
            if self._inverse_of(a) is None:
                out.append(f"arrow {a} has no inverse")
        return out

    def _inverse_of(self, a):
        for b in self.hom(self.dst[a], self.src[a]):
            if (self.compose[(a, b)] == self.identities[self.src[a]]
                    and self.compose[(b, a)] == self.identities[self.dst[a]]):
                return b
        return None

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(self._inverse_of(a) for a in range(self.n_arrows))


def category_from_json(doc: dict) -> FiniteCategory:
    try:
        kind = doc.get("kind", "category")
        cls = {"category": FiniteCategory, "groupoid": FiniteGroupoid}[kind]
        arrows = [tuple(a) for a in doc["arrows"]]
        compose = {(int(a), int(b)): int(c) for a, b, c in doc["compose"]}
        return cls(int(doc["objects"]), [a[0] for a in arrows], [a[1] for a in arrows],
                   list(doc["identities"]), compose, tuple(doc.get("names", ())))
    except KeyError as exc:
        raise InputError(f"category document lacks field {exc}") from None
    except InputError:
        raise
    except (TypeError, ValueError) as exc:
        raise InputError(f"malformed category document: {exc}") from None


# -- builders ---------------------------------------------------------------------

def discrete_groupoid(k: int) -> FiniteGroupoid:
    return FiniteGroupoid(k, range(k), range(k), range(k), {(x, x): x for x in range(k)})


def codiscrete_groupoid(k: int) -> FiniteGroupoid:
    """Exactly one arrow x -> y for every pair; identities come first."""
    pairs = [(x, x) for x in range(k)] + [(x, y) for x in range(k) for y in range(k) if x != y]
    index = {p: i for i, p in enumerate(pairs)}
    compose = {(index[(x, y)], index[(y, z)]): index[(x, z)]
               for x, y, z in iproduct(range(k), repeat=3)}
    return FiniteGroupoid(k, [p[0] for p in pairs], [p[1] for p in pairs], range(k), compose,
                          tuple(f"{x}>{y}" for x, y in pairs))


def group_groupoid(elements: list, op, identity, names=None) -> FiniteGroupoid:
    """One-object groupoid of a finite group given by its multiplication."""
    elements = [identity] + [e for e in elements if e != identity]
    index = {e: i for i, e in enumerate(elements)}
    compose = {(index[a], index[b]): index[op(a, b)] for a in elements for b in elements}
    m = len(elements)
    names = names or tuple(str(e) for e in elements)
    return FiniteGroupoid(1, [0] * m, [0] * m, [0], compose, tuple(names))


def cyclic_group(n: int) -> FiniteGroupoid:
    return group_groupoid(list(range(n)), lambda a, b: (a + b) % n, 0)


def klein_four() -> FiniteGroupoid:
    els = [(a, b) for a in range(2) for b in range(2)]
    return group_groupoid(els, lambda p, q: ((p[0] + q[0]) % 2, (p[1] + q[1]) % 2), (0, 0),
                          names=("e", "a", "b", "ab"))


def ordinal(n: int) -> FiniteCategory:
    """The ordinal [n] = {0 < 1 < ... < n} as a category; identities first."""
    pairs = [(i, i) for i in range(n + 1)] + [(i, j) for i in range(n + 1)
                                              for j in range(i + 1, n + 1)]
    index = {p: a for a, p in enumerate(pairs)}
    compose = {(index[(i, j)], index[(j, k)]): index[(i, k)]
               for i in range(n + 1) for j in range(i, n + 1) for k in range(j, n + 1)}
    return FiniteCategory(n + 1, [p[0] for p in pairs], [p[1] for p in pairs], range(n + 1),
                          compose, tuple(f"{i}<{j}" if i != j else f"id{i}" for i, j in pairs))


def commutative_square() -> FiniteCategory:
    """0 -> 1 -> 3 and 0 -> 2 -> 3 with both composites equal to the diagonal."""
    arrows = [(0, 0), (1, 1), (2, 2), (3, 3), (0, 1), (1, 3), (0, 2), (2, 3), (0, 3)]
    names = ("id0", "id1", "id2", "id3", "f", "g", "h", "k", "d")
    compose = {}
    for a, (s, d) in enumerate(arrows):
        compose[(s, a)] = a
        compose[(a, d)] = a
    compose[(4, 5)] = 8
    compose[(6, 7)] = 8
    return FiniteCategory(4, [a[0] for a in arrows], [a[1] for a in arrows], range(4),
                          compose, names)


def bundled_groupoids() -> dict[str, FiniteGroupoid]:
    cat = {}
    for k in (1, 2, 3):
        cat[f"discrete:{k}"] = discrete_groupoid(k)
        cat[f"codiscrete:{k}"] = codiscrete_groupoid(k)
    cat["Z/2"] = cyclic_group(2)
    cat["Z/3"] = cyclic_group(3)
    cat["Z/2xZ/2"] = klein_four()
    return cat


def bundled_categories() -> dict[str, FiniteCategory]:
    cat = {f"ordinal:{n}": ordinal(n) for n in range(5)}
    cat["square"] = commutative_square()
    cat["discrete:2"] = discrete_groupoid(2)
    return cat
