"""Named spaces and the small text syntax used to request them.

Syntax: ``name:arg:arg`` or ``wedge(spec,spec)``, e.g. ``circle:3``,
``csphere:2:2``, ``wedge(circle:3,circle:3)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product as iproduct

from ..errors import InputError
from .spaces import Complex, DirectedComplex
from .truncated import (TruncDirSet, TruncSymSet, coequalizer, dir_two_skeleton, pushout,
                        two_skeleton, vertex_inclusion)

# name -> (arity, minimum value of each argument or None for "any integer")
_SIGNATURES = {
    "line": (2, None),
    "dline": (2, None),
    "codiscrete": (1, 0),
    "discrete": (1, 1),
    "simplex": (1, 0),
    "circle": (1, 1),
    "dcircle": (1, 1),
    "csphere": (2, None),
    "dcsphere": (2, None),
}

DESCRIPTIONS = {
    "line": "line:i:j  integer window [i,j] with i!j iff |i-j| <= 1",
    "dline": "dline:i:j  directed window, linked words (i..i,i+1..i+1)",
    "codiscrete": "codiscrete:n  all subsets of {0..n} linked",
    "discrete": "discrete:n  n isolated points",
    "simplex": "simplex:n  directed simplex on 0..n",
    "circle": "circle:k  k-point circle (k >= 1)",
    "dcircle": "dcircle:k  k-point directed circle (k >= 1)",
    "csphere": "csphere:n:k  collapsed n-sphere, n in {1,2}, k >= 2",
    "dcsphere": "dcsphere:n:k  directed collapsed n-sphere, n in {1,2}, k >= 2",
    "wedge": "wedge(A,B)  one-point union at vertex 0 of each",
}


@dataclass(frozen=True)
class SpaceSpec:
    name: str
    args: tuple = ()

    def __str__(self):
        if self.name == "wedge":
            return f"wedge({self.args[0]},{self.args[1]})"
        return ":".join([self.name, *map(str, self.args)])


def parse_spec(text: str) -> SpaceSpec:
    text = text.strip()
    if text.startswith("catalog:"):
        text = text[len("catalog:"):].strip()
    if text.startswith("wedge(") and text.endswith(")"):
        inner = text[len("wedge("):-1]
        depth = 0
        for i, ch in enumerate(inner):
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch == "," and depth == 0:
                return SpaceSpec("wedge", (parse_spec(inner[:i]), parse_spec(inner[i + 1:])))
        raise InputError(f"wedge needs two comma-separated specs: {text!r}")
    name, *raw = text.split(":")
    if name not in _SIGNATURES:
        raise InputError(f"unknown space {name!r}; known: {', '.join(sorted(DESCRIPTIONS))}")
    arity, _ = _SIGNATURES[name]
    if len(raw) != arity:
        raise InputError(f"{name} takes {arity} argument(s), got {len(raw)}")
    try:
        args = tuple(int(a) for a in raw)
    except ValueError:
        raise InputError(f"non-integer argument in {text!r}") from None
    return SpaceSpec(name, args)


def line_window(i: int, j: int) -> Complex:
    """Vertex v stands for the integer i + v."""
    if j < i:
        raise InputError(f"empty window [{i},{j}]")
    n = j - i + 1
    return Complex(n, [{v, v + 1} for v in range(n - 1)] or [{0}])


def dir_line_window(i: int, j: int) -> DirectedComplex:
    if j < i:
        raise InputError(f"empty window [{i},{j}]")
    n = j - i + 1
    return DirectedComplex(n, [(v, v + 1) for v in range(n - 1)] or [(0,)])


def codiscrete(n: int) -> Complex:
    if n < 0:
        raise InputError("codiscrete needs n >= 0")
    return Complex(n + 1, [range(n + 1)])


def discrete(n: int) -> Complex:
    if n < 1:
        raise InputError("discrete needs at least one point")
    return Complex(n, [])


def simplex_dir(n: int) -> DirectedComplex:
    if n < 0:
        raise InputError("simplex needs n >= 0")
    return DirectedComplex(n + 1, [tuple(range(n + 1))])


def _interval_faces(interval: TruncDirSet, k: int):
    return vertex_inclusion(interval, 0), vertex_inclusion(interval, k)


def circle(k: int):
    """Complex for k >= 3; the non-simple 1- and 2-point circles are truncated sets."""
    if k < 1:
        raise InputError("circle needs k >= 1")
    if k >= 3:
        return Complex(k, [{v, (v + 1) % k} for v in range(k)])
    return circle_by_coequalizer(k)


def circle_by_coequalizer(k: int) -> TruncSymSet:
    interval = two_skeleton(line_window(0, k))
    f, g = _interval_faces(interval, k)
    return coequalizer(f, g).obj


def dir_circle(k: int):
    if k < 1:
        raise InputError("directed circle needs k >= 1")
    if k >= 3:
        return DirectedComplex(k, [(v, (v + 1) % k) for v in range(k)])
    return dir_circle_by_coequalizer(k)


def dir_circle_by_coequalizer(k: int) -> TruncDirSet:
    interval = dir_two_skeleton(dir_line_window(0, k))
    f, g = _interval_faces(interval, k)
    return coequalizer(f, g).obj


def _sphere_layout(n, k):
    if n not in (1, 2):
        raise InputError("collapsed spheres are built for n in {1, 2}")
    if k < 2:
        raise InputError("collapsed spheres need k >= 2")
    inner = list(iproduct(range(1, k + 1), repeat=n))
    ids = {p: i + 1 for i, p in enumerate(inner)}
    return (lambda p: ids.get(p, 0)), len(inner) + 1


def collapsed_sphere(n: int, k: int) -> Complex:
    """Window [0,k+1]^n with everything outside [1,k]^n sent to the base point 0."""
    label, size = _sphere_layout(n, k)
    parts = []
    for corner in iproduct(range(k + 1), repeat=n):
        cube = [tuple(c + d for c, d in zip(corner, delta)) for delta in iproduct((0, 1), repeat=n)]
        parts.append({label(p) for p in cube})
    return Complex(size, parts)


def dir_collapsed_sphere(n: int, k: int) -> DirectedComplex:
    """Images of the maximal increasing chains of each unit cube."""
    label, size = _sphere_layout(n, k)
    words = []
    for corner in iproduct(range(k + 1), repeat=n):
        for order in permutations(range(n)):
            p = list(corner)
            chain = [label(tuple(p))]
            for axis in order:
                p[axis] += 1
                chain.append(label(tuple(p)))
            words.append(chain)
    return DirectedComplex(size, words)


def as_truncated(space):
    if isinstance(space, Complex):
        return two_skeleton(space)
    if isinstance(space, DirectedComplex):
        return dir_two_skeleton(space)
    return space


def wedge(x, y):
    """One-point union identifying vertex 0 of each summand."""
    tx, ty = as_truncated(x), as_truncated(y)
    if tx.symmetric != ty.symmetric:
        raise InputError("cannot wedge a symmetric space with a directed one")
    return pushout(vertex_inclusion(tx, 0), vertex_inclusion(ty, 0)).obj


def build_space(spec):
    if isinstance(spec, str):
        spec = parse_spec(spec)
    name, a = spec.name, spec.args
    if name == "wedge":
        return wedge(build_space(a[0]), build_space(a[1]))
    builders = {
        "line": line_window, "dline": dir_line_window, "codiscrete": codiscrete,
        "discrete": discrete, "simplex": simplex_dir, "circle": circle,
        "dcircle": dir_circle, "csphere": collapsed_sphere, "dcsphere": dir_collapsed_sphere,
    }
    return builders[name](*a)


def is_directed(space) -> bool:
    return isinstance(space, DirectedComplex) or (
        isinstance(space, TruncDirSet) and not space.symmetric)


def n_vertices(space) -> int:
    return space.n_vertices
