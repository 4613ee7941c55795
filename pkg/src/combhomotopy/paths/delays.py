"""Delays: increasing surjections of the integers that are the identity far to the left."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from ..errors import InputError


@dataclass(frozen=True)
class Support:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise InputError(f"empty support [{self.lo},{self.hi}]")

    def __add__(self, other: "Support") -> "Support":
        return Support(self.lo + other.lo, self.hi + other.hi)

    def __neg__(self) -> "Support":
        return Support(-self.hi, -self.lo)

    def __iter__(self):
        return iter((self.lo, self.hi))

    def __contains__(self, t):
        return self.lo <= t <= self.hi

    @property
    def length(self):
        return self.hi - self.lo


@dataclass(frozen=True)
class Delay:
    """A delay held in finite form.

    ``multiplicities[k]`` is the number of integers sent to ``window.lo + k``.
    Below ``window.lo`` the delay is the identity; above its domain it is a
    translation.  The representation is canonical: multiplicity-one entries
    at either end are dropped, and the identity is ``[0,0]`` with ``(1,)``.
    """

    window: Support
    multiplicities: tuple[int, ...]

    def __init__(self, window, multiplicities: Sequence[int]):
        if not isinstance(window, Support):
            window = Support(*window)
        mult = [int(m) for m in multiplicities]
        if len(mult) != window.length + 1:
            raise InputError("one multiplicity per point of the window is required")
        if any(m < 1 for m in mult):
            raise InputError("multiplicities must be positive (a delay is surjective)")
        lo = window.lo
        while mult and mult[0] == 1:
            mult.pop(0)
            lo += 1
        while mult and mult[-1] == 1:
            mult.pop()
        if not mult:
            lo, mult = 0, [1]
        object.__setattr__(self, "window", Support(lo, lo + len(mult) - 1))
        object.__setattr__(self, "multiplicities", tuple(mult))

    @classmethod
    def identity(cls) -> "Delay":
        return cls(Support(0, 0), (1,))

    @classmethod
    def elementary(cls, i: int) -> "Delay":
        """Holds the point i twice: t -> t for t <= i, t -> t-1 otherwise."""
        return cls(Support(i, i), (2,))

    @classmethod
    def from_function(cls, f: Callable[[int], int], lo: int, hi: int) -> "Delay":
        """Read a delay off its values on [lo, hi]; f must be the identity below lo
        and a translation above hi."""
        counts: dict[int, int] = {}
        prev = None
        for t in range(lo, hi + 1):
            v = f(t)
            if prev is not None and v not in (prev, prev + 1):
                raise InputError("function is not an increasing surjection")
            counts[v] = counts.get(v, 0) + 1
            prev = v
        if f(lo) != lo:
            raise InputError("function is not the identity at the left end")
        top = max(counts)
        return cls(Support(lo, top), [counts[v] for v in range(lo, top + 1)])

    @property
    def shift(self) -> int:
        """Translation applied far to the right."""
        return sum(self.multiplicities) - len(self.multiplicities)

    @property
    def domain_hi(self) -> int:
        return self.window.lo + sum(self.multiplicities) - 1

    def __call__(self, t: int) -> int:
        lo = self.window.lo
        if t < lo:
            return t
        if t > self.domain_hi:
            return t - self.shift
        offset = t - lo
        for k, m in enumerate(self.multiplicities):
            if offset < m:
                return lo + k
            offset -= m
        raise AssertionError("unreachable")

    def preimage(self, x: int) -> range:
        lo = self.window.lo
        if x < lo:
            return range(x, x + 1)
        if x > self.window.hi:
            return range(x + self.shift, x + self.shift + 1)
        start = lo + sum(self.multiplicities[: x - lo])
        return range(start, start + self.multiplicities[x - lo])

    def multiplicity(self, x: int) -> int:
        if x in self.window:
            return self.multiplicities[x - self.window.lo]
        return 1

    def __mul__(self, other: "Delay") -> "Delay":
        """Composite ``self . other``: apply ``other`` first."""
        lo = min(self.window.lo, other.window.lo)
        hi = max(other.domain_hi, self.domain_hi + other.shift) + 1
        return Delay.from_function(lambda t: self(other(t)), lo, hi)


def cofilter_witness(d1: Delay, d2: Delay) -> tuple[Delay, Delay]:
    """Delays e1, e2 with d1 . e1 == d2 . e2.

    Both composites are made to hold each point x max(m1(x), m2(x)) times;
    each e_k spends the extra holds on the last preimage of x under d_k.
    """
    points = set(range(d1.window.lo, d1.window.hi + 1)) | set(range(d2.window.lo, d2.window.hi + 1))

    def complement(d, other):
        extra = {}
        for x in points:
            need = max(d.multiplicity(x), other.multiplicity(x)) - d.multiplicity(x)
            if need:
                extra[d.preimage(x)[-1]] = need + 1
        if not extra:
            return Delay.identity()
        lo, hi = min(extra), max(extra)
        return Delay(Support(lo, hi), [extra.get(t, 1) for t in range(lo, hi + 1)])

    return complement(d1, d2), complement(d2, d1)


def regression(i: int) -> Callable[[int], int]:
    """Back-step surjection: t -> t for t <= i, t -> t - 2 otherwise (values i-1, i repeat)."""
    return lambda t: t if t <= i else t - 2
