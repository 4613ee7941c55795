"""Words over generators: letter ``k > 0`` is generator ``k-1``, ``-k`` its inverse."""
from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple[int, ...]


def letter(gen: int, sign: int = 1) -> int:
    return (gen + 1) * sign


def generator_of(x: int) -> int:
    return abs(x) - 1


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word: Iterable[int]) -> Word:
    w = free_reduce(word)
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return w[i:j + 1]


def canonical_relator(word: Sequence[int]) -> Word:
    """Least rotation of the word or its inverse, to spot duplicate relators."""
    w = cyclic_reduce(word)
    if not w:
        return w
    candidates = []
    for v in (w, inverse(w)):
        candidates.extend(v[i:] + v[:i] for i in range(len(v)))
    return min(candidates, key=lambda c: (len(c), c))


def substitute(word: Sequence[int], images: Sequence[Sequence[int]]) -> Word:
    """Replace generator g by images[g] (and its inverse by the inverse image)."""
    out: list[int] = []
    for x in word:
        img = images[abs(x) - 1]
        out.extend(img if x > 0 else inverse(img))
    return free_reduce(out)


def exponent_sums(word: Sequence[int], n_generators: int) -> list[int]:
    sums = [0] * n_generators
    for x in word:
        sums[abs(x) - 1] += 1 if x > 0 else -1
    return sums
