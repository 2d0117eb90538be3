"""Permutations of ``range(k)`` stored as tuples.

``compose(p, q)`` is ``p∘q``: ``q`` is applied first.
"""

from __future__ import annotations

from typing import Sequence

Perm = tuple


def identity(k: int) -> Perm:
    return tuple(range(k))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    return tuple(p[x] for x in q)


def inverse(p: Sequence[int]) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def conjugate(c: Sequence[int], p: Sequence[int]) -> Perm:
    return compose(compose(c, p), inverse(c))


def parity(p: Sequence[int]) -> int:
    """Sign (+1/-1) of a permutation given as a sequence of distinct ints."""
    p = list(p)
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def sorting_sign(seq: Sequence) -> int:
    """Sign of the permutation that sorts ``seq`` (items distinct)."""
    order = sorted(range(len(seq)), key=lambda i: seq[i])
    return parity(order)


def is_involution(p: Sequence[int]) -> bool:
    return all(p[p[i]] == i for i in range(len(p)))


def fixed_points(p: Sequence[int]) -> list:
    return [i for i, x in enumerate(p) if x == i]
