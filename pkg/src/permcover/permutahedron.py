"""Combinatorics of the permutahedron obtained by truncating every face of Δⁿ.

Colours are ``1..n+1``; a subset ω of ``[n+1]`` is a bitmask with bit ``i-1``
standing for colour ``i``.  Facets are indexed by proper nonempty subsets, and
a face of codimension ``k`` is a strictly nested chain ``ω₁ ⊂ … ⊂ ω_k``
(stored as an ascending tuple of bitmasks).  The empty chain is the polytope
itself.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

import numpy as np

from .errors import BudgetExceeded, InputError

Chain = tuple


def full_mask(n: int) -> int:
    return (1 << (n + 1)) - 1


def popcount(x: int) -> int:
    return bin(x).count("1")


def is_subset(a: int, b: int) -> bool:
    return a & b == a


def colors_of(mask: int) -> tuple:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def mask_of(colors) -> int:
    m = 0
    for c in colors:
        m |= 1 << (c - 1)
    return m


def check_omega(n: int, omega: int) -> None:
    if not 0 < omega < full_mask(n):
        raise InputError(f"omega={omega} is not a proper nonempty subset of [{n + 1}]",
                         omega=omega, n=n)


def enumerate_omega(n: int) -> list:
    """All proper nonempty subsets of [n+1], ascending bitmask order."""
    if n < 1:
        raise InputError("dimension must be >= 1", n=n)
    return list(range(1, full_mask(n)))


def min_color_outside(n: int, omega: int) -> int:
    rest = full_mask(n) & ~omega
    return (rest & -rest).bit_length()


def is_chain(chain: Sequence[int]) -> bool:
    return all(a != b and is_subset(a, b) for a, b in zip(chain, chain[1:]))


@lru_cache(maxsize=None)
def chains(n: int, length: int) -> tuple:
    """All strict chains of ``length`` elements of Ω, in lexicographic order."""
    omegas = enumerate_omega(n)

    def extend(prefix):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for w in omegas:
            if not prefix or (w != prefix[-1] and is_subset(prefix[-1], w)):
                prefix.append(w)
                yield from extend(prefix)
                prefix.pop()

    return tuple(extend([]))


def all_chains(n: int) -> Iterator[Chain]:
    for length in range(n + 1):
        yield from chains(n, length)


def face_count(n: int, k: int) -> int:
    """Number of ``k``-dimensional faces of Πⁿ."""
    if not 0 <= k <= n:
        raise InputError("need 0 <= k <= n", n=n, k=k)
    return len(chains(n, n - k))


def f_vector(n: int) -> tuple:
    return tuple(face_count(n, k) for k in range(n + 1))


def ridge_pairs(n: int) -> list:
    """Codimension-2 faces: all pairs ω₁ ⊊ ω₂."""
    return list(chains(n, 2))


def facets_meet(a: int, b: int) -> bool:
    return a != b and (is_subset(a, b) or is_subset(b, a))


def default_epsilons(n: int, base: int = 4) -> tuple:
    return tuple(Fraction(1, base ** k) for k in range(1, n + 1))


def check_epsilons(eps: Sequence) -> None:
    if not eps:
        return
    if not 0 < eps[0] < Fraction(1, 2):
        raise InputError("need 0 < eps_1 < 1/2", eps=[str(e) for e in eps])
    for a, b in zip(eps, eps[1:]):
        if not (b > 0 and 2 * b < a):
            raise InputError("need 0 < 2 eps_k < eps_(k-1)", eps=[str(e) for e in eps])


def vertex_point(n: int, chain: Chain, eps: Sequence) -> tuple:
    """Coordinates of the vertex given by a complete chain.

    The colour entering the chain at step ``j`` gets ``eps_(j-1) - eps_j``
    (with ``eps_0 = 1``); the colour never entering gets ``eps_n``.
    """
    x = [None] * (n + 1)
    prev_mask, prev_eps = 0, Fraction(1)
    for mask, e in zip(chain, eps):
        (c,) = colors_of(mask & ~prev_mask)
        x[c - 1] = prev_eps - e
        prev_mask, prev_eps = mask, e
    (c,) = colors_of(full_mask(n) & ~prev_mask)
    x[c - 1] = prev_eps
    return tuple(x)


def vertex_coordinates(n: int, eps: Sequence | None = None) -> dict:
    """Map each vertex (complete chain) to its point in ℝ^(n+1)."""
    eps = default_epsilons(n) if eps is None else tuple(Fraction(e) for e in eps)
    if len(eps) != n:
        raise InputError("epsilon schedule must have n entries", n=n, given=len(eps))
    check_epsilons(eps)
    return {ch: vertex_point(n, ch, eps) for ch in chains(n, n)}


def facet_value(point: Sequence, omega: int) -> Fraction:
    return sum(point[c - 1] for c in colors_of(omega))


def vertices_of_face(n: int, chain: Chain) -> list:
    s = set(chain)
    return [v for v in chains(n, n) if s.issubset(v)]


def pi_image(n: int, chain: Chain) -> int:
    """Vertex map of the collapse Πⁿ → Δⁿ on barycentric subdivisions.

    A face (chain) goes to the barycentre of the face of Δⁿ spanned by the
    smallest set in the chain.
    """
    return chain[0] if chain else full_mask(n)


def _orientation(points) -> int:
    base = np.array(points[0], dtype=float)
    rows = [np.array(p, dtype=float) - base for p in points[1:]]
    rows.append(np.ones(len(base)))
    det = np.linalg.det(np.array(rows))
    if abs(det) < 1e-14:
        raise ArithmeticError("degenerate simplex in orientation test")
    return 1 if det > 0 else -1


def _flags_of_faces(n: int) -> Iterator[tuple]:
    """Top simplices of sd(Πⁿ): sequences C_0 ⊃ C_1 ⊃ … ⊃ C_n = ∅ of chains."""
    for vertex in chains(n, n):
        for order in itertools.permutations(range(n)):
            flag = [vertex]
            current = list(vertex)
            for i in order:
                current = [w for w in current if w != vertex[i]]
                flag.append(tuple(current))
            yield tuple(flag)


def pi_degree(n: int, eps: Sequence | None = None, max_n: int = 4) -> int:
    """Signed number of preimages of a top simplex of sd(Δⁿ) under ``pi_image``.

    Orientations are read off the actual barycentres in ℝ^(n+1), so the count
    does not rely on the chain combinatorics alone.  Raises if the count is not
    the same over every target simplex.
    """
    if n > max_n:
        raise BudgetExceeded(f"pi_degree enumerates (n+1)!·n! simplices; n={n} > {max_n}",
                             n=n, limit=max_n)
    coords = vertex_coordinates(n, eps)
    bary_cache: dict = {}

    def bary_pi(chain):
        if chain not in bary_cache:
            verts = vertices_of_face(n, chain)
            bary_cache[chain] = tuple(sum(coords[v][i] for v in verts) / len(verts)
                                      for i in range(n + 1))
        return bary_cache[chain]

    def bary_delta(mask):
        cs = colors_of(mask)
        return tuple(Fraction(1, len(cs)) if (i + 1) in cs else Fraction(0)
                     for i in range(n + 1))

    counts = {flag: 0 for flag in _delta_flags(n)}
    for flag in _flags_of_faces(n):
        image = tuple(pi_image(n, c) for c in flag)
        if len(set(image)) < n + 1:
            continue
        sign = _orientation([bary_pi(c) for c in flag]) * _orientation(
            [bary_delta(m) for m in image])
        counts[image] += sign
    values = set(counts.values())
    if len(values) != 1:
        raise ArithmeticError(f"non-uniform local degree {sorted(values)}")
    return values.pop()


def _delta_flags(n: int) -> list:
    """Top simplices of sd(Δⁿ): complete flags S_0 ⊂ … ⊂ S_n = [n+1]."""
    out = []
    for perm in itertools.permutations(range(1, n + 2)):
        out.append(tuple(mask_of(perm[: k + 1]) for k in range(n + 1)))
    return out
