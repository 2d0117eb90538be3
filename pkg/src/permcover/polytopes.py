"""Simple polytopes given by vertex–facet incidence, the real model R_P,
small covers, the flag / empty-4-circuit predicates and two numeric bounds."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .assembly import MirrorComplex, euler_characteristic, face_orbits
from .errors import BudgetExceeded, InputError
from .permutahedron import chains, enumerate_omega

DEFAULT_MAX_CELLS = 1 << 20
DEFAULT_MAX_CLIQUES = 1_000_000


@dataclass
class SimplePolytope:
    dimension: int
    facets: int
    vertices: list

    def __post_init__(self):
        self.vertices = [frozenset(v) for v in self.vertices]

    def faces(self) -> list:
        """All nonempty faces as sorted facet-index tuples (``()`` is P)."""
        out = set()
        for v in self.vertices:
            for k in range(len(v) + 1):
                out.update(itertools.combinations(sorted(v), k))
        return sorted(out, key=lambda f: (len(f), f))

    def meets(self, a: int, b: int) -> bool:
        return any(a in v and b in v for v in self.vertices)

    def adjacency(self) -> list:
        adj = [set() for _ in range(self.facets)]
        for v in self.vertices:
            for a, b in itertools.combinations(v, 2):
                adj[a].add(b)
                adj[b].add(a)
        return adj


@dataclass
class ValidationResult:
    problems: list

    @property
    def ok(self) -> bool:
        return not self.problems


def validate_simple(p: SimplePolytope) -> ValidationResult:
    problems = []
    for i, v in enumerate(p.vertices):
        if len(v) != p.dimension:
            problems.append(f"vertex {i} lies in {len(v)} facets, expected {p.dimension}")
        if any(not 0 <= f < p.facets for f in v):
            problems.append(f"vertex {i} names a facet outside 0..{p.facets - 1}")
    if len(set(p.vertices)) != len(p.vertices):
        problems.append("two vertices have the same facet set")
    used = set().union(*p.vertices) if p.vertices else set()
    for f in range(p.facets):
        if f not in used:
            problems.append(f"facet {f} contains no vertex")
    if p.facets and not problems:
        adj = p.adjacency()
        seen, todo = {0}, [0]
        while todo:
            a = todo.pop()
            for b in adj[a] - seen:
                seen.add(b)
                todo.append(b)
        if len(seen) != p.facets and p.dimension > 1:
            problems.append("facet-adjacency graph is disconnected")
    return ValidationResult(problems)


def require_simple(p: SimplePolytope) -> None:
    res = validate_simple(p)
    if not res.ok:
        raise InputError(res.problems[0], problems=res.problems)


def _cliques(adj: list, max_cliques: int):
    """Maximal cliques, Bron–Kerbosch with pivoting."""
    count = 0

    def expand(r, p, x):
        nonlocal count
        count += 1
        if count > max_cliques:
            raise BudgetExceeded(f"clique expansion exceeded {max_cliques} steps",
                                 limit=max_cliques)
        if not p and not x:
            yield r
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in sorted(p - adj[pivot]):
            yield from expand(r | {v}, p & adj[v], x & adj[v])
            p = p - {v}
            x = x | {v}

    yield from expand(frozenset(), set(range(len(adj))), set())


def non_flag_witness(p: SimplePolytope, max_cliques: int = DEFAULT_MAX_CLIQUES):
    """A set of pairwise-meeting facets with no common vertex, or None."""
    require_simple(p)
    verts = p.vertices
    for clique in _cliques(p.adjacency(), max_cliques):
        if not any(clique <= v for v in verts):
            return tuple(sorted(clique))
    return None


def is_flag(p: SimplePolytope, max_cliques: int = DEFAULT_MAX_CLIQUES) -> bool:
    return non_flag_witness(p, max_cliques) is None


def empty_four_circuit(p: SimplePolytope) -> Optional[tuple]:
    """(F1, F2, F3, F4) with consecutive facets meeting and both diagonals
    disjoint, or None."""
    require_simple(p)
    adj = p.adjacency()
    for f1 in range(p.facets):
        for f2, f4 in itertools.combinations(sorted(adj[f1]), 2):
            if f4 in adj[f2]:
                continue
            for f3 in sorted((adj[f2] & adj[f4]) - {f1}):
                if f3 not in adj[f1]:
                    return f1, f2, f3, f4
    return None


def has_empty_four_circuit(p: SimplePolytope) -> bool:
    return empty_four_circuit(p) is not None


# ------------------------------------------------------------ examples

def simplex(n: int) -> SimplePolytope:
    facets = range(n + 1)
    return SimplePolytope(n, n + 1, [set(facets) - {i} for i in facets])


def cube(n: int) -> SimplePolytope:
    """Facets ``2i`` and ``2i+1`` are the two sides ``x_i = 0`` and ``x_i = 1``."""
    verts = [{2 * i + b for i, b in enumerate(bits)}
             for bits in itertools.product((0, 1), repeat=n)]
    return SimplePolytope(n, 2 * n, verts)


def polygon(k: int) -> SimplePolytope:
    return SimplePolytope(2, k, [{i, (i + 1) % k} for i in range(k)])


def product(a: SimplePolytope, b: SimplePolytope) -> SimplePolytope:
    verts = [set(u) | {a.facets + f for f in v} for u in a.vertices for v in b.vertices]
    return SimplePolytope(a.dimension + b.dimension, a.facets + b.facets, verts)


def permutahedron(n: int) -> SimplePolytope:
    """Πⁿ; facet ``ω-1`` is F_ω, vertices are complete chains."""
    return SimplePolytope(n, len(enumerate_omega(n)),
                          [{w - 1 for w in ch} for ch in chains(n, n)])


# ---------------------------------------------------- mirror complexes

def _mirror_complex(p: SimplePolytope, ncells: int, facet_vectors: Sequence[int]) -> MirrorComplex:
    pairing = [[c ^ facet_vectors[f] for f in range(p.facets)] for c in range(ncells)]
    ridges = sorted({(a, b) for v in p.vertices for a, b in itertools.combinations(sorted(v), 2)})
    return MirrorComplex(p.dimension, pairing, p.faces(), ridges)


def build_real_model(p: SimplePolytope, max_cells: int = DEFAULT_MAX_CELLS) -> MirrorComplex:
    """R_P = (P × ℤ₂ᵐ)/∼; cell ``c`` is a bitmask, facet F_i glues c to c + b_i."""
    require_simple(p)
    if 1 << p.facets > max_cells:
        raise BudgetExceeded(f"2^{p.facets} cells exceeds max_cells={max_cells}",
                             limit=max_cells)
    return _mirror_complex(p, 1 << p.facets, [1 << f for f in range(p.facets)])


def degenerate_vertex(p: SimplePolytope, char: Sequence[int]) -> Optional[int]:
    """Index of a vertex whose facet vectors are dependent over ℤ₂, or None."""
    for i, v in enumerate(p.vertices):
        vecs = [char[f] for f in v]
        if _gf2_rank(vecs) < p.dimension:
            return i
    return None


def _gf2_rank(vectors: Sequence[int]) -> int:
    basis: list = []
    for x in vectors:
        for b in basis:
            x = min(x, x ^ b)
        if x:
            basis.append(x)
    return len(basis)


def build_small_cover(p: SimplePolytope, char: Sequence[int]) -> MirrorComplex:
    """R_P/Λ for a characteristic map given as ℤ₂ⁿ bitmasks per facet."""
    require_simple(p)
    if len(char) != p.facets:
        raise InputError("characteristic map needs one vector per facet",
                         facets=p.facets, given=len(char))
    if any(not 0 < x < 1 << p.dimension for x in char):
        raise InputError("characteristic vectors must be nonzero elements of Z_2^n")
    bad = degenerate_vertex(p, char)
    if bad is not None:
        raise InputError(f"characteristic map is degenerate at vertex {bad}",
                         vertex=bad, facets=sorted(p.vertices[bad]))
    return _mirror_complex(p, 1 << p.dimension, list(char))


def mirror_summary(m: MirrorComplex) -> dict:
    return {"cells": m.num_cells, "face_counts": list(face_orbits(m)),
            "euler": euler_characteristic(m)}


# ------------------------------------------------------ numeric bounds

def odd_primes_upto(m: int) -> list:
    if m < 3:
        return []
    sieve = bytearray([1]) * (m + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, math.isqrt(m) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [p for p in range(3, m + 1) if sieve[p]]


def buchstaber_lambda(m: int) -> int:
    """∏ over odd primes p of p^⌊(m-1)/(2(p-1))⌋."""
    if m < 1:
        raise InputError("m must be >= 1", m=m)
    out = 1
    for p in odd_primes_upto(m):
        out *= p ** ((m - 1) // (2 * (p - 1)))
    return out


def rho_bound(n: int) -> float:
    """Inradius threshold for a hyperbolic simple polytope of dimension n."""
    if n < 2:
        raise InputError("rho_bound needs n >= 2", n=n)
    t = n * (n + 1) * (n + 2) / 6
    return math.log(math.sqrt(t) + math.sqrt(t - 1))
