"""Oriented simplicial cycles: validation, subdivision, regular colouring.

A cycle is a list of ``n``-simplices (vertex tuples) with a sign per simplex;
the tuple order with that sign is the simplex's coefficient.  Duplicated
simplices are allowed, so the two-simplex "double simplex" is a valid input.
"""

from __future__ import annotations

import itertools
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import perm
from .errors import (
    ColoringError,
    InputError,
    NotPseudomanifoldError,
    NotStronglyConnectedError,
    OrientationError,
)
from .permutahedron import min_color_outside, check_omega


@dataclass
class SimplicialCycle:
    dimension: int
    simplices: list
    orientations: list
    colors: Optional[dict] = None

    def __post_init__(self):
        self.simplices = [tuple(s) for s in self.simplices]
        self.orientations = [int(o) for o in self.orientations]
        if self.colors is not None:
            self.colors = {int(v): int(c) for v, c in self.colors.items()}

    @property
    def r(self) -> int:
        return len(self.simplices)

    @property
    def vertices(self) -> list:
        return sorted({v for s in self.simplices for v in s})


@dataclass
class ValidationReport:
    bad_faces: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.bad_faces


@dataclass(frozen=True)
class ColoredCycle:
    """Regularly coloured cycle with the facet-adjacency involutions.

    ``simplices[a][i]`` is the vertex of colour ``i+1``; ``involutions[i]`` is
    ι_(i+1), swapping simplices across their facet missing colour ``i+1``.
    """

    dimension: int
    simplices: tuple
    signs: tuple
    involutions: tuple
    base: int

    @property
    def r(self) -> int:
        return len(self.simplices)


def check_well_formed(c: SimplicialCycle) -> None:
    n = c.dimension
    if n < 1:
        raise InputError("dimension must be >= 1", dimension=n)
    if not c.simplices:
        raise InputError("cycle has no simplices")
    if len(c.orientations) != len(c.simplices):
        raise InputError("need one orientation per simplex",
                         simplices=len(c.simplices), orientations=len(c.orientations))
    for a, (s, o) in enumerate(zip(c.simplices, c.orientations)):
        if len(s) != n + 1:
            raise InputError(f"simplex {a} has {len(s)} vertices, expected {n + 1}",
                             simplex=a)
        if len(set(s)) != len(s):
            raise InputError(f"simplex {a} repeats a vertex", simplex=a, vertices=list(s))
        if o not in (1, -1):
            raise InputError(f"orientation of simplex {a} must be +1 or -1", simplex=a)


def _facet_incidence(c: SimplicialCycle) -> dict:
    """(n-1)-face (sorted tuple) -> list of (simplex, induced sign on sorted face)."""
    inc = defaultdict(list)
    for a, (s, o) in enumerate(zip(c.simplices, c.orientations)):
        for i in range(len(s)):
            face = s[:i] + s[i + 1:]
            sign = o * (-1) ** i * perm.sorting_sign(face)
            inc[tuple(sorted(face))].append((a, sign))
    return inc


def validate_pseudomanifold(c: SimplicialCycle) -> ValidationReport:
    check_well_formed(c)
    inc = _facet_incidence(c)
    bad = [(face, len(v)) for face, v in sorted(inc.items()) if len(v) != 2]
    return ValidationReport(bad_faces=bad)


def adjacency_components(c: SimplicialCycle) -> list:
    inc = _facet_incidence(c)
    adj = defaultdict(set)
    for v in inc.values():
        for (a, _), (b, _) in itertools.combinations(v, 2):
            adj[a].add(b)
            adj[b].add(a)
    seen = [False] * c.r
    comps = []
    for start in range(c.r):
        if seen[start]:
            continue
        seen[start] = True
        comp, todo = [], deque([start])
        while todo:
            a = todo.popleft()
            comp.append(a)
            for b in sorted(adj[a]):
                if not seen[b]:
                    seen[b] = True
                    todo.append(b)
        comps.append(sorted(comp))
    return comps


def check_strong_connectivity(c: SimplicialCycle) -> tuple:
    """Return ``(connected, components)`` for the facet-adjacency graph."""
    check_well_formed(c)
    comps = adjacency_components(c)
    return len(comps) == 1, comps


def check_orientation_coherence(c: SimplicialCycle) -> bool:
    """True iff the two simplices at every (n-1)-face induce opposite orientations."""
    check_well_formed(c)
    for v in _facet_incidence(c).values():
        if len(v) != 2 or v[0][1] + v[1][1] != 0:
            return False
    return True


def boundary_is_zero(c: SimplicialCycle) -> bool:
    check_well_formed(c)
    total = defaultdict(int)
    for face, v in _facet_incidence(c).items():
        for _, sign in v:
            total[face] += sign
    return all(x == 0 for x in total.values())


def require_valid(c: SimplicialCycle) -> None:
    report = validate_pseudomanifold(c)
    if not report.ok:
        face, count = report.bad_faces[0]
        raise NotPseudomanifoldError(
            f"face {list(face)} lies in {count} simplices (expected 2)",
            bad_faces=[[list(f), k] for f, k in report.bad_faces])
    connected, comps = check_strong_connectivity(c)
    if not connected:
        raise NotStronglyConnectedError(
            f"facet-adjacency graph has {len(comps)} components",
            components=len(comps))
    if not check_orientation_coherence(c):
        raise OrientationError("adjacent simplices induce equal orientations on a shared face")


def barycentric_subdivide(c: SimplicialCycle) -> SimplicialCycle:
    """First barycentric subdivision, coloured by face dimension + 1.

    The flag ``{v_p0} ⊂ {v_p0, v_p1} ⊂ …`` of a simplex with sign ``s``
    gets sign ``s·sgn(p)``.  New vertex ids follow first appearance.  The
    barycentre of a top simplex belongs to that simplex alone, so repeated
    simplices stay distinct.
    """
    check_well_formed(c)
    n = c.dimension
    ids: dict = {}
    simplices, signs = [], []
    for a, (s, o) in enumerate(zip(c.simplices, c.orientations)):
        for p in itertools.permutations(range(n + 1)):
            flag = [frozenset(s[p[j]] for j in range(k + 1)) for k in range(n)]
            flag.append(a)
            simplices.append(tuple(ids.setdefault(face, len(ids)) for face in flag))
            signs.append(o * perm.parity(p))
    colors = {i: n + 1 if isinstance(face, int) else len(face) for face, i in ids.items()}
    return SimplicialCycle(n, simplices, signs, colors)


def _propagate_coloring(c: SimplicialCycle) -> dict:
    """The regular colouring of a strongly connected pseudo-manifold is unique
    up to renaming colours; fix it on simplex 0 and push across facets."""
    n = c.dimension
    inc = _facet_incidence(c)
    by_simplex = defaultdict(list)
    for face, v in inc.items():
        for a, _ in v:
            by_simplex[a].append((face, [b for b, _ in v if b != a]))
    colors = {v: i + 1 for i, v in enumerate(c.simplices[0])}
    todo, seen = deque([0]), {0}
    while todo:
        a = todo.popleft()
        for face, others in by_simplex[a]:
            for b in others:
                for v in c.simplices[b]:
                    if v in face:
                        continue
                    (missing,) = set(range(1, n + 2)) - {colors[u] for u in face}
                    if colors.setdefault(v, missing) != missing:
                        raise ColoringError(
                            f"simplex {b} admits no regular colouring consistent with simplex 0",
                            simplex=b)
                if b not in seen:
                    seen.add(b)
                    todo.append(b)
    return colors


def colorize(c: SimplicialCycle, precolored: Optional[dict] = None) -> ColoredCycle:
    """Build the coloured cycle (simplex set A, signs, involutions ι_i, base σ₀).

    Uses ``precolored``, else ``c.colors``, else the unique regular colouring
    if one exists.  A simplex's sign is its stored sign times the parity of
    the reordering into colour order.
    """
    require_valid(c)
    n = c.dimension
    colors = precolored if precolored is not None else c.colors
    if colors is None:
        colors = _propagate_coloring(c)
    ordered, signs = [], []
    for a, (s, o) in enumerate(zip(c.simplices, c.orientations)):
        try:
            cs = [colors[v] for v in s]
        except KeyError as exc:
            raise ColoringError(f"vertex {exc.args[0]} of simplex {a} has no colour",
                                simplex=a) from None
        if sorted(cs) != list(range(1, n + 2)):
            raise ColoringError(f"simplex {a} is not coloured with {n + 1} distinct colours",
                                simplex=a, colors=cs)
        order = sorted(range(n + 1), key=lambda j: cs[j])
        ordered.append(tuple(s[j] for j in order))
        signs.append(o * perm.parity(order))

    facets = defaultdict(list)
    for a, t in enumerate(ordered):
        for i in range(n + 1):
            facets[(i, t[:i] + t[i + 1:])].append(a)
    inv = [[None] * len(ordered) for _ in range(n + 1)]
    for (i, _), pair in facets.items():
        if len(pair) != 2:
            raise ColoringError("colour type of a facet is not shared by exactly two simplices",
                                simplices=pair)
        a, b = pair
        inv[i][a], inv[i][b] = b, a
    for i in range(n + 1):
        for a in range(len(ordered)):
            if signs[inv[i][a]] != -signs[a]:
                raise OrientationError("adjacent simplices share a coloured orientation",
                                       simplex=a, color=i + 1)
    base = min(a for a, s in enumerate(signs) if s == 1)
    return ColoredCycle(n, tuple(ordered), tuple(signs),
                        tuple(tuple(x) for x in inv), base)


def generator_permutation(cc: ColoredCycle, omega: int) -> tuple:
    """λ(x_ω) as a permutation of A: ι_i with i the least colour outside ω."""
    check_omega(cc.dimension, omega)
    return cc.involutions[min_color_outside(cc.dimension, omega) - 1]


def share_face_of_type(cc: ColoredCycle, a: int, b: int, omega: int) -> bool:
    ta, tb = cc.simplices[a], cc.simplices[b]
    return all(ta[i] == tb[i] for i in range(cc.dimension + 1) if omega >> i & 1)


def relabel(c: SimplicialCycle, mapping: dict) -> SimplicialCycle:
    """Rename vertices; colours follow their vertices."""
    colors = None if c.colors is None else {mapping[v]: k for v, k in c.colors.items()}
    return SimplicialCycle(c.dimension, [tuple(mapping[v] for v in s) for s in c.simplices],
                           list(c.orientations), colors)


def permute_simplices(c: SimplicialCycle, order: Sequence[int]) -> SimplicialCycle:
    return SimplicialCycle(c.dimension, [c.simplices[i] for i in order],
                           [c.orientations[i] for i in order], c.colors)
