"""Small cycles used by the tests, the scripts and ``data/``."""

from __future__ import annotations

from .cycles import SimplicialCycle


def double_simplex(n: int) -> SimplicialCycle:
    """Two copies of Δⁿ glued along their boundaries (the sphere Sⁿ)."""
    t = tuple(range(n + 1))
    return SimplicialCycle(n, [t, t], [1, -1], {v: v + 1 for v in t})


def boundary_simplex(n: int) -> SimplicialCycle:
    """∂Δ^(n+1) with its boundary orientation."""
    verts = tuple(range(n + 2))
    simplices = [verts[:i] + verts[i + 1:] for i in range(n + 2)]
    return SimplicialCycle(n, simplices, [(-1) ** i for i in range(n + 2)])


def torus7() -> SimplicialCycle:
    """The 7-vertex (Möbius) torus."""
    simplices = []
    for i in range(7):
        simplices.append((i, (i + 1) % 7, (i + 3) % 7))
        simplices.append((i, (i + 3) % 7, (i + 2) % 7))
    return SimplicialCycle(2, simplices, [1] * 14)


def polygon(k: int) -> SimplicialCycle:
    """A k-gon as a 1-cycle."""
    return SimplicialCycle(1, [(i, (i + 1) % k) for i in range(k)], [1] * k)


def three_sheets() -> SimplicialCycle:
    """Three triangles on one edge: not a pseudo-manifold."""
    return SimplicialCycle(2, [(0, 1, 2), (0, 1, 3), (0, 1, 4)], [1, 1, 1])


def two_double_triangles() -> SimplicialCycle:
    return SimplicialCycle(2, [(0, 1, 2), (0, 1, 2), (3, 4, 5), (3, 4, 5)], [1, -1, 1, -1])
