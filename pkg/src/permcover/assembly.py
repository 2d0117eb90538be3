"""Cell complexes glued from copies of one right-angled polytope.

A :class:`MirrorComplex` is a set of cells, each a copy of the same simple
polytope, with facet ``j`` of cell ``c`` glued by the identity to facet ``j``
of ``pairing[c][j]``.  The permutahedral complexes built from a cycle and the
Tomei manifold are special cases, as are the real models in ``polytopes``.
"""

from __future__ import annotations

import time
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Optional

from .coxeter import DEFAULT_MAX_D, CosetMachine, EnumState, d_closure
from .cycles import ColoredCycle
from .errors import StateBudgetExceeded, TimeBudgetExceeded, VerificationError
from .permutahedron import all_chains, enumerate_omega, popcount, ridge_pairs

DEFAULT_MAX_STATES = 2_000_000


@dataclass
class MirrorComplex:
    """``faces``: facet-index sets (sorted tuples) naming the faces of the
    polytope, with ``()`` the polytope itself; ``ridges``: the pairs of
    facets that meet."""

    n: int
    pairing: list
    faces: list
    ridges: list

    @property
    def num_cells(self) -> int:
        return len(self.pairing)


@dataclass
class PermutahedralComplex(MirrorComplex):
    """Cells are permutahedra; generator ``k`` is the facet F_ω, ω = k+1.

    ``image[c]`` indexes ``simplices`` (colour-ordered vertex tuples of the
    target cycle), ``sign[c]`` is the orientation of the cell, ``e[c]`` its
    class in ℤ₂ⁿ.
    """

    r: int = 0
    e: list = field(default_factory=list)
    image: list = field(default_factory=list)
    sign: list = field(default_factory=list)
    simplices: list = field(default_factory=list)
    simplex_signs: list = field(default_factory=list)
    base: int = 0
    q: int = 0
    k: int = 0

    @property
    def omegas(self) -> list:
        return enumerate_omega(self.n)


def permutahedron_faces(n: int) -> list:
    return [tuple(w - 1 for w in ch) for ch in all_chains(n)]


def permutahedron_ridges(n: int) -> list:
    return [(a - 1, b - 1) for a, b in ridge_pairs(n)]


def _counts(n: int, r: int, num_cells: int) -> tuple:
    if num_cells % r or num_cells % (1 << n):
        raise VerificationError(
            f"cell count {num_cells} is not divisible by r={r} and 2^n={1 << n}",
            cells=num_cells, r=r)
    return num_cells // r, num_cells // (1 << n)


def build_complex(cc: ColoredCycle, states: list, pairing: list) -> PermutahedralComplex:
    n = cc.dimension
    image = [st.point for st in states]
    e = [st.e for st in states]
    sign = [(-1) ** popcount(x) for x in e]
    q, k = _counts(n, cc.r, len(states))
    return PermutahedralComplex(
        n=n, pairing=pairing, faces=permutahedron_faces(n), ridges=permutahedron_ridges(n),
        r=cc.r, e=e, image=image, sign=sign, simplices=[list(t) for t in cc.simplices],
        simplex_signs=list(cc.signs), base=cc.base, q=q, k=k)


def enumerate_states(machine: CosetMachine, max_states: int = DEFAULT_MAX_STATES,
                     budget_seconds: Optional[float] = None) -> tuple:
    """Breadth-first orbit of the initial state; ids in discovery order."""
    start = machine.initial()
    index = {start: 0}
    states = [start]
    pairing: list = []
    todo = deque([start])
    nk = len(machine.omegas)
    deadline = None if budget_seconds is None else time.monotonic() + budget_seconds
    while todo:
        st = todo.popleft()
        row = []
        for k in range(nk):
            nxt = machine.step_index(st, k)
            j = index.get(nxt)
            if j is None:
                if len(states) >= max_states:
                    raise StateBudgetExceeded(
                        f"more than max_states={max_states} cells",
                        limit=max_states, discovered=len(states), frontier=len(todo))
                j = index[nxt] = len(states)
                states.append(nxt)
                todo.append(nxt)
            row.append(j)
        pairing.append(row)
        if deadline is not None and len(pairing) % 4096 == 0 and time.monotonic() > deadline:
            raise TimeBudgetExceeded(f"cell enumeration exceeded {budget_seconds}s",
                                     discovered=len(states), frontier=len(todo))
    return states, pairing


def enumerate_complex(cc: ColoredCycle, max_states: int = DEFAULT_MAX_STATES,
                      max_d: int = DEFAULT_MAX_D, exact_gamma: bool = True,
                      budget_seconds: Optional[float] = None) -> PermutahedralComplex:
    machine = CosetMachine(cc, d_closure(cc, max_d), exact_gamma=exact_gamma)
    states, pairing = enumerate_states(machine, max_states, budget_seconds)
    return build_complex(cc, states, pairing)


def tomei_complex(n: int) -> PermutahedralComplex:
    """M̃ⁿ/K: cells ℤ₂ⁿ (as bitmasks), F_ω glues a to a + a_|ω|.

    Mapped onto the double simplex: even cells to simplex 0, odd to 1.
    """
    omegas = enumerate_omega(n)
    cells = list(range(1 << n))
    pairing = [[a ^ (1 << (popcount(w) - 1)) for w in omegas] for a in cells]
    sign = [(-1) ** popcount(a) for a in cells]
    simplices = [list(range(n + 1)), list(range(n + 1))]
    return PermutahedralComplex(
        n=n, pairing=pairing, faces=permutahedron_faces(n), ridges=permutahedron_ridges(n),
        r=2, e=cells, image=[0 if sg == 1 else 1 for sg in sign], sign=sign,
        simplices=simplices, simplex_signs=[1, -1], base=0,
        q=1 << (n - 1), k=1)


def project_to_tomei(m: PermutahedralComplex) -> list:
    """Cell -> its ℤ₂ⁿ class, checked to be a k-sheeted covering map."""
    t = tomei_complex(m.n)
    proj = list(m.e)
    for c, row in enumerate(m.pairing):
        for k, c2 in enumerate(row):
            if proj[c2] != t.pairing[proj[c]][k]:
                raise VerificationError("projection does not commute with facet pairing",
                                        cell=c, omega=k + 1)
    fibers = Counter(proj)
    sizes = {fibers.get(a, 0) for a in range(1 << m.n)}
    if len(sizes) != 1:
        raise VerificationError(f"unequal fibres over the Tomei manifold: {sorted(sizes)}",
                                fibers=dict(sorted(fibers.items())))
    return proj


def face_orbit_sizes(m: MirrorComplex) -> dict:
    """Face classes ``{face: [orbit sizes]}``.

    The class of (cell c, face C) is the orbit of c under the pairings of
    the facets containing C.
    """
    out = {}
    for face in m.faces:
        seen = [False] * m.num_cells
        sizes = []
        for start in range(m.num_cells):
            if seen[start]:
                continue
            seen[start] = True
            size, todo = 0, [start]
            while todo:
                c = todo.pop()
                size += 1
                for j in face:
                    d = m.pairing[c][j]
                    if not seen[d]:
                        seen[d] = True
                        todo.append(d)
            sizes.append(size)
        out[face] = sizes
    return out


def face_orbits(m: MirrorComplex) -> tuple:
    """Number of face classes in each dimension ``0..n``."""
    counts = [0] * (m.n + 1)
    for face, sizes in face_orbit_sizes(m).items():
        counts[m.n - len(face)] += len(sizes)
    return tuple(counts)


def euler_characteristic(m: MirrorComplex) -> int:
    return sum((-1) ** d * f for d, f in enumerate(face_orbits(m)))


__all__ = [
    "MirrorComplex", "PermutahedralComplex", "EnumState", "enumerate_complex",
    "enumerate_states", "tomei_complex", "project_to_tomei", "face_orbits",
    "face_orbit_sizes", "euler_characteristic",
]
