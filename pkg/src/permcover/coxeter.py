"""Words in F, the automorphisms ψ_ω, the semidirect product F⋊Ψ, and the
finite coset machine that labels cells of the output manifold.

Conventions
-----------
* An F-word is a tuple of Ω-bitmasks with no two equal neighbours
  (every generator x_ω is an involution).
* A ψ-composite ``(ω₁, …, ω_t)`` denotes ψ_{ω₁}∘…∘ψ_{ω_t}; it is applied
  right to left.  ψ_ω(x_γ) = x_ω x_γ x_ω when γ ⊆ ω, else x_γ.
* An element of F⋊Ψ is stored as ``(psi, x)`` meaning ψx, with product
  ``(ψ, x)(ψ', x') = (ψψ', ψ'⁻¹(x)·x')``.  s_ω = ``((ω,), (ω,))``.
* λ(uv) = λ(u)∘λ(v): the right factor acts first.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from . import perm
from .cycles import ColoredCycle, generator_permutation
from .errors import ClosureBudgetExceeded, WordBudgetExceeded
from .permutahedron import enumerate_omega, is_subset, popcount

DEFAULT_MAX_WORD_LEN = 10_000
DEFAULT_MAX_D = 100_000


# ---------------------------------------------------------------- F-words

def reduce_word(letters: Iterable[int]) -> tuple:
    out: list = []
    for a in letters:
        if out and out[-1] == a:
            out.pop()
        else:
            out.append(a)
    return tuple(out)


def fword_multiply(a: Sequence[int], b: Sequence[int]) -> tuple:
    a, b = list(a), list(b)
    i = 0
    while i < len(a) and i < len(b) and a[-1 - i] == b[i]:
        i += 1
    return tuple(a[: len(a) - i]) + tuple(b[i:])


def fword_inverse(w: Sequence[int]) -> tuple:
    return tuple(reversed(w))


def _check_len(w, max_len):
    if len(w) > max_len:
        raise WordBudgetExceeded(f"word length {len(w)} exceeds budget {max_len}",
                                 length=len(w), limit=max_len)


def psi_single(omega: int, w: Sequence[int], max_len: int = DEFAULT_MAX_WORD_LEN) -> tuple:
    out: list = []
    for g in w:
        piece = (omega, g, omega) if g != omega and is_subset(g, omega) else (g,)
        for a in piece:
            if out and out[-1] == a:
                out.pop()
            else:
                out.append(a)
        if len(out) > max_len:
            _check_len(out, max_len)
    return tuple(out)


def psi_apply(psi: Sequence[int], w: Sequence[int],
              max_len: int = DEFAULT_MAX_WORD_LEN) -> tuple:
    """Apply ψ_{psi[0]}∘…∘ψ_{psi[-1]} to the word ``w``."""
    w = reduce_word(w)
    for omega in reversed(psi):
        w = psi_single(omega, w, max_len)
    return w


def psi_inverse(psi: Sequence[int]) -> tuple:
    return tuple(reversed(psi))


def psi_equal(n: int, a: Sequence[int], b: Sequence[int],
              max_len: int = DEFAULT_MAX_WORD_LEN) -> bool:
    """Equality as automorphisms, checked on every generator."""
    return all(psi_apply(a, (g,), max_len) == psi_apply(b, (g,), max_len)
               for g in enumerate_omega(n))


# ------------------------------------------------------- F⋊Ψ elements

class ExactElement(NamedTuple):
    psi: tuple
    x: tuple


IDENTITY = ExactElement((), ())


def s(omega: int) -> ExactElement:
    return ExactElement((omega,), (omega,))


def exact_multiply(u: ExactElement, v: ExactElement,
                   max_len: int = DEFAULT_MAX_WORD_LEN) -> ExactElement:
    x = fword_multiply(psi_apply(psi_inverse(v.psi), u.x, max_len), v.x)
    _check_len(x, max_len)
    return ExactElement(u.psi + v.psi, x)


def exact_inverse(u: ExactElement, max_len: int = DEFAULT_MAX_WORD_LEN) -> ExactElement:
    return ExactElement(psi_inverse(u.psi), psi_apply(u.psi, fword_inverse(u.x), max_len))


def exact_of_word(word: Sequence[int], max_len: int = DEFAULT_MAX_WORD_LEN) -> ExactElement:
    """The product s_{word[0]} s_{word[1]} … in F⋊Ψ."""
    u = IDENTITY
    for omega in word:
        u = exact_multiply(u, s(omega), max_len)
    return u


def exact_equal(n: int, u: ExactElement, v: ExactElement,
                max_len: int = DEFAULT_MAX_WORD_LEN) -> bool:
    return u.x == v.x and psi_equal(n, u.psi, v.psi, max_len)


def theta(u: ExactElement) -> tuple:
    return u.x


def eta(word: Sequence[int]) -> int:
    """η of an S-word as a bitmask over ℤ₂ⁿ: bit j-1 is the coefficient of a_j."""
    e = 0
    for omega in word:
        e ^= 1 << (popcount(omega) - 1)
    return e


def lambda_eval(w: Sequence[int], cc: ColoredCycle) -> tuple:
    p = perm.identity(cc.r)
    for g in w:
        p = perm.compose(p, generator_permutation(cc, g))
    return p


def lambda_letters(n: int, w: Sequence[int]) -> tuple:
    """λ(w) as a reduced word over the colours 1..n+1 (a word in G)."""
    from .permutahedron import min_color_outside

    return reduce_word(min_color_outside(n, g) for g in w)


# ------------------------------------------------------------ D closure

def coset_key(table: Sequence[tuple], base: int) -> tuple:
    """Canonical form of the map x ↦ d(x)·σ₀ for a homomorphism table d.

    Two tables give the same map on F iff they agree on the orbit of σ₀
    under their generator images, so the restriction to that orbit is a
    complete invariant.
    """
    orbit = {base}
    todo = [base]
    while todo:
        a = todo.pop()
        for p in table:
            b = p[a]
            if b not in orbit:
                orbit.add(b)
                todo.append(b)
    pts = sorted(orbit)
    return tuple(pts), tuple(tuple(p[a] for a in pts) for p in table)


@dataclass
class DClosure:
    """The finitely many homomorphisms λ∘ψ (ψ ∈ Ψ) as tables over Ω.

    ``action[d][k]`` is the index of d∘ψ_ω for ω = ``omegas[k]``.
    ``cls[d]`` is the least index with the same coset key: tables in one
    class induce the same map F → A, x ↦ d(x)·σ₀.
    """

    n: int
    omegas: tuple
    tables: list
    action: list
    cls: list
    base: int

    def __len__(self):
        return len(self.tables)

    @property
    def num_classes(self) -> int:
        return len(set(self.cls))

    def index_of(self, table) -> int:
        return self.tables.index(tuple(table))


def lambda_table(cc: ColoredCycle) -> tuple:
    return tuple(generator_permutation(cc, w) for w in enumerate_omega(cc.dimension))


def compose_psi_table(table: Sequence[tuple], omegas: Sequence[int], k: int) -> tuple:
    """(d∘ψ_ω)(x_γ) = d(x_ω) d(x_γ) d(x_ω) for γ ⊆ ω, else d(x_γ)."""
    w = omegas[k]
    xw = table[k]
    return tuple(perm.compose(perm.compose(xw, t), xw) if is_subset(g, w) else t
                 for g, t in zip(omegas, table))


def d_closure(cc: ColoredCycle, max_d: int = DEFAULT_MAX_D) -> DClosure:
    omegas = tuple(enumerate_omega(cc.dimension))
    start = lambda_table(cc)
    tables = [start]
    index = {start: 0}
    action: list = []
    todo = deque([start])
    while todo:
        d = todo.popleft()
        row = []
        for k in range(len(omegas)):
            nd = compose_psi_table(d, omegas, k)
            j = index.get(nd)
            if j is None:
                if len(tables) >= max_d:
                    raise ClosureBudgetExceeded(
                        f"homomorphism-table closure exceeds max_d={max_d}",
                        limit=max_d, frontier=len(todo))
                j = index[nd] = len(tables)
                tables.append(nd)
                todo.append(nd)
            row.append(j)
        action.append(row)
    first: dict = {}
    cls = [first.setdefault(coset_key(t, cc.base), i) for i, t in enumerate(tables)]
    return DClosure(cc.dimension, omegas, tables, action, cls, cc.base)


# --------------------------------------------------------- coset machine

class EnumState(NamedTuple):
    """Complete invariant of the left coset wΓ.

    ``table``: index in D of λ∘ψ_w⁻¹ (a class representative when the
    machine is quotiented); ``point``: the image simplex φ(w)·σ₀;
    ``e``: η(w) as a bitmask.
    """

    table: int
    point: int
    e: int


class CosetMachine:
    """Left action of W on EnumStates: ``step(state(w), ω) = state(s_ω w)``.

    With ``exact_gamma`` the table component is reduced to its coset class
    and the stabiliser of the initial state is W ∩ (H̄⋊Ψ_H) ∩ ker η;
    otherwise it is the (possibly smaller) subgroup fixing λ∘ψ⁻¹ exactly.
    """

    def __init__(self, cc: ColoredCycle, closure: DClosure, exact_gamma: bool = True):
        self.cc = cc
        self.closure = closure
        self.exact_gamma = exact_gamma
        self.omegas = closure.omegas
        self._k = {w: k for k, w in enumerate(self.omegas)}
        self._ebit = [1 << (popcount(w) - 1) for w in self.omegas]
        self._canon = closure.cls if exact_gamma else list(range(len(closure)))

    def initial(self) -> EnumState:
        return EnumState(self._canon[0], self.cc.base, 0)

    def step_index(self, state: EnumState, k: int) -> EnumState:
        d = state.table
        return EnumState(self._canon[self.closure.action[d][k]],
                         self.closure.tables[d][k][state.point],
                         state.e ^ self._ebit[k])

    def step(self, state: EnumState, omega: int) -> EnumState:
        return self.step_index(state, self._k[omega])

    def state_of_word(self, word: Sequence[int]) -> EnumState:
        """State of s_{word[0]}⋯s_{word[-1]}; the rightmost letter acts first."""
        st = self.initial()
        for omega in reversed(word):
            st = self.step(st, omega)
        return st

    def in_gamma(self, word: Sequence[int]) -> bool:
        return self.state_of_word(word) == self.initial()


# ------------------------------------------------------------- Ψ_H test

def psi_h_witness(psi: Sequence[int], cc: ColoredCycle,
                  max_len: int = DEFAULT_MAX_WORD_LEN) -> Optional[tuple]:
    """Search for x ∈ F with λψ(x)·σ₀ ≠ λ(x)·σ₀.

    Returns ``(a, b, word)`` for an off-diagonal orbit point with a word x
    reaching it, or ``None`` if ψ ∈ Ψ_H.  The generator images are computed
    by explicit word arithmetic, not through the table closure.
    """
    omegas = enumerate_omega(cc.dimension)
    p = [lambda_eval(psi_apply(psi, (g,), max_len), cc) for g in omegas]
    q = [generator_permutation(cc, g) for g in omegas]
    start = (cc.base, cc.base)
    parent = {start: None}
    todo = deque([start])
    while todo:
        a, b = todo.popleft()
        if a != b:
            word = []
            node = (a, b)
            while parent[node] is not None:
                node, g = parent[node]
                word.append(g)
            return a, b, tuple(word)
        for g, pg, qg in zip(omegas, p, q):
            nxt = (pg[a], qg[b])
            if nxt not in parent:
                parent[nxt] = ((a, b), g)
                todo.append(nxt)
    return None


def psi_h_member(psi: Sequence[int], cc: ColoredCycle,
                 max_len: int = DEFAULT_MAX_WORD_LEN) -> bool:
    return psi_h_witness(psi, cc, max_len) is None


def random_word(omegas: Sequence[int], length: int, rng: random.Random) -> tuple:
    return tuple(rng.choice(omegas) for _ in range(length))
