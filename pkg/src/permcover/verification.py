"""Checks on constructed complexes, and word-level cross-checks of the
coset machine."""

from __future__ import annotations

import itertools
import math
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import coxeter as cx
from . import perm
from .assembly import (
    MirrorComplex,
    PermutahedralComplex,
    euler_characteristic,
    face_orbit_sizes,
    face_orbits,
    project_to_tomei,
)
from .cycles import ColoredCycle, share_face_of_type
from .errors import VerificationError
from .permutahedron import enumerate_omega, is_subset, ridge_pairs


@dataclass
class Check:
    name: str
    ok: bool
    value: object = None
    detail: dict = field(default_factory=dict)

    def require(self):
        if not self.ok:
            raise VerificationError(f"{self.name} failed", check=self.name, **self.detail)
        return self.value

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "value": self.value, "detail": self.detail}


def verify_closed(m: MirrorComplex) -> Check:
    """Facet pairings are fixed-point-free involutions, every ridge is
    surrounded by a 4-cycle of distinct cells, and every face class is a
    free orbit of its local group (so all links are spheres)."""
    name = "closed_manifold"
    ncells = m.num_cells
    for c, row in enumerate(m.pairing):
        for j, d in enumerate(row):
            if not 0 <= d < ncells:
                return Check(name, False, detail={"reason": "dangling", "cell": c, "facet": j})
            if d == c:
                return Check(name, False, detail={"reason": "self_paired", "cell": c, "facet": j})
            if m.pairing[d][j] != c:
                return Check(name, False, detail={"reason": "not_involution", "cell": c, "facet": j})
    for a, b in m.ridges:
        for c in range(ncells):
            c1 = m.pairing[c][a]
            c2 = m.pairing[c1][b]
            c3 = m.pairing[c2][a]
            if m.pairing[c3][b] != c or len({c, c1, c2, c3}) != 4:
                return Check(name, False, detail={"reason": "ridge_cycle", "cell": c,
                                                  "ridge": [a, b]})
    for face, sizes in face_orbit_sizes(m).items():
        bad = [s for s in sizes if s != 1 << len(face)]
        if bad:
            return Check(name, False, detail={"reason": "face_orbit", "face": list(face),
                                              "orbit_size": bad[0]})
    return Check(name, True)


def verify_degree(m: PermutahedralComplex) -> Check:
    """Every simplex of the target is covered by the same number q of cells,
    each mapped with the orientation of the simplex."""
    name = "uniform_degree"
    for c, (a, sg) in enumerate(zip(m.image, m.sign)):
        if m.simplex_signs[a] != sg:
            return Check(name, False, detail={"reason": "orientation", "cell": c, "simplex": a})
    hist = Counter(m.image)
    counts = [hist.get(a, 0) for a in range(m.r)]
    if len(set(counts)) != 1 or counts[0] == 0:
        return Check(name, False, detail={"reason": "non_uniform",
                                          "histogram": dict(sorted(Counter(counts).items()))})
    return Check(name, True, counts[0])


def verify_qr_identity(m: PermutahedralComplex) -> Check:
    name = "qr_identity"
    q = verify_degree(m).require()
    proj = project_to_tomei(m)
    k = Counter(proj)[0]
    n, r = m.n, m.r
    ok = q * r == (1 << n) * k and q == m.q and k == m.k
    ratio = Fraction(k, q)
    return Check(name, ok, {"q": q, "r": r, "k": k}, detail={
        "k_over_q": str(ratio),
        "r_over_2n": str(Fraction(r, 1 << n)),
        "norm_constant": str(Fraction(math.factorial(n + 1), 1 << n)),
        "cells": m.num_cells,
    })


def verify_euler(m: MirrorComplex) -> Check:
    chi = euler_characteristic(m)
    ok = m.n % 2 == 0 or chi == 0
    return Check("euler_characteristic", ok, chi, detail={"face_counts": list(face_orbits(m))})


def verify_orientation_alternation(m: PermutahedralComplex) -> Check:
    """Across every F_ω the two cells have opposite signs and images sharing
    their type-ω face; each cell's sign is that of its image simplex."""
    name = "orientation_alternation"
    n = m.n
    for c, row in enumerate(m.pairing):
        if m.sign[c] != m.simplex_signs[m.image[c]]:
            return Check(name, False, detail={"reason": "image_sign", "cell": c})
        ta = m.simplices[m.image[c]]
        for j, d in enumerate(row):
            omega = j + 1
            if m.sign[d] != -m.sign[c]:
                return Check(name, False, detail={"reason": "sign", "cell": c, "omega": omega})
            tb = m.simplices[m.image[d]]
            if any(ta[i] != tb[i] for i in range(n + 1) if omega >> i & 1):
                return Check(name, False, detail={"reason": "face_type", "cell": c,
                                                  "omega": omega})
    return Check(name, True)


def verify_tomei_isomorphism(m: PermutahedralComplex) -> Check:
    """True iff the ℤ₂ⁿ-projection is a bijection onto the Tomei manifold."""
    proj = project_to_tomei(m)
    ok = sorted(proj) == list(range(1 << m.n))
    return Check("tomei_isomorphism", ok, detail={"cells": m.num_cells})


def verify_all(m: PermutahedralComplex) -> list:
    checks = [verify_closed(m), verify_orientation_alternation(m), verify_degree(m)]
    try:
        checks.append(verify_qr_identity(m))
    except VerificationError as exc:
        checks.append(Check("qr_identity", False, detail=exc.to_dict()))
    checks.append(verify_euler(m))
    return checks


# ----------------------------------------------------- word-level checks

def coxeter_relation_failures_exact(n: int) -> list:
    """Pairs violating s_ω² = 1 or nested commutation, as exact elements."""
    bad = []
    for w in enumerate_omega(n):
        if not cx.exact_equal(n, cx.exact_of_word((w, w)), cx.IDENTITY):
            bad.append(("square", w))
    for a, b in ridge_pairs(n):
        if not cx.exact_equal(n, cx.exact_of_word((a, b)), cx.exact_of_word((b, a))):
            bad.append(("commute", a, b))
    return bad


def noncommuting_pairs_exact(n: int) -> list:
    return [(a, b) for a, b in itertools.combinations(enumerate_omega(n), 2)
            if not is_subset(a, b) and not is_subset(b, a)
            and not cx.exact_equal(n, cx.exact_of_word((a, b)), cx.exact_of_word((b, a)))]


def coxeter_relation_failures_states(m: MirrorComplex) -> list:
    """The same relations read as maps on cells."""
    p = m.pairing
    bad = []
    for c in range(m.num_cells):
        for j in range(len(p[c])):
            if p[p[c][j]][j] != c:
                bad.append(("square", c, j))
        for a, b in m.ridges:
            if p[p[c][a]][b] != p[p[c][b]][a]:
                bad.append(("commute", c, a, b))
    return bad


def noncommuting_pairs_states(m: MirrorComplex) -> list:
    p = m.pairing
    nk = len(p[0])
    ridge = set(m.ridges)
    out = []
    for a, b in itertools.combinations(range(nk), 2):
        if (a, b) in ridge or (b, a) in ridge:
            continue
        if any(p[p[c][a]][b] != p[p[c][b]][a] for c in range(m.num_cells)):
            out.append((a, b))
    return out


def theta_conjugator(n: int, word, omega: int) -> Optional[tuple]:
    """θ(s_ω w)θ(w)⁻¹ written as y x_ω y⁻¹ with y over {ω' ⊇ ω}, or None.

    In a free product of ℤ₂'s such a conjugate has a unique reduced form,
    an odd palindrome centred on x_ω.
    """
    w = cx.exact_of_word(word)
    z = cx.fword_multiply(cx.theta(cx.exact_of_word((omega,) + tuple(word))),
                          cx.fword_inverse(cx.theta(w)))
    if len(z) % 2 == 0 or z != z[::-1] or z[len(z) // 2] != omega:
        return None
    y = z[: len(z) // 2]
    if not all(is_subset(omega, g) for g in y):
        return None
    return y


def phi_step_word(cc: ColoredCycle, word, omega: int) -> Optional[tuple]:
    """The reduced G-word g with φ(s_ω w) = g φ(w), if it has odd length,
    only uses colours outside ω, and matches the permutation action."""
    n = cc.dimension
    w = cx.exact_of_word(word)
    z = cx.fword_multiply(cx.theta(cx.exact_of_word((omega,) + tuple(word))),
                          cx.fword_inverse(cx.theta(w)))
    g = cx.lambda_letters(n, z)
    if len(g) % 2 == 0 or any(omega >> (i - 1) & 1 for i in g):
        return None
    p = perm.identity(cc.r)
    for i in g:
        p = perm.compose(p, cc.involutions[i - 1])
    if p != cx.lambda_eval(z, cc):
        return None
    return g


@dataclass
class CrosscheckReport:
    words: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _exact_state(cc: ColoredCycle, closure: cx.DClosure, u: cx.ExactElement, word,
                 max_word_len: int = cx.DEFAULT_MAX_WORD_LEN):
    """State components of w computed purely by word arithmetic."""
    inv = cx.psi_inverse(u.psi)
    table = tuple(cx.lambda_eval(cx.psi_apply(inv, (g,), max_word_len), cc)
                  for g in closure.omegas)
    point = cx.lambda_eval(u.x, cc)[cc.base]
    return table, point, cx.eta(word)


def _compare(cc, closure, raw, quot, u, word, report, max_word_len):
    report.words += 1
    table, point, e = _exact_state(cc, closure, u, word, max_word_len)
    sr = raw.state_of_word(word)
    sq = quot.state_of_word(word)
    ok = (closure.tables[sr.table] == table and sr.point == point and sr.e == e
          and sq.point == point and sq.e == e
          and cx.coset_key(closure.tables[sq.table], cc.base) == cx.coset_key(table, cc.base))
    if not ok:
        report.mismatches.append(tuple(word))


def crosscheck_words_vs_states(cc: ColoredCycle, max_len: int = 6,
                               samples: Optional[int] = None, seed: int = 0,
                               closure: Optional[cx.DClosure] = None,
                               max_word_len: int = cx.DEFAULT_MAX_WORD_LEN) -> CrosscheckReport:
    """Compare the coset machine with exact F⋊Ψ arithmetic.

    Exhaustive over all S-words of length ≤ ``max_len`` unless ``samples``
    is given, in which case that many random words are drawn.
    """
    closure = closure or cx.d_closure(cc)
    raw = cx.CosetMachine(cc, closure, exact_gamma=False)
    quot = cx.CosetMachine(cc, closure, exact_gamma=True)
    omegas = closure.omegas
    report = CrosscheckReport()
    if samples is not None:
        rng = random.Random(seed)
        for _ in range(samples):
            word = cx.random_word(omegas, rng.randint(0, max_len), rng)
            u = cx.exact_of_word(word, max_word_len)
            _compare(cc, closure, raw, quot, u, word, report, max_word_len)
        return report

    def grow(word, u):
        _compare(cc, closure, raw, quot, u, word, report, max_word_len)
        if len(word) < max_len:
            for w in omegas:
                grow((w,) + word, cx.exact_multiply(cx.s(w), u, max_word_len))

    grow((), cx.IDENTITY)
    return report


def image_of_word(cc: ColoredCycle, word) -> int:
    """φ(w)·σ₀ computed from the exact element."""
    return cx.lambda_eval(cx.theta(cx.exact_of_word(word)), cc)[cc.base]


def step_image_is_adjacent(cc: ColoredCycle, word, omega: int) -> bool:
    a = image_of_word(cc, word)
    b = image_of_word(cc, (omega,) + tuple(word))
    return share_face_of_type(cc, a, b, omega) and cc.signs[a] == -cc.signs[b]
