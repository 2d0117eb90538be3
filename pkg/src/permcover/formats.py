"""JSON formats for cycles, manifolds and polytopes.

All writers emit UTF-8 with sorted keys so that equal objects serialise to
identical bytes.
"""

from __future__ import annotations

import json
from pathlib import Path

from .assembly import PermutahedralComplex, face_orbits, permutahedron_faces, permutahedron_ridges
from .cycles import SimplicialCycle
from .errors import InputError
from .polytopes import SimplePolytope


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def read_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise InputError(f"no such file: {path}", path=str(path)) from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg})", path=str(path)) from None


def write_text(path, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def _need(d: dict, key: str, kind: str):
    if key not in d:
        raise InputError(f"{kind} JSON lacks key {key!r}", key=key)
    return d[key]


# ---------------------------------------------------------------- cycles

def cycle_from_dict(d: dict) -> SimplicialCycle:
    n = _need(d, "dimension", "cycle")
    simplices = _need(d, "simplices", "cycle")
    orientations = d.get("orientations", [1] * len(simplices))
    colors = d.get("colors")
    if isinstance(colors, list):
        colors = dict(enumerate(colors))
    elif isinstance(colors, dict):
        colors = {int(k): v for k, v in colors.items()}
    if d.get("colored") and colors is None:
        raise InputError("cycle is marked colored but has no colors")
    if not isinstance(n, int) or not isinstance(simplices, list):
        raise InputError("cycle JSON has wrong field types")
    try:
        return SimplicialCycle(n, [tuple(int(v) for v in s) for s in simplices],
                               orientations, colors)
    except (TypeError, ValueError) as exc:
        raise InputError(f"cycle JSON has malformed entries ({exc})") from None


def cycle_to_dict(c: SimplicialCycle) -> dict:
    out = {"dimension": c.dimension, "simplices": [list(s) for s in c.simplices],
           "orientations": list(c.orientations), "colored": c.colors is not None}
    if c.colors is not None:
        out["colors"] = {str(v): c.colors[v] for v in sorted(c.colors)}
    return out


def read_cycle(path) -> tuple:
    """Returns the cycle and whether it was flagged as already coloured."""
    d = read_json(path)
    return cycle_from_dict(d), bool(d.get("colored"))


# ------------------------------------------------------------- manifolds

def bits_of(e: int, n: int) -> list:
    return [e >> j & 1 for j in range(n)]


def int_of(bits) -> int:
    return sum(b << j for j, b in enumerate(bits))


def manifold_to_dict(m: PermutahedralComplex) -> dict:
    cells = [{"id": c, "e": bits_of(m.e[c], m.n), "image": m.image[c], "sign": m.sign[c]}
             for c in range(m.num_cells)]
    pairings = [[c, j + 1, d] for c, row in enumerate(m.pairing)
                for j, d in enumerate(row) if c < d]
    return {"n": m.n, "r": m.r, "q": m.q, "k": m.k, "cells": cells, "pairings": pairings,
            "face_counts": list(face_orbits(m)), "simplices": [list(t) for t in m.simplices],
            "simplex_signs": list(m.simplex_signs), "base": m.base}


def manifold_from_dict(d: dict) -> PermutahedralComplex:
    n = _need(d, "n", "manifold")
    cells = sorted(_need(d, "cells", "manifold"), key=lambda c: c["id"])
    if [c["id"] for c in cells] != list(range(len(cells))):
        raise InputError("manifold cell ids must be 0..N-1")
    nk = (1 << (n + 1)) - 2
    pairing = [[None] * nk for _ in cells]
    for c, omega, c2 in _need(d, "pairings", "manifold"):
        if not 0 < omega <= nk:
            raise InputError(f"pairing uses omega={omega} outside 1..{nk}")
        pairing[c][omega - 1] = c2
        pairing[c2][omega - 1] = c
    if any(x is None for row in pairing for x in row):
        raise InputError("manifold pairing table is incomplete")
    return PermutahedralComplex(
        n=n, pairing=pairing, faces=permutahedron_faces(n), ridges=permutahedron_ridges(n),
        r=_need(d, "r", "manifold"), e=[int_of(c["e"]) for c in cells],
        image=[c["image"] for c in cells], sign=[c["sign"] for c in cells],
        simplices=[list(t) for t in d.get("simplices", [])],
        simplex_signs=list(d.get("simplex_signs", [])), base=d.get("base", 0),
        q=_need(d, "q", "manifold"), k=_need(d, "k", "manifold"))


# ------------------------------------------------------------- polytopes

def polytope_from_dict(d: dict) -> tuple:
    """Returns the polytope and its characteristic map (bitmasks) or None."""
    n = _need(d, "dimension", "polytope")
    m = _need(d, "facets", "polytope")
    verts = _need(d, "vertices", "polytope")
    p = SimplePolytope(n, m, [set(v) for v in verts])
    char = d.get("characteristic")
    if char is not None:
        char = [int_of(v) if isinstance(v, list) else int(v) for v in char]
    return p, char


def polytope_to_dict(p: SimplePolytope, char=None) -> dict:
    out = {"dimension": p.dimension, "facets": p.facets,
           "vertices": [sorted(v) for v in p.vertices]}
    if char is not None:
        out["characteristic"] = [bits_of(x, p.dimension) for x in char]
    return out
