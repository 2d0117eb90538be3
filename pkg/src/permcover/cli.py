"""``permcover`` command line.

Exit codes: 0 success, 1 a verification failed, 2 bad input, 3 a budget
was exhausted.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from fractions import Fraction

from . import formats
from .assembly import enumerate_complex, face_orbits, tomei_complex
from .config import Budgets, RunConfig, env_value
from .coxeter import d_closure
from .cycles import (
    barycentric_subdivide,
    check_orientation_coherence,
    check_strong_connectivity,
    colorize,
    require_valid,
    validate_pseudomanifold,
)
from .errors import BudgetExceeded, InputError, PermcoverError, VerificationError
from .permutahedron import f_vector, vertex_coordinates
from .polytopes import (
    DEFAULT_MAX_CELLS,
    build_real_model,
    build_small_cover,
    buchstaber_lambda,
    empty_four_circuit,
    mirror_summary,
    non_flag_witness,
    rho_bound,
    validate_simple,
)
from .verification import Check, crosscheck_words_vs_states, verify_all, verify_closed

log = logging.getLogger("permcover")

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _emit(cfg: RunConfig, report: dict) -> None:
    text = formats.dumps(report)
    if cfg.report:
        formats.write_text(cfg.report, text)
    else:
        sys.stdout.write(text)


def geometry(n: int, cfg: RunConfig) -> dict:
    eps = cfg.epsilons(n)
    coords = vertex_coordinates(n, eps)
    return {
        "epsilons": [str(e) for e in eps],
        "f_vector": list(f_vector(n)),
        "vertices": [{"chain": list(ch), "coords": [str(x) for x in coords[ch]]}
                     for ch in sorted(coords)],
    }


def cmd_validate(cfg: RunConfig) -> int:
    c, colored = formats.read_cycle(cfg.input)
    rep = validate_pseudomanifold(c)
    connected, comps = check_strong_connectivity(c)
    coherent = rep.ok and check_orientation_coherence(c)
    ok = rep.ok and connected and coherent
    report = {
        "command": "validate", "ok": ok, "n": c.dimension, "r": c.r,
        "pseudomanifold": rep.ok,
        "bad_faces": [[list(f), k] for f, k in rep.bad_faces],
        "strongly_connected": connected, "components": len(comps),
        "orientation_coherent": coherent, "colored": colored,
    }
    _emit(cfg, report)
    return EXIT_OK if ok else EXIT_INPUT


def _complex_report(m, checks, extra: dict) -> dict:
    report = {"n": m.n, "r": m.r, "N": m.num_cells, "q": m.q, "k": m.k,
              "face_counts": list(face_orbits(m)),
              "checks": [ch.to_dict() for ch in checks],
              "ok": all(ch.ok for ch in checks)}
    for ch in checks:
        if ch.name == "euler_characteristic":
            report["euler"] = ch.value
        if ch.name == "qr_identity":
            report["certificate"] = ch.detail
    report.update(extra)
    return report


def _write_manifold(cfg: RunConfig, m) -> dict:
    d = formats.manifold_to_dict(m)
    if cfg.emit_geometry:
        d["geometry"] = geometry(m.n, cfg)
    if cfg.output:
        formats.write_text(cfg.output, formats.dumps(d))
    return d


def realize(c, colored: bool, cfg: RunConfig) -> tuple:
    """Full pipeline on a cycle; returns ``(complex, report)``."""
    b = cfg.budgets
    require_valid(c)
    subdivided = not colored
    source = barycentric_subdivide(c) if subdivided else c
    log.info("colouring %d simplices (subdivided=%s)", source.r, subdivided)
    cc = colorize(source)
    closure = d_closure(cc, b.max_d)
    log.info("|D| = %d (%d classes)", len(closure), closure.num_classes)
    m = enumerate_complex(cc, b.max_states, b.max_d, cfg.exact_gamma, b.budget_seconds)
    log.info("enumerated %d cells", m.num_cells)
    checks = verify_all(m)
    cross = crosscheck_words_vs_states(cc, max_len=4, samples=64, seed=0, closure=closure,
                                       max_word_len=b.max_word_len)
    checks.append(_crosscheck_check(cross))
    report = _complex_report(m, checks, {
        "command": "realize", "subdivided": subdivided, "input_r": c.r,
        "d_size": len(closure), "d_classes": closure.num_classes,
        "exact_gamma": cfg.exact_gamma, "base_simplex": cc.base,
    })
    return m, report


def cmd_realize(cfg: RunConfig) -> int:
    c, colored = formats.read_cycle(cfg.input)
    m, report = realize(c, colored, cfg)
    d = _write_manifold(cfg, m)
    if not cfg.output:
        report["manifold"] = d
    _emit(cfg, report)
    return EXIT_OK if report["ok"] else EXIT_VERIFY


def _crosscheck_check(cross) -> Check:
    return Check("word_crosscheck", cross.ok, cross.words,
                 detail={"mismatches": [list(w) for w in cross.mismatches[:5]]})


def cmd_tomei(cfg: RunConfig, n: int) -> int:
    if n < 1:
        raise InputError("n must be >= 1", n=n)
    m = tomei_complex(n)
    d = _write_manifold(cfg, m)
    checks = verify_all(m)
    report = _complex_report(m, checks, {"command": "tomei"})
    if not cfg.output:
        report["manifold"] = d
    _emit(cfg, report)
    return EXIT_OK if report["ok"] else EXIT_VERIFY


def cmd_verify(cfg: RunConfig) -> int:
    m = formats.manifold_from_dict(formats.read_json(cfg.input))
    checks = verify_all(m)
    report = _complex_report(m, checks, {"command": "verify"})
    _emit(cfg, report)
    return EXIT_OK if report["ok"] else EXIT_VERIFY


def cmd_polytope(cfg: RunConfig, max_cells: int) -> int:
    p, char = formats.polytope_from_dict(formats.read_json(cfg.input))
    val = validate_simple(p)
    report = {"command": "polytope", "dimension": p.dimension, "facets": p.facets,
              "vertices": len(p.vertices), "simple": val.ok, "problems": val.problems}
    if not val.ok:
        _emit(cfg, report)
        return EXIT_INPUT
    witness = non_flag_witness(p)
    circuit = empty_four_circuit(p)
    report.update({
        "flag": witness is None,
        "non_flag_witness": None if witness is None else list(witness),
        "empty_four_circuit": None if circuit is None else list(circuit),
        "flag_without_empty_four_circuit": witness is None and circuit is None,
    })
    ok = True
    if 1 << p.facets <= max_cells:
        real = build_real_model(p, max_cells)
        closed = verify_closed(real)
        report["real_model"] = dict(mirror_summary(real), closed=closed.ok)
        ok = ok and closed.ok
    else:
        report["real_model"] = None
    if char is not None:
        sc = build_small_cover(p, char)
        closed = verify_closed(sc)
        report["small_cover"] = dict(mirror_summary(sc), closed=closed.ok)
        ok = ok and closed.ok
    if p.dimension >= 2:
        report["rho"] = rho_bound(p.dimension)
    report["ok"] = ok
    _emit(cfg, report)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_bounds(cfg: RunConfig, m, n) -> int:
    if m is None and n is None:
        raise InputError("bounds needs --m and/or --n")
    report = {"command": "bounds"}
    if m is not None:
        report["m"] = m
        report["lambda"] = buchstaber_lambda(m)
    if n is not None:
        report["n"] = n
        report["rho"] = rho_bound(n)
        report["norm_constant"] = str(Fraction(math.factorial(n + 1), 1 << n))
    _emit(cfg, report)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="permcover",
                                 description="Realise cycles by manifolds glued from permutahedra.")
    ap.add_argument("-v", "--verbose", action="count", default=0)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input")
        p.add_argument("--output", help="manifold JSON path")
        p.add_argument("--report", help="write the report here instead of stdout")
        p.add_argument("--max-states", type=int)
        p.add_argument("--max-d", type=int)
        p.add_argument("--max-word-len", type=int)
        p.add_argument("--budget-seconds", type=float)
        p.add_argument("--epsilon-base", type=int)
        p.add_argument("--emit-geometry", action="store_true")

    common(sub.add_parser("validate", help="check a cycle file"))
    p = sub.add_parser("realize", help="build and verify the realising manifold")
    common(p)
    p.add_argument("--finer-gamma", action="store_true",
                   help="enumerate by exact homomorphism tables (larger cover)")
    p = sub.add_parser("tomei", help="the Tomei manifold glued from 2^n permutahedra")
    p.add_argument("n", type=int)
    common(p, with_input=False)
    common(sub.add_parser("verify", help="re-verify a manifold file"))
    p = sub.add_parser("polytope", help="predicates and mirror complexes of a simple polytope")
    common(p)
    p.add_argument("--max-cells", type=int, default=DEFAULT_MAX_CELLS)
    p = sub.add_parser("bounds", help="numeric bounds")
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--report")
    return ap


def _pick(cli_value, name, cast, default):
    if cli_value is not None:
        return cli_value
    env = env_value(name, cast)
    return default if env is None else env


def config_from_args(args) -> RunConfig:
    dflt = Budgets()
    budgets = Budgets(
        max_states=_pick(getattr(args, "max_states", None), "max_states", int, dflt.max_states),
        max_d=_pick(getattr(args, "max_d", None), "max_d", int, dflt.max_d),
        max_word_len=_pick(getattr(args, "max_word_len", None), "max_word_len", int,
                           dflt.max_word_len),
        budget_seconds=_pick(getattr(args, "budget_seconds", None), "budget_seconds", float,
                             dflt.budget_seconds),
    )
    cfg = RunConfig(
        command=args.command, input=getattr(args, "input", None),
        output=getattr(args, "output", None), report=getattr(args, "report", None),
        budgets=budgets,
        epsilon_base=_pick(getattr(args, "epsilon_base", None), "epsilon_base", int, 4),
        emit_geometry=getattr(args, "emit_geometry", False),
        exact_gamma=not getattr(args, "finer_gamma", False),
        verbose=args.verbose,
    )
    cfg.epsilons(1)
    return cfg


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        cfg = config_from_args(args)
        if args.command == "validate":
            return cmd_validate(cfg)
        if args.command == "realize":
            return cmd_realize(cfg)
        if args.command == "tomei":
            return cmd_tomei(cfg, args.n)
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "polytope":
            return cmd_polytope(cfg, args.max_cells)
        return cmd_bounds(cfg, args.m, args.n)
    except PermcoverError as exc:
        sys.stderr.write(formats.dumps({"error": exc.to_dict()}))
        if isinstance(exc, BudgetExceeded):
            return EXIT_BUDGET
        if isinstance(exc, VerificationError):
            return EXIT_VERIFY
        if isinstance(exc, InputError):
            return EXIT_INPUT
        return EXIT_VERIFY


if __name__ == "__main__":
    sys.exit(main())
