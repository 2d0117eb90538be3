"""Realise every built-in cycle and print a one-line summary per fixture."""

import argparse
import time

from permcover import fixtures
from permcover.cli import realize
from permcover.config import Budgets, RunConfig

CASES = [
    ("double simplex n=1", fixtures.double_simplex(1), True),
    ("double simplex n=2", fixtures.double_simplex(2), True),
    ("double simplex n=3", fixtures.double_simplex(3), True),
    ("hexagon loop", fixtures.polygon(6), False),
    ("tetrahedron boundary", fixtures.boundary_simplex(2), False),
    ("7-vertex torus", fixtures.torus7(), False),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--with-s3", action="store_true",
                    help="also run the boundary of the 4-simplex (1.4M cells, over 10 minutes)")
    ap.add_argument("--max-states", type=int, default=2_000_000)
    args = ap.parse_args()
    cases = list(CASES)
    if args.with_s3:
        cases.append(("4-simplex boundary", fixtures.boundary_simplex(3), False))
    cfg = RunConfig("realize", budgets=Budgets(max_states=args.max_states))
    print(f"{'fixture':24s} {'n':>2s} {'r':>4s} {'N':>8s} {'q':>6s} {'k':>7s} {'chi':>6s}  ok   time")
    for name, cycle, colored in cases:
        t0 = time.perf_counter()
        m, rep = realize(cycle, colored, cfg)
        dt = time.perf_counter() - t0
        print(f"{name:24s} {m.n:2d} {m.r:4d} {m.num_cells:8d} {m.q:6d} {m.k:7d} "
              f"{rep['euler']:6d}  {'yes' if rep['ok'] else 'NO ':3s} {dt:6.2f}s")


if __name__ == "__main__":
    main()
