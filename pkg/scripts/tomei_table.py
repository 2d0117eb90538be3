"""Face counts and Euler characteristic of the Tomei manifolds."""

import argparse

from permcover.assembly import euler_characteristic, face_orbits, tomei_complex
from permcover.verification import verify_closed


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    for n in range(1, args.max_n + 1):
        t = tomei_complex(n)
        closed = verify_closed(t).ok
        print(f"n={n}  cells={t.num_cells:3d}  faces={face_orbits(t)}  "
              f"chi={euler_characteristic(t):4d}  closed={closed}")


if __name__ == "__main__":
    main()
