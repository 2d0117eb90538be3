"""Write the JSON inputs in data/ from the built-in fixtures."""

import argparse
from pathlib import Path

from permcover import fixtures, formats, polytopes


def cycles():
    out = {f"double_simplex_{n}": fixtures.double_simplex(n) for n in (1, 2, 3)}
    out["boundary_tetrahedron"] = fixtures.boundary_simplex(2)
    out["torus7"] = fixtures.torus7()
    out["hexagon_loop"] = fixtures.polygon(6)
    out["three_sheets"] = fixtures.three_sheets()
    return out


def solids():
    return {
        "triangle": (polytopes.simplex(2), None),
        "interval": (polytopes.cube(1), None),
        "square": (polytopes.cube(2), [1, 1, 2, 2]),
        "cube": (polytopes.cube(3), None),
        "hexagon": (polytopes.polygon(6), None),
        "permutahedron_2": (polytopes.permutahedron(2), None),
        "permutahedron_3": (polytopes.permutahedron(3), None),
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=Path(__file__).resolve().parent.parent / "data")
    out = Path(ap.parse_args().out)
    out.mkdir(parents=True, exist_ok=True)
    for name, c in cycles().items():
        formats.write_text(out / f"{name}.json", formats.dumps(formats.cycle_to_dict(c)))
    for name, (p, char) in solids().items():
        formats.write_text(out / f"{name}.polytope.json",
                           formats.dumps(formats.polytope_to_dict(p, char)))
    print(f"wrote {len(cycles()) + len(solids())} files to {out}")


if __name__ == "__main__":
    main()
