import json

from permcover import fixtures, formats
from permcover.cli import main


def write_cycle(path, cycle):
    formats.write_text(path, formats.dumps(formats.cycle_to_dict(cycle)))
    return str(path)


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


def test_realize_double_triangle(tmp_path, capsys):
    src = write_cycle(tmp_path / "c.json", fixtures.double_simplex(2))
    code, out, _ = run(["realize", src], capsys)
    rep = json.loads(out)
    assert code == 0
    assert (rep["r"], rep["N"], rep["q"], rep["k"], rep["euler"]) == (2, 4, 2, 1, -2)
    assert rep["ok"] and all(c["ok"] for c in rep["checks"])
    assert not rep["subdivided"]


def test_realize_writes_manifold(tmp_path, capsys):
    src = write_cycle(tmp_path / "c.json", fixtures.boundary_simplex(2))
    out_path = tmp_path / "m.json"
    code, out, _ = run(["realize", src, "--output", str(out_path)], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["certificate"]["k_over_q"] == "6" and rep["subdivided"]
    m = json.loads(out_path.read_text())
    assert (m["q"], m["k"], len(m["cells"])) == (18, 108, 432)
    code, out, _ = run(["verify", str(out_path)], capsys)
    assert code == 0 and json.loads(out)["ok"]


def test_geometry_export(tmp_path, capsys):
    src = write_cycle(tmp_path / "c.json", fixtures.double_simplex(2))
    out_path = tmp_path / "m.json"
    run(["realize", src, "--output", str(out_path), "--emit-geometry"], capsys)
    geo = json.loads(out_path.read_text())["geometry"]
    assert len(geo["vertices"]) == 6 and geo["f_vector"] == [6, 6, 1]
    assert geo["epsilons"] == ["1/4", "1/16"]


def test_tomei(capsys):
    code, out, _ = run(["tomei", "3"], capsys)
    rep = json.loads(out)
    assert code == 0 and rep["N"] == 8 and rep["euler"] == 0
    assert rep["face_counts"] == [24, 72, 56, 8]


def test_bounds(capsys):
    code, out, _ = run(["bounds", "--m", "9"], capsys)
    assert code == 0 and json.loads(out)["lambda"] == 45


def test_polytope(tmp_path, capsys):
    from permcover.polytopes import cube

    path = tmp_path / "sq.json"
    formats.write_text(path, formats.dumps(formats.polytope_to_dict(cube(2), [1, 1, 2, 2])))
    code, out, _ = run(["polytope", str(path)], capsys)
    rep = json.loads(out)
    assert code == 0
    assert rep["real_model"]["euler"] == 0 and rep["small_cover"]["cells"] == 4
    assert rep["flag"] and rep["empty_four_circuit"] is not None


def test_validate(tmp_path, capsys):
    good = write_cycle(tmp_path / "g.json", fixtures.torus7())
    bad = write_cycle(tmp_path / "b.json", fixtures.three_sheets())
    code, out, _ = run(["validate", good], capsys)
    assert code == 0 and json.loads(out)["ok"]
    code, out, _ = run(["validate", bad], capsys)
    assert code == 2 and [[0, 1], 3] in json.loads(out)["bad_faces"]


def test_input_error_exit_code(tmp_path, capsys):
    bad = write_cycle(tmp_path / "b.json", fixtures.three_sheets())
    code, _, err = run(["realize", bad], capsys)
    assert code == 2 and json.loads(err)["error"]["code"] == "not_pseudomanifold"
    code, _, err = run(["realize", str(tmp_path / "nothing.json")], capsys)
    assert code == 2


def test_budget_exit_codes(tmp_path, capsys, monkeypatch):
    src = write_cycle(tmp_path / "c.json", fixtures.boundary_simplex(2))
    code, _, err = run(["realize", src, "--max-states", "20"], capsys)
    assert code == 3 and json.loads(err)["error"]["code"] == "budget_states"
    code, _, err = run(["realize", src, "--max-d", "2"], capsys)
    assert code == 3 and json.loads(err)["error"]["code"] == "budget_closure"
    monkeypatch.setenv("MAX_STATES", "20")
    code, _, _ = run(["realize", src], capsys)
    assert code == 3
    code, _, _ = run(["realize", src, "--max-states", "1000"], capsys)
    assert code == 0


def test_bad_budget_is_input_error(tmp_path, capsys):
    src = write_cycle(tmp_path / "c.json", fixtures.double_simplex(1))
    code, _, _ = run(["realize", src, "--max-states", "0"], capsys)
    assert code == 2


def test_verify_detects_corruption(tmp_path, capsys):
    out_path = tmp_path / "t.json"
    run(["tomei", "2", "--output", str(out_path)], capsys)
    d = json.loads(out_path.read_text())
    d["cells"][1]["sign"] *= -1
    formats.write_text(out_path, formats.dumps(d))
    code, out, _ = run(["verify", str(out_path)], capsys)
    assert code == 1 and not json.loads(out)["ok"]


def test_report_file_is_byte_stable(tmp_path, capsys):
    src = write_cycle(tmp_path / "c.json", fixtures.torus7())
    blobs = []
    for i in range(2):
        rep, man = tmp_path / f"r{i}.json", tmp_path / f"m{i}.json"
        assert main(["realize", src, "--report", str(rep), "--output", str(man)]) == 0
        blobs.append((rep.read_bytes(), man.read_bytes()))
    assert blobs[0] == blobs[1]
