import csv
import io
import json
import subprocess
import sys

import pytest

from teichlab import classical as cl, dilog, fatgraph as fg, report, thurston as th
from teichlab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_geodesic_golden(capsys):
    code, out, _ = run(capsys, "geodesic", "--slope", "0/1", "--shear", "0,0,0")
    assert code == 0
    rec = json.loads(out)
    assert rec["trace"] == 3.0
    assert round(rec["proper_length"], 6) == 0.962424
    assert rec["length"] == 2 * rec["proper_length"]


def test_geodesic_equals_library(capsys):
    sh = {"X": 0.5, "Y": -0.2, "Z": 0.1}
    code, out, _ = run(capsys, "geodesic", "--slope", "3/5", "--shear", "X=0.5,Y=-0.2,Z=0.1")
    G = fg.torus_spine()
    t = abs(cl.geodesic_trace(G, fg.slope_path(3, 5), sh))
    assert json.loads(out) == {"trace": t, "length": 2 * cl.proper_length_classical(t),
                               "proper_length": cl.proper_length_classical(t)}


def test_boundary_face_length(capsys):
    code, out, _ = run(capsys, "geodesic", "--shear", "0.5,-0.2,0.1",
                       "--path", "x0,z1,y0,x1,z0,y1")
    assert code == 0
    assert json.loads(out)["length"] == pytest.approx(2 * abs(0.5 - 0.2 + 0.1))


def test_graph_file_and_csv(tmp_path, capsys):
    f = tmp_path / "g.txt"
    f.write_text(fg.build_standard_spine(1, 2).to_text())
    G = fg.FatGraph.from_text(f.read_text())
    path = fg.face_path(G, G.faces()[0])
    code, out, _ = run(capsys, "geodesic", "--graph", str(f), "--format", "csv",
                       "--path", ",".join(path.half_edges))
    assert code == 0
    row = next(csv.DictReader(io.StringIO(out)))
    assert float(row["trace"]) == pytest.approx(2.0)


def test_malformed_graph_file(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("fatgraph v1\nv a b\n")
    code, _, err = run(capsys, "geodesic", "--graph", str(f), "--path", "a")
    assert code == 2
    assert "line 2, column 1" in err


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "nosuch"],
    ["geodesic", "--slope", "2/4"],
    ["geodesic", "--slope", "1/2", "--path", "x0,y1"],
    ["geodesic", "--slope", "1/2", "--shear", "1,2"],
    ["converge", "--cf", "1,0,2"],
    ["dilog", "pentagon", "--m", "2", "--n", "3"],
    [],
])
def test_usage_errors(argv, capsys):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_converge_csv(capsys):
    code, out, _ = run(capsys, "converge", "--cf", ",".join(["1"] * 15), "--shear", "0,0,0")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 15
    assert float(rows[-1]["gap"]) < 1e-3
    lib = th.converge_ratio((0, 0, 0), [1] * 15)
    assert [float(r["ratio"]) for r in rows] == [r[-1] for r in lib]


def test_converge_depth_one(capsys):
    code, out, _ = run(capsys, "converge", "--depth", "1")
    assert len(out.strip().splitlines()) == 2


def test_converge_weightings_differ(capsys):
    _, a, _ = run(capsys, "converge", "--depth", "15")
    _, b, _ = run(capsys, "converge", "--depth", "15", "--weights", "1,3,1")
    last = lambda t: float(t.strip().splitlines()[-1].split(",")[6])
    assert abs(last(a) - last(b)) > 1e-2


def test_dilog_eval_equals_library(capsys):
    code, out, _ = run(capsys, "dilog", "eval", "--z", "1.7", "--hbar", "0.3")
    assert code == 0
    assert json.loads(out)["phi"] == dilog.phi_hbar(1.7, dilog.DilogParams(0.3))


def test_dilog_pentagon_reports_failure(capsys):
    code, out, _ = run(capsys, "dilog", "pentagon", "--m", "1", "--n", "3")
    assert code == 1
    assert json.loads(out)["deviation"] > 1
    code, out, _ = run(capsys, "dilog", "pentagon", "--m", "1", "--n", "3", "--shift", "-2")
    assert json.loads(out)["scalar_deviation"] < 1e-10


def test_thurston_split_and_unzip(capsys):
    _, out, _ = run(capsys, "thurston", "split", "--A", "5", "--B", "8")
    assert json.loads(out)["runs"] == th.cf_expand(8, 5)
    _, out, _ = run(capsys, "thurston", "unzip", "--slope", "8/5")
    assert json.loads(out)["zip"] == [8, 5, 13]


def test_verify_report(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, _, _ = run(capsys, "verify", "--suite", "quantum", "--out", str(out))
    rep = json.loads(out.read_text())
    assert code == 0
    names = {r["identity"]: r["status"] for r in rep["records"]}
    for key in ("so3_XY", "product_rule", "markov_central_X", "chebyshev_3",
                "I_m recursions", "tilde G_Z middle coefficient"):
        assert names[key] == "exact-pass"
    assert all(r["status"] != "fail" or r.get("expected") == "fail" for r in rep["records"])
    assert run(capsys, "verify", "--suite", "quantum", "--strict")[0] == 1


def test_verify_csv_is_byte_stable(capsys):
    _, a, _ = run(capsys, "verify", "--suite", "classical", "--format", "csv", "--seed", "3")
    _, b, _ = run(capsys, "verify", "--suite", "classical", "--format", "csv", "--seed", "3")
    assert a == b
    assert a.splitlines()[0].startswith("identity,anchor,status,residual")


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "teichlab", "geodesic", "--slope", "1/0"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["trace"] == 3.0
