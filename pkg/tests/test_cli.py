import csv
import io
import json
import subprocess
import sys

import numpy as np
import pytest

from conftest import DATA, GOLDEN, family
from drgspec.cli import main
from drgspec.graphcore import to_edge_list, to_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def normalise(doc, digits=10):
    """Re-render with fewer significant digits so last-place round-off is ignored."""
    def walk(x):
        if isinstance(x, float):
            return float(f"{x:.{digits}g}")
        if isinstance(x, dict):
            return {k: walk(v) for k, v in x.items()}
        if isinstance(x, list):
            return [walk(v) for v in x]
        return x
    return json.dumps(walk(doc), indent=2)


@pytest.mark.parametrize("spec", ["petersen", "odd:5", "folded_hypercube:10"])
def test_golden_reports(capsys, spec):
    code, out, _ = run(capsys, "analyze", "--family", spec, "--json")
    assert code == 0
    golden = (GOLDEN / f"{spec.replace(':', '_')}.json").read_text()
    assert normalise(json.loads(out)) == normalise(json.loads(golden))


def test_json_roundtrip_is_lossless(capsys):
    _, out, _ = run(capsys, "analyze", "--family", "odd:5", "--json")
    doc = json.loads(out)
    assert json.dumps(doc, indent=2) + "\n" == out


def test_analyze_odd5_text(capsys):
    code, out, _ = run(capsys, "analyze", "--family", "odd:5")
    assert code == 0
    assert "mean k_d: 60" in out
    assert "[P_24 = P_44]" in out
    assert "partially_antipodal: yes" in out
    assert "intersection array: {5,4,4,3;1,1,2,2}" in out


def test_analyze_wells_spectrum(capsys):
    code, out, _ = run(capsys, "analyze", "--spectrum", str(DATA / "wells.json"), "--json")
    doc = json.loads(out)
    assert code == 0 and doc["tags"]["antipodal"]
    case0 = [b for b in doc["bounds"] if b["bound"] == "case0"]
    assert [b["rhs"] for b in case0] == pytest.approx([1, 1, 1, 1], abs=1e-9)


def test_analyze_spectrum_without_kd(capsys, tmp_path):
    p = tmp_path / "pet.json"
    p.write_text(json.dumps({"eigenvalues": [{"value": 3, "multiplicity": 1},
                                             {"value": 1, "multiplicity": 5},
                                             {"value": -2, "multiplicity": 4}]}))
    code, out, _ = run(capsys, "analyze", "--spectrum", str(p))
    assert code == 0 and "indeterminate" in out


def test_subset_flag(capsys):
    _, out, _ = run(capsys, "analyze", "--family", "odd:5", "--subset", "1,3", "--json")
    t2 = [b for b in json.loads(out)["bounds"] if b["bound"] == "theorem2"]
    assert len(t2) == 1 and t2[0]["index_set"] == [1, 3] and t2[0]["equality"] is False


@pytest.mark.parametrize("spec,doc", [("odd:5", "odd5.json"), ("petersen", "petersen.json"),
                                      ("folded_hypercube:10", "fq10.json")])
def test_spectrum_and_graph_agree(capsys, spec, doc):
    _, a, _ = run(capsys, "analyze", "--family", spec, "--json")
    _, b, _ = run(capsys, "analyze", "--spectrum", str(DATA / doc), "--json")
    ra = [x["rhs"] for x in json.loads(a)["bounds"]]
    rb = [x["rhs"] for x in json.loads(b)["bounds"]]
    np.testing.assert_allclose(ra, rb, rtol=1e-8)
    assert json.loads(a)["tags"] == json.loads(b)["tags"]


def test_graph6_and_edges_files(capsys, tmp_path):
    g = family("petersen")
    (tmp_path / "p.g6").write_text(">>graph6<<" + to_graph6(g) + "\n")
    (tmp_path / "p.txt").write_text(to_edge_list(g))
    for flag, name in (("--graph6", "p.g6"), ("--edges", "p.txt")):
        code, out, _ = run(capsys, "analyze", flag, str(tmp_path / name), "--json")
        assert code == 0 and json.loads(out)["tags"]["distance_regular"]


# --- exit codes --------------------------------------------------------------------

@pytest.mark.parametrize("argv", [
    ["analyze", "--graph6", "does-not-exist.g6"],
    ["generate", "--family", "kneser:4,2"],
    ["generate", "--family", "dodecahedron"],
    ["analyze", "--family", "odd:5", "--subset", "1,2"],
    ["analyze", "--family", "odd:5", "--subset", "x"],
    ["phi-curve", "--family", "odd:5", "--subset", "2,4", "--steps", "0"],
])
def test_input_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("error:")


def test_malformed_graph6_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("D~\n")
    code, _, err = run(capsys, "analyze", "--graph6", str(p))
    assert code == 2 and "MalformedGraph6" in err


def test_numerical_failure_exit_3(capsys):
    # the gap 3 -> 1 lies inside [0.5, 2] * 1.5, so clustering cannot decide
    code, _, err = run(capsys, "analyze", "--family", "petersen", "--tol-cluster", "1.5")
    assert code == 3 and "ClusterAmbiguity" in err


def test_bound_violation_exit_3(capsys, tmp_path):
    p = tmp_path / "pet.json"
    p.write_text(json.dumps({"kd_mean": 7, "eigenvalues": [{"value": 3, "multiplicity": 1},
                                                           {"value": 1, "multiplicity": 5},
                                                           {"value": -2, "multiplicity": 4}]}))
    code, _, err = run(capsys, "analyze", "--spectrum", str(p))
    assert code == 3 and "BoundViolation" in err


def test_missing_source_is_usage_error(capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze"])
    assert info.value.code == 2


# --- phi-curve -----------------------------------------------------------------------

def parse_curve(out):
    comment, *rest = out.splitlines()
    rows = list(csv.reader(io.StringIO("\n".join(rest))))
    assert rows[0] == ["t", "phi"]
    return comment, np.array(rows[1:], dtype=float)


def test_phi_curve_odd5(capsys):
    code, out, _ = run(capsys, "phi-curve", "--family", "odd:5", "--subset", "2,4")
    comment, data = parse_curve(out)
    assert code == 0 and comment == "# t0=6 phi_max=66"
    assert len(data) == 401
    i = np.argmin(np.abs(data[:, 0] - 6.0))
    assert data[i, 0] == pytest.approx(6.0) and data[i, 1] == pytest.approx(66.0)
    assert data[:, 1].max() == pytest.approx(66.0)
    assert data[0, 0] == pytest.approx(6 - 35) and data[-1, 0] == pytest.approx(6 + 35)


def test_phi_curve_wells(capsys):
    _, out, _ = run(capsys, "phi-curve", "--spectrum", str(DATA / "wells.json"), "--subset", "1,3")
    comment, data = parse_curve(out)
    assert comment == "# t0=-1 phi_max=31"


def test_phi_curve_single_step(capsys):
    _, out, _ = run(capsys, "phi-curve", "--family", "odd:5", "--subset", "2,4",
                    "--steps", "1", "--t-min", "2", "--t-max", "9")
    _, data = parse_curve(out)
    assert data.shape == (1, 2) and data[0, 0] == 2.0


def test_phi_curve_degenerate(capsys):
    code, out, _ = run(capsys, "phi-curve", "--family", "complete:5", "--subset", "1", "--steps", "5")
    comment, data = parse_curve(out)
    assert code == 0 and comment.startswith("# degenerate H=[1]")
    assert len(data) == 5


# --- generate and stdin ------------------------------------------------------------------

def test_generate_complete5(capsys):
    code, out, _ = run(capsys, "generate", "--family", "complete:5")
    assert code == 0 and out == "D~{\n"


def test_generate_pipe_to_analyze():
    gen = subprocess.run([sys.executable, "-m", "drgspec", "generate", "--family", "petersen"],
                         capture_output=True, text=True, check=True)
    res = subprocess.run([sys.executable, "-m", "drgspec", "analyze", "--graph6", "-", "--json"],
                         input=gen.stdout, capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["tags"]["distance_regular"] is True
