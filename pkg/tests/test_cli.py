import json
import re
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from trigeom.cli import main
from trigeom.schema import CENTERS_REPORT, EVAL_REPORT, SUITE_REPORT
from trigeom.theorems import registry

DATA = Path(__file__).parent / "data"
CORPUS = Path(__file__).parents[1] / "src" / "trigeom" / "scripts"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def _no_env_seed(monkeypatch):
    monkeypatch.delenv("GEO_SEED", raising=False)


# -- check -----------------------------------------------------------------


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "--seed", "42", "--samples", "5")
    assert code == 0
    doc = json.loads(out)
    jsonschema.validate(doc, SUITE_REPORT)
    assert len(doc["checks"]) == len(registry()) and doc["passed"]
    assert list(doc) == sorted(doc)


def test_check_zero_samples(capsys):
    code, out, err = run(capsys, "check", "--samples", "0")
    assert code == 2 and out == "" and "--samples" in err


def test_check_on_single_triangle(capsys):
    code, out, _ = run(capsys, "check", "--triangle", "0,0,4,0,1,3", "--samples", "1")
    assert code == 0 and json.loads(out)["triangle_count"] == 1


def test_check_text_table_and_plot(capsys, tmp_path):
    png = tmp_path / "res.png"
    code, out, _ = run(capsys, "check", "--samples", "3", "--format", "text", "--plot", str(png))
    assert code == 0
    rows = out.strip().split("\n")
    assert rows[0].split("\t")[0] == "id"
    assert len(rows) == len(registry()) + 2
    assert all(len(r.split("\t")) == 8 for r in rows[:-1])
    assert png.read_bytes()[:4] == b"\x89PNG"


def test_check_only_and_unknown_id(capsys):
    code, out, _ = run(capsys, "check", "--samples", "2", "--only", "t_x39")
    assert code == 0 and [c["id"] for c in json.loads(out)["checks"]] == ["t_x39"]
    code, _, err = run(capsys, "check", "--only", "nope")
    assert code == 2 and "nope" in err


def test_check_equilateral_has_only_skips(capsys):
    code, out, _ = run(capsys, "check", "--triangle", "equilateral")
    doc = json.loads(out)
    assert code == 0 and doc["failures"] == []
    assert sum(doc["skip_counts"].values()) > 0


def test_check_bad_flags(capsys):
    assert run(capsys, "check", "--eps", "0")[0] == 2
    assert run(capsys, "check", "--eps", "abc")[0] == 2
    assert run(capsys, "check", "--triangle", "1,2,3")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys)[0] == 2


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("GEO_SEED", "7")
    _, out, _ = run(capsys, "check", "--samples", "1", "--only", "p1_fixed")
    assert json.loads(out)["seed"] == 7
    _, out, _ = run(capsys, "check", "--samples", "1", "--only", "p1_fixed", "--seed", "9")
    assert json.loads(out)["seed"] == 9
    monkeypatch.setenv("GEO_SEED", "x")
    assert run(capsys, "check", "--samples", "1")[0] == 2


def test_check_writes_out_file(capsys, tmp_path):
    p = tmp_path / "r.json"
    code, out, _ = run(capsys, "check", "--samples", "2", "--out", str(p))
    assert code == 0 and out == "" and json.loads(p.read_text())["triangle_count"] == 2


# -- eval ------------------------------------------------------------------


def test_eval_problem1(capsys):
    code, out, _ = run(capsys, "eval", str(CORPUS / "problem1.geo"), "--samples", "10")
    assert code == 0
    jsonschema.validate(json.loads(out), EVAL_REPORT)


def test_eval_false_claim(capsys):
    code, out, _ = run(capsys, "eval", str(DATA / "false_claim.geo"), "--samples", "3", "--format", "text")
    assert code == 1 and "\tFAIL\t" in out


def test_eval_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "eval", str(tmp_path / "missing.geo"))
    assert code == 2 and "cannot read" in err


def test_eval_malformed_reports_position(capsys):
    path = DATA / "malformed" / "unknown_function.geo"
    code, out, err = run(capsys, "eval", str(path))
    assert code == 2 and out == ""
    assert f"{path}:3:11: error: unknown function" in err


def test_eval_construction_error(capsys, tmp_path):
    p = tmp_path / "bad.geo"
    p.write_text("triangle ABC\ncircle w = circle_tangent(A, B, line(A, B))\nassert on(C, w)\n")
    code, out, err = run(capsys, "eval", str(p), "--triangle", "T0")
    assert code == 1 and ":2:12: error: circle_tangent" in err
    assert json.loads(out)["assertions"][0]["status"] == "ERROR"


# -- centers ---------------------------------------------------------------


def test_centers_reference_row(capsys):
    code, out, _ = run(capsys, "centers", "--triangle", "0,0,4,0,1,3", "--format", "text")
    assert code == 0
    assert "A_X 1.647058823529 1.411764705882\n" in out
    assert "L 1.272727272727 1.090909090909\n" in out
    assert out.startswith("A 0.000000000000 0.000000000000\n")


def test_centers_equilateral(capsys):
    _, out, _ = run(capsys, "centers", "--triangle", "equilateral", "--format", "text")
    rows = dict(line.split(" ", 1) for line in out.strip().split("\n"))
    assert rows["A_X"] == rows["O"] == rows["A_Y"]
    assert "-0.000000000000" not in out


def test_centers_json(capsys):
    code, out, _ = run(capsys, "centers", "--triangle", "T0")
    doc = json.loads(out)
    jsonschema.validate(doc, CENTERS_REPORT)
    assert code == 0 and doc["points"][0]["name"] == "A"


def test_centers_errors(capsys):
    assert run(capsys, "centers", "--triangle", "0,0,1,1,2,2")[0] == 2
    assert run(capsys, "centers")[0] == 2


# -- figure ----------------------------------------------------------------


def _labels(svg: str) -> set[str]:
    return set(re.findall(r">([^<>]+)</text>", svg))


def test_figure_snapshot(capsys):
    code, out, _ = run(capsys, "figure", "t_ax_proj", "--triangle", "T0")
    assert code == 0
    assert {"A", "B", "C", "O", "A_X"} <= _labels(out)
    assert out == (DATA / "t_ax_proj_T0.svg").read_text()


def test_figure_structure(capsys):
    _, out, _ = run(capsys, "figure", "t_ax_proj", "--triangle", "T0", "--width", "400")
    assert out.startswith("<?xml") and out.rstrip().endswith("</svg>")
    m = re.search(r'viewBox="0 0 (\d+) (\d+)"', out)
    assert m and m.group(1) == "400"
    dots = re.findall(r'<circle cx="([\d.]+)" cy="([\d.]+)" r="2.000" fill="black"/>', out)
    assert len(dots) == 7
    # 5% margin: no dot closer to the edge than the margin band
    w, h = int(m.group(1)), int(m.group(2))
    for x, y in dots:
        assert 0 < float(x) < w and 0 < float(y) < h


def test_figure_unknown_id(capsys):
    code, _, err = run(capsys, "figure", "no_such_theorem")
    assert code == 2 and "unknown check id" in err


def test_figure_degenerate_brocard(capsys):
    _, out, _ = run(capsys, "figure", "t_brocard_circle", "--triangle", "equilateral")
    assert "brocard_circle (degenerate: point circle)" in out


def test_figure_script_and_png(capsys, tmp_path):
    code, out, _ = run(capsys, "figure", str(CORPUS / "first_brocard.geo"), "--triangle", "T0")
    assert code == 0 and {"ZA", "XA", "Z1"} <= _labels(out)
    png = tmp_path / "f.png"
    assert run(capsys, "figure", "p1_fixed", "--out", str(png))[0] == 0
    assert png.read_bytes()[:4] == b"\x89PNG"


def test_figure_malformed_script(capsys):
    assert run(capsys, "figure", str(DATA / "malformed" / "arity_mismatch.geo"))[0] == 2


# -- determinism and entry point -------------------------------------------


def test_byte_identical_outputs(capsys):
    for argv in (["check", "--samples", "4"], ["figure", "t_first_brocard"],
                 ["eval", str(CORPUS / "x39.geo"), "--samples", "4"]):
        a = run(capsys, *argv)
        b = run(capsys, *argv)
        assert a == b


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "trigeom.cli", "centers", "--triangle", "T0", "--format", "text"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "A_Y 1.176470588235 0.705882352941" in proc.stdout
