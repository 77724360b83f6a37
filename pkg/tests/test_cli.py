from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from nichols import parse, serialize
from nichols.cli import main

NOT_REFLECTABLE = "rank 2\nparams t\nentry 1 1 t^2\nentry 1 2 t^-1\nentry 2 1 1\nentry 2 2 t^2\n"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_a2_text(capsys, data_dir):
    code, out, _ = run(capsys, "analyze", data_dir / "a2_generic.braid")
    assert code == 0
    assert "cartan matrix: [2 -1] [-1 2]" in out
    assert "finite type: yes (A_2)" in out
    assert "status: finite\n" in out
    assert "positive real roots (3): (1,0) (0,1) (1,1)" in out
    assert "|W(V)|: 36" in out
    assert "brandt axioms: pass" in out


def test_analyze_json_field_order(capsys, data_dir):
    code, out, _ = run(capsys, "analyze", data_dir / "g2_generic.braid", "--json")
    assert code == 0
    doc = json.loads(out)
    assert list(doc) == [
        "input", "cartan_matrix", "finite_type", "groupoid", "status", "positive_roots", "weyl_groupoid"
    ]
    assert doc["positive_roots"] == [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]]
    assert doc["finite_type"]["label"] == "G_2"
    assert doc["weyl_groupoid"] == {"size": 144, "brandt_axioms": "pass"}
    assert parse(doc["input"]) == parse((data_dir / "g2_generic.braid").read_text())


def test_analyze_rank1(capsys, data_dir):
    code, out, _ = run(capsys, "analyze", data_dir / "rank1_minus1.braid")
    assert code == 0
    assert "groupoid: 1 states, 1 arrows" in out
    assert "positive real roots (1): (1)" in out
    assert "|W(V)|: 4" in out
    assert "brandt axioms: pass" in out


def test_analyze_affine_cap(capsys, data_dir):
    path = data_dir / "affine_rank2.braid"
    code, out, _ = run(capsys, "analyze", path, "--max-objects", 50)
    assert code == 0
    assert "status: cap exceeded, not shown finite" in out
    assert "positive real roots" not in out
    code, _, _ = run(capsys, "analyze", path, "--max-objects", 50, "--require-finite")
    assert code == 1


def test_analyze_not_cartan(capsys, data_dir):
    code, out, _ = run(capsys, "analyze", data_dir / "super_rank2.braid", "--require-finite")
    assert code == 0
    assert "cartan matrix: not Cartan type" in out
    assert "groupoid: 6 states" in out
    assert "positive real roots (3)" in out


def test_analyze_obstructed(capsys, tmp_path):
    path = tmp_path / "nr.braid"
    path.write_text(NOT_REFLECTABLE)
    code, out, _ = run(capsys, "analyze", path)
    assert code == 0
    assert "obstruction: state 0, index 1" in out
    assert "status: finite, with obstructions" in out
    code, _, _ = run(capsys, "analyze", path, "--require-finite")
    assert code == 1


def test_analyze_stdin(capsys, monkeypatch, data_dir):
    monkeypatch.setattr(sys, "stdin", io.StringIO((data_dir / "a2_generic.braid").read_text()))
    code, out, _ = run(capsys, "analyze", "-")
    assert code == 0 and "A_2" in out


def test_dot_export(capsys, data_dir, tmp_path):
    dot = tmp_path / "g.dot"
    code, _, _ = run(capsys, "analyze", data_dir / "a3_generic.braid", "--dot", dot)
    assert code == 0
    text = dot.read_text()
    assert text.startswith("digraph")
    assert text.count("label=") >= 6
    run(capsys, "analyze", data_dir / "a3_generic.braid", "--dot", tmp_path / "h.dot")
    assert (tmp_path / "h.dot").read_text() == text


def test_reflect_round_trip(capsys, data_dir, tmp_path):
    src = data_dir / "b2_generic.braid"
    for index in (1, 2):
        code, out, _ = run(capsys, "reflect", src, index)
        assert code == 0
        once = tmp_path / "once.braid"
        once.write_text(out)
        code, back, _ = run(capsys, "reflect", once, index)
        assert code == 0
        assert parse(back) == parse(src.read_text())


def test_reflect_a2_instance(capsys, data_dir):
    code, out, _ = run(capsys, "reflect", data_dir / "a2_generic.braid", 1)
    assert code == 0
    assert out == "rank 2\nparams t\nentry 1 1 t\nentry 1 2 1\nentry 2 1 t^-1\nentry 2 2 t\n"


def test_reflect_not_reflectable(capsys, tmp_path):
    path = tmp_path / "nr.braid"
    path.write_text(NOT_REFLECTABLE)
    code, out, err = run(capsys, "reflect", path, 1)
    assert code == 3
    assert out == ""
    assert "m_{1,2}" in err


def test_reflect_index_out_of_range(capsys, data_dir):
    code, out, _ = run(capsys, "reflect", data_dir / "a2_generic.braid", 3)
    assert code == 2 and out == ""


@pytest.mark.parametrize(
    "text",
    [
        "rank 2\nentry 1 1 t\n",
        "rank 1\nentry 1 1 -1\nentry 1 1 -1\n",
        "rank 2\norder 3\nentry 1 1 z\nentry 1 2 z\nentry 2 1 z\n",
        "order 3\nrank 1\nentry 1 1 z\n",
        "rank 1\nentry 1 1 0\n",
        "rank 1\norder 0\nentry 1 1 1\n",
    ],
)
def test_parse_errors_exit_2_without_output(capsys, tmp_path, text):
    path = tmp_path / "bad.braid"
    path.write_text(text)
    for cmd in (["analyze", path], ["reflect", path, 1], ["oracle", path, "--max-degree", 2],
                ["compare", path, "--max-degree", 2]):
        code, out, err = run(capsys, *cmd)
        assert code == 2, (text, cmd)
        assert out == ""
        assert err.startswith("error:")


def test_missing_file(capsys, tmp_path):
    code, out, err = run(capsys, "analyze", tmp_path / "none.braid")
    assert code == 2 and out == "" and "cannot read" in err


def test_oracle_text(capsys, data_dir):
    code, out, _ = run(capsys, "oracle", data_dir / "a2_root3.braid", "--max-degree", 8)
    assert code == 0
    assert "total dimension up to degree 8: 27" in out
    assert "root (1,1) multiplicity 1 height 3" in out


def test_oracle_json(capsys, data_dir):
    code, out, _ = run(capsys, "oracle", data_dir / "rank1_minus1.braid", "--max-degree", 3, "--json")
    assert code == 0
    doc = json.loads(out)
    assert [row["dimension"] for row in doc["hilbert"]] == [1, 1, 0, 0]
    assert doc["pbw"] == [{"root": [1], "multiplicity": 1, "height": 2, "height_at_least": 2}]


def test_oracle_unknown_height(capsys, data_dir):
    code, out, _ = run(capsys, "oracle", data_dir / "a2_root3.braid", "--max-degree", 2)
    assert code == 0
    assert "root (1,0) multiplicity 1 height >=3" in out


def test_oracle_cutoff_exit_4(capsys, monkeypatch, tmp_path):
    # a table with no consistent PBW factorization, injected in place of the oracle
    path = tmp_path / "amb.braid"
    path.write_text("rank 1\nentry 1 1 1\n")
    code, _, _ = run(capsys, "oracle", path, "--max-degree", 2)
    assert code == 0
    table = {(0,): 1, (1,): 1, (2,): 2, (3,): 2, (4,): 2}
    monkeypatch.setattr("nichols.cli.hilbert_data", lambda *_a, **_k: table)
    code, out, err = run(capsys, "oracle", path, "--max-degree", 4)
    assert code == 4
    assert out == ""
    assert "--max-degree" in err


@pytest.mark.parametrize("name,degree", [("a2_generic", 6), ("g2_generic", 6), ("a2_root3", 8)])
def test_compare_match(capsys, data_dir, name, degree):
    code, out, _ = run(capsys, "compare", data_dir / f"{name}.braid", "--max-degree", degree)
    assert code == 0
    assert out.rstrip().endswith("verdict: match")


def test_compare_corrupted(capsys, data_dir):
    code, out, _ = run(capsys, "compare", data_dir / "a2_corrupted.braid", "--max-degree", 4,
                       "--max-objects", 50, "--json")
    assert code == 1
    doc = json.loads(out)
    assert doc["match"] is False
    assert doc["groupoid_status"] == "cap exceeded, not shown finite"
    assert [2, 2] in doc["only_in_oracle"]


def test_compare_rank1(capsys, data_dir):
    code, out, _ = run(capsys, "compare", data_dir / "rank1_minus1.braid", "--max-degree", 4)
    assert code == 0 and "verdict: match" in out


def test_outputs_deterministic_across_runs_and_threads(data_dir):
    path = str(data_dir / "b2_generic.braid")
    cmd = [sys.executable, "-m", "nichols"]
    outs = set()
    for threads in ("1", "3", "1"):
        res = subprocess.run(cmd + ["compare", path, "--max-degree", "5", "--threads", threads, "--json"],
                             capture_output=True, check=False)
        assert res.returncode == 0
        outs.add(res.stdout)
    assert len(outs) == 1
    a = subprocess.run(cmd + ["analyze", path], capture_output=True, check=True).stdout
    b = subprocess.run(cmd + ["analyze", path], capture_output=True, check=True).stdout
    assert a == b


def test_serialize_round_trip_through_cli(capsys, data_dir):
    for path in sorted(data_dir.glob("*.braid")):
        q = parse(path.read_text())
        assert parse(serialize(q)) == q
