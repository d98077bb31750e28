from __future__ import annotations

import json
import subprocess
import sys

import pytest

from outerplanar.cli import main, render_arcs
from outerplanar.decomp import dumps_report, report_from_json
from outerplanar import OuterplanarGraph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def count_lines(out):
    return {line.split(":")[0]: int(line.split(":")[1].split()[0]) for line in out.splitlines() if line.startswith("k=")}


def test_count_six_ones(capsys):
    code, out, _ = run(capsys, "count", "--degrees", "1,1,1,1,1,1")
    assert code == 0
    assert count_lines(out)["k=0"] == 5
    assert "MISMATCH" not in out


def test_count_two_ones(capsys):
    code, out, _ = run(capsys, "count", "--degrees", "1,1")
    assert count_lines(out) == {"k=2": 1, "k=0": 1}


def test_count_odd_total(capsys):
    code, out, _ = run(capsys, "count", "--degrees", "1,2")
    assert code == 0
    assert "graphs: 0" in out
    assert "k=0" not in count_lines(out)


def test_count_json_and_k(capsys):
    code, out, _ = run(capsys, "count", "--degrees", "1,1,1,1", "--k", "2", "--format", "json")
    obj = json.loads(out)
    assert obj["multiplicities"] == [{"k": 2, "characters": 3, "recursion": 3, "graphs": 3, "agree": True}]


def test_count_rooted(capsys):
    code, out, _ = run(capsys, "count", "--degrees", "2,1,1", "--rooted")
    assert code == 0
    assert count_lines(out) == {"k=2": 1}


def test_usage_errors(capsys):
    for argv in (["count", "--degrees", "1,x"], ["count"], ["bogus"], ["graphs", "--degrees", "1,-1"], []):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 1
    capsys.readouterr()


def test_graphs_single_arc(capsys):
    code, out, _ = run(capsys, "graphs", "--degrees", "1,1")
    assert code == 0
    assert out.startswith("1 graph(s)")
    assert "+--+\n1  2" in out


def test_graphs_six_points(capsys):
    code, out, _ = run(capsys, "graphs", "--degrees", "1,1,1,1,1,1")
    assert "5 graph(s)" in out
    assert out.count("#") == 5
    assert "{1-2, 3-4, 5-6}" in out
    assert "{1-2, 3-6, 4-5}" in out


def test_graphs_json(capsys):
    code, out, _ = run(capsys, "graphs", "--degrees", "2,2,2", "--format", "json")
    assert json.loads(out)["graphs"] == [{"arcs": [[1, 2, 1], [1, 3, 1], [2, 3, 1]]}]


def test_render_triangle_and_stack():
    pic = render_arcs(OuterplanarGraph.from_arcs([(1, 2), (1, 3), (2, 3)]))
    assert pic.splitlines() == ["+-----------+", "| +--+ +--+ |", " 1    2    3"]
    stacked = render_arcs(OuterplanarGraph.from_arcs([(1, 2, 3)])).splitlines()
    assert len(stacked) == 4  # three levels above the vertex row
    assert stacked[0].count("+") == 2


def test_decompose_summaries(capsys):
    code, out, _ = run(capsys, "decompose", "--degrees", "1,1")
    assert code == 0 and out.splitlines()[0] == "ρ2 ⊕ ρ0, dim 4 = 4"
    code, out, _ = run(capsys, "decompose", "--degrees", "1,1,1")
    assert out.splitlines()[0] == "ρ3 ⊕ 2·ρ1, dim 8 = 8"


def test_decompose_json_round_trip(capsys, tmp_path):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "decompose", "--degrees", "2,2,2", "--format", "json", "--output", str(path))
    assert code == 0 and out == ""
    text = path.read_text(encoding="utf-8")
    obj = json.loads(text)
    assert [c["d0"] for c in obj["components"]][-1] == 0
    assert dumps_report(report_from_json(obj)) + "\n" == text


def test_decompose_size_guard(capsys):
    code, _, err = run(capsys, "decompose", "--degrees", "9,9,9,9")
    assert code == 2
    assert "exceeds" in err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--max-sum", "2")
    assert code == 0
    assert "all checks passed" in out
    assert "3/3" in out  # (1), (2), (1,1)


def test_verify_deterministic(capsys):
    outs = [run(capsys, "verify", "--max-sum", "6", "--seed", "42")[1] for _ in range(2)]
    assert outs[0] == outs[1]
    assert "FAIL" not in outs[0]


def test_module_entry_point():
    res = subprocess.run(
        [sys.executable, "-m", "outerplanar", "count", "--degrees", "1,1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert res.returncode == 0
    assert "k=0: 1" in res.stdout
