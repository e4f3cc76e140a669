import json

import pytest

from doo_route import cli
from doo_route.errors import NoProgress
from doo_route.schema import layout_to_dict, polyline_to_dict
from doo_route.configuration import DooPolyline

from conftest import fix_a_layout, fix_b_layout


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)

    return {
        "a": write("a.json", layout_to_dict(fix_a_layout())),
        "b": write("b.json", layout_to_dict(fix_b_layout())),
        "line": write("line.json", polyline_to_dict(DooPolyline(((2, 5), (8, 5))))),
        "bline": write("bline.json", {"points": [[0.5, 0.6], [1.5, 0.6]]}),
        "goal": write("goal.json", {"seq": [2, 3]}),
        "bowtie": write("bowtie.json", {"boundary": [[0, 0], [1, 1], [1, 0], [0, 1]]}),
        "dir": tmp_path,
        "write": write,
    }


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_encode(capsys, files):
    code, out, _ = run(capsys, "encode", files["a"], files["line"])
    assert code == 0 and json.loads(out) == {"seq": [0, 1]}


def test_encode_raw_and_text(capsys, files):
    p = files["write"]("slack.json", {"points": [[2, 5], [6, 5], [2, 6]]})
    assert json.loads(run(capsys, "encode", files["a"], p, "--raw")[1]) == {"seq": [0, 1, 0]}
    assert json.loads(run(capsys, "encode", files["a"], p)[1]) == {"seq": [0]}
    assert run(capsys, "encode", files["a"], p, "--format", "text")[1].strip() == "(0,)"


def test_plan_done(capsys, files):
    code, out, _ = run(capsys, "plan", files["a"], files["line"], "(1, 0)")
    assert code == 0 and json.loads(out) == {"outcome": "done"}


def test_plan_next(capsys, files):
    code, out, _ = run(capsys, "plan", files["b"], "(0, 1)", files["goal"])
    d = json.loads(out)
    assert code == 0
    assert d["outcome"] == "next" and d["span"] == [0, 2] and d["replacement"] == [2, 3]
    assert d["projected"] == [2, 3] and d["distance_before"] == 2 and d["distance_after"] == 0
    assert d["plan_time_us"] >= 0


def test_plan_invalid_goal(capsys, files):
    code, out, err = run(capsys, "plan", files["b"], "(0, 1)", "(0, 3, 1)")
    assert code == 2 and out == ""
    assert "InvalidConfiguration" in err and len(err.strip().splitlines()) == 1


def test_plan_no_progress_exit(capsys, files, monkeypatch):
    def boom(*a, **k):
        raise NoProgress("stuck")

    monkeypatch.setattr(cli, "next_action", boom)
    code, _, err = run(capsys, "plan", files["b"], "(0, 1)", "(2, 3)")
    assert code == 3 and "NoProgress" in err


def test_decompose_bowtie(capsys, files):
    code, out, err = run(capsys, "decompose", files["bowtie"])
    assert code == 2 and "NonSimplePolygon" in err and out == ""


def test_missing_file(capsys, files):
    code, _, err = run(capsys, "graph", str(files["dir"] / "nope.json"))
    assert code == 2 and err.startswith("error:")


def test_unknown_flag(capsys, files):
    with pytest.raises(SystemExit) as ei:
        cli.main(["graph", files["a"], "--bogus"])
    assert ei.value.code == 2
    with pytest.raises(SystemExit):
        cli.main([])


def test_graph(capsys, files):
    d = json.loads(run(capsys, "graph", files["b"])[1])
    assert d["edges"] == [[-1, 0], [-1, 1], [-1, 2], [-1, 3], [0, 1], [0, 2], [0, 4], [1, 3], [2, 3], [3, 5], [4, 5]]


def test_decompose_round_trip(capsys, files):
    plain = files["write"]("holey.json", {
        "boundary": [[0, 0], [3, 0], [3, 3], [0, 3]],
        "holes": [[[1, 1], [1, 2], [2, 2], [2, 1]]],
        "tunnels": [{"id": 0, "a": [0.5, 0.5], "b": [2.5, 2.5]}],
    })
    code, out, _ = run(capsys, "decompose", plain)
    assert code == 0
    dec = json.loads(out)
    assert len(dec["regions"]) == len(dec["centroids"])
    again = files["write"]("again.json", dec)
    g1 = run(capsys, "graph", plain)[1]
    g2 = run(capsys, "graph", again)[1]
    assert g1 == g2


def test_simulate(capsys, files):
    code, out, _ = run(capsys, "simulate", files["b"], files["bline"], files["goal"])
    recs = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert recs[0]["type"] == "start" and recs[0]["configuration"] == [0, 1]
    assert [r["type"] for r in recs] == ["start", "step", "end"]
    assert recs[-1]["outcome"] == "converged" and recs[-1]["configuration"] == [2, 3]


def test_bench_deterministic(capsys, files):
    args = ("bench", "--trials", "4", "--seed", "11", "--cap", "15", "--len-min", "0.3", "--len-max", "0.5")
    a = json.loads(run(capsys, *args)[1])
    b = json.loads(run(capsys, *args)[1])
    for d in (a, b):
        for k in ("plan_time_p50_us", "plan_time_p99_us", "plan_time_max_us"):
            d.pop(k)
        for t in d["per_trial"]:
            t.pop("plan_times_us")
    assert a == b and a["trials"] == 4 and a["seed"] == 11


def test_render_and_out(capsys, files):
    out_path = files["dir"] / "board.svg"
    code, out, _ = run(capsys, "render", files["b"], "--polyline", files["bline"], "--out", str(out_path))
    assert code == 0 and out == ""
    svg = out_path.read_text()
    assert svg.startswith("<svg") and svg.count("<circle") == 4 and "stroke-dasharray" in svg


def test_text_formats(capsys, files):
    assert "regions" in run(capsys, "decompose", files["a"], "--format", "text")[1]
    assert "edges" in run(capsys, "graph", "bundled", "--format", "text")[1]
    assert "replace" in run(capsys, "plan", files["b"], "(0, 1)", "(2, 3)", "--format", "text")[1]


def test_outputs_byte_identical(capsys, files):
    for argv in (("decompose", files["b"]), ("graph", "bundled"), ("encode", files["a"], files["line"])):
        assert run(capsys, *argv)[1] == run(capsys, *argv)[1]
