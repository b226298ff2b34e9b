import json
import math
import subprocess
import sys

import pytest

from fshs.cli import main
from fshs.scenario import (
    ValidationError,
    builtin_hexagon,
    dumps,
    load_report,
    load_scenario,
    save_json,
    validate_scenario,
)

SINGLE = {"boundary": [{"name": "A", "points": [[0.3, 0.4]]}]}
TWO = {"boundary": [{"points": [[0, 0]]}, {"points": [[2, 0]]}]}
TRI = {"boundary": [{"points": [[0, 0]]}, {"points": [[1, 0]]}, {"points": [[0.5, 0.8]]}]}


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc) if not isinstance(doc, str) else doc)
    return str(p)


def test_minimal_scenario_is_valid():
    sc = validate_scenario(SINGLE)
    assert sc.boundary == [("A", [(0.3, 0.4)])]
    assert sc.norm == "euclidean" and sc.config == {}


def test_every_violation_is_reported():
    doc = {"norm": "taxicab", "boundary": [{"points": [[0, "x"], [math.nan, 1]]}, {"points": []}],
           "config": {"eps": -1, "colour": 3}}
    with pytest.raises(ValidationError) as exc:
        validate_scenario(doc)
    errs = exc.value.errors
    assert len(errs) == 6
    joined = " | ".join(errs)
    for needle in ("norm", "points[0]", "not finite", "boundary[1]", "config.eps", "config.colour"):
        assert needle in joined
    with pytest.raises(ValidationError):
        validate_scenario({"boundary": []})


def test_builtin_hexagon_geometry():
    sc = builtin_hexagon()
    pts = [p for _, comp in sc.boundary for p in comp]
    assert [len(c) for _, c in sc.boundary] == [2, 2, 2]
    assert all(math.hypot(*p) == pytest.approx(1, abs=1e-15) for p in pts)
    for _, (p, q) in sc.boundary:
        assert math.dist(p, q) == pytest.approx(1, abs=1e-15)
    assert len({(round(x, 12), round(y, 12)) for x, y in pts}) == 6


def test_dumps_round_trips_exactly(tmp_path):
    doc = {"a": [0.1, 1 / 3, 1e-300, 2.0, -0.0], "b": math.inf, "c": [[1, 2], {"x": None, "y": True}]}
    p = tmp_path / "d.json"
    save_json(doc, p)
    back = json.loads(p.read_text())
    assert back["a"] == doc["a"] and back["b"] == math.inf and back["c"] == doc["c"]
    assert isinstance(back["a"][3], float)
    assert dumps(back) == dumps(doc)


@pytest.fixture(scope="module")
def reports(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    sc = d / "tri.json"
    sc.write_text(json.dumps(TRI))
    out = {}
    for kind, extra in (("solve", []), ("stability", []), ("classify", ["--d", "0.6,0.6,0.6"])):
        path = d / f"{kind}.json"
        assert main([kind, str(sc), "--out", str(path), *extra]) == 0
        out[kind] = path
    return out


def test_reports_round_trip(reports):
    for path in reports.values():
        text = path.read_text()
        doc = load_report(path)
        assert dumps(doc) + "\n" == text


def test_reports_match_json_schema(reports):
    jsonschema = pytest.importorskip("jsonschema")
    from referencing import Registry, Resource
    from pathlib import Path
    docs = Path(__file__).resolve().parent.parent / "docs"
    scen = json.loads((docs / "scenario.schema.json").read_text())
    rep = json.loads((docs / "report.schema.json").read_text())
    res = Resource.from_contents(scen)
    registry = Registry().with_resources([("scenario.schema.json", res),
                                          ("fshs/report/scenario.schema.json", res)])
    for path in reports.values():
        jsonschema.validate(load_report(path), rep, registry=registry)
    jsonschema.validate(TRI, scen)
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"boundary": []}, scen)


def test_render_is_deterministic(reports, tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["render", str(reports["solve"]), "--svg", str(a)]) == 0
    assert main(["render", str(reports["solve"]), "--svg", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert a.read_text().lstrip().startswith("<?xml")


@pytest.mark.parametrize("doc", [SINGLE, TWO])
def test_render_degenerate_cases(tmp_path, doc):
    sc = write(tmp_path, "s.json", doc)
    rep, svg = tmp_path / "r.json", tmp_path / "r.svg"
    assert main(["solve", sc, "--out", str(rep)]) == 0
    assert main(["render", str(rep), "--svg", str(svg)]) == 0
    assert "<svg" in svg.read_text()


def test_solve_prints_one_line_verdict(tmp_path, capsys):
    assert main(["solve", write(tmp_path, "t.json", TWO)]) == 0
    out = capsys.readouterr().out.strip().splitlines()
    assert len(out) == 1
    assert out[0].startswith("S_A = ") and "certified error" in out[0]
    assert float(out[0].split()[2]) == pytest.approx(2, abs=1e-9)


def test_hausdorff_command(tmp_path, capsys):
    a = write(tmp_path, "a.json", {"points": [[0, 0], [2, 0]]})
    b = write(tmp_path, "b.json", {"points": [[1, 0]]})
    assert main(["hausdorff", a, b]) == 0
    assert capsys.readouterr().out.startswith("d_H = 1 (certified error 0)")
    # the hull of {(0,0),(2,0)} contains (1,0), so only one direction changes
    c = write(tmp_path, "c.json", {"points": [[1, 1]]})
    assert main(["hausdorff", a, c, "--conv", "a"]) == 0
    assert float(capsys.readouterr().out.split()[2]) == pytest.approx(math.sqrt(2), abs=1e-9)


def test_hexagon_command(tmp_path):
    p = tmp_path / "hex.json"
    assert main(["hexagon", "--out", str(p)]) == 0
    assert load_scenario(p).boundary == builtin_hexagon().boundary


@pytest.mark.parametrize("content", ["{not json", json.dumps({"boundary": []}),
                                     '{"boundary": [{"points": [[0, NaN]]}]}'])
def test_invalid_input_exits_2(tmp_path, content, capsys):
    assert main(["solve", write(tmp_path, "bad.json", content)]) == 2
    assert "error" in capsys.readouterr().err
    assert main(["solve", str(tmp_path / "missing.json")]) == 2


def test_classify_validation_exits_2(tmp_path):
    sc = write(tmp_path, "t.json", TWO)
    assert main(["classify", sc, "--d", "1"]) == 2
    assert main(["classify", sc, "--d", "1,-1"]) == 2
    assert main(["classify", sc, "--d", "0.2,0.2"]) == 2
    assert main(["classify", sc, "--d", "1,1"]) == 0


def test_nonconvergence_exits_3(tmp_path, monkeypatch):
    import fshs.steiner as st
    monkeypatch.setattr(st._Objective, "feasible", lambda self, d: False)
    assert main(["solve", write(tmp_path, "t.json", TWO)]) == 3


def test_undecided_exits_4_only_with_strict(tmp_path, monkeypatch):
    import fshs.stability as stab
    monkeypatch.setattr(stab, "necessary_condition",
                        lambda A, rep, cfg=None: [stab.NecessaryCheck(0, 1.0, 0.5, False)])
    sc = write(tmp_path, "tri.json", TRI)
    assert main(["stability", sc]) == 0
    assert main(["stability", sc, "--strict"]) == 4


def test_console_script_runs(tmp_path):
    sc = write(tmp_path, "s.json", SINGLE)
    r = subprocess.run([sys.executable, "-m", "fshs.cli", "solve", sc], capture_output=True, text=True)
    assert r.returncode == 0
    assert r.stdout.startswith("S_A = 0 ")
