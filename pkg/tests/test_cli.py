import json
import pathlib

import pytest

from slkfrieze.cli import run
from slkfrieze.errors import ParseError
from slkfrieze.fixtures import tame_example
from slkfrieze.frieze import periodic, window_pattern
from slkfrieze.io import (dumps, parse_collection, parse_document, parse_graph, serialize,
                          serialize_collection, serialize_graph)
from slkfrieze.wild import GammaVertex, build_subgraph

FIX = pathlib.Path(__file__).resolve().parents[1] / "fixtures"


def code_and_json(capsys, *argv):
    code = run(["--json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


# -- documents --------------------------------------------------------------

def test_round_trip_rational_and_window():
    f = window_pattern(3, 2, [("1/2", "-3"), (4, "5/7")], first_index=-4, name="x")
    assert parse_document(serialize(f)) == f
    g = periodic(2, 1, [(1,), (2,)], source="cc")
    text = serialize(g)
    assert parse_document(text) == g and serialize(parse_document(text)) == text


def test_collection_round_trip():
    fs = [tame_example(), periodic(2, 1, [(1,), (2,)])]
    assert parse_collection(serialize_collection(fs)) == fs


def test_wrong_row_length_reports_line():
    text = serialize(tame_example()).replace('["3", "2", "4", "1"]', '["3", "2", "4"]')
    with pytest.raises(ParseError) as info:
        parse_document(text)
    assert info.value.line == text.splitlines().index('    ["3", "2", "4"]') + 1


def test_malformed_json_reports_position():
    with pytest.raises(ParseError) as info:
        parse_document('{\n  "k": 3,\n  "n": ,\n}')
    assert info.value.line == 3


@pytest.mark.parametrize("text", [
    '[]',
    '{"k": 3, "n": 1, "rows": [["1"]], "vertical": {"mode": "spiral"}}',
    '{"k": 3, "n": 1, "rows": [["1"]], "vertical": {"mode": "periodic", "period": 2}}',
    '{"k": 3, "n": 1, "rows": [["x"]], "vertical": {"mode": "periodic", "period": 1}}',
    '{"k": "3", "n": 1, "rows": [["1"]], "vertical": {"mode": "periodic", "period": 1}}',
    '{"k": 1, "n": 1, "rows": [["1"]], "vertical": {"mode": "periodic", "period": 1}}',
])
def test_bad_documents(text):
    with pytest.raises(ParseError):
        parse_document(text)


def test_dumps_is_canonical():
    assert dumps({"b": [1, 2], "a": {"d": 1, "c": [[1], [2]]}}) == (
        '{\n  "a": {\n    "c": [\n      [1],\n      [2]\n    ],\n    "d": 1\n  },\n'
        '  "b": [1, 2]\n}\n')


def test_graph_round_trip():
    seeds = [GammaVertex.of([(1, 1, 2, 1), (1, 1, 2, 4)])]
    g = build_subgraph(seeds, 2, max_vertices=20, max_depth=1)
    h = parse_graph(serialize_graph(g))
    assert (h.vertices, h.edges, h.frontier, h.exhausted) == (
        g.vertices, g.edges, g.frontier, g.exhausted)


# -- verbs ------------------------------------------------------------------

def test_verify_fixture(capsys):
    code, rep = code_and_json(capsys, "verify", str(FIX / "tame.frieze"))
    assert code == 0 and rep["holds"]


def test_verify_failure_prints_witness(tmp_path, capsys):
    bad = tmp_path / "bad.frieze"
    bad.write_text(serialize(periodic(3, 4, [(4, 8, 4, 7), (3, 2, 4, 1)])))
    assert run(["verify", str(bad)]) == 1
    assert "det at" in capsys.readouterr().out


def test_classify_nongeneric(capsys):
    code, rep = code_and_json(capsys, "classify", str(FIX / "nongeneric.frieze"))
    assert code == 0 and rep["generic"] is False and rep["tame"] is True


def test_xi_and_dual(capsys):
    code, rep = code_and_json(capsys, "xi", "builtin:tame", "--reconstruct")
    assert code == 0 and rep["reconstruction_matches"]
    assert run(["xi", str(FIX / "wild.frieze")]) == 1
    capsys.readouterr()
    code, rep = code_and_json(capsys, "dual", "builtin:tame")
    assert code == 0 and rep["offset"] is not None


def test_extend(tmp_path, capsys):
    out = tmp_path / "ext.frieze"
    code, rep = code_and_json(capsys, "extend", "builtin:tame", "--steps", "4",
                              "--bound", "10", "--out", str(out))
    assert code == 0 and all(s["kind"] == "unique" for s in rep["steps"])
    assert parse_document(out.read_text()).rows[2] == (3, 8, 4, 7)


def test_unbounded(tmp_path, capsys):
    code, rep = code_and_json(capsys, "unbounded", "--range", "0..1", "--emit", str(tmp_path))
    assert code == 0 and rep["printed_match"] == {"0": True, "1": True}
    assert parse_document((tmp_path / "segment_1.frieze").read_text()).first_index == 13


def test_graph_and_walk(tmp_path, capsys):
    g = tmp_path / "g.json"
    code, rep = code_and_json(capsys, "graph", "--seed", "builtin:A12", "--bound", "4",
                              "--restrict", "--prune", "--analyze", "--out", str(g))
    assert code == 0 and rep["edges"] == 16 and len(rep["cycles"]) >= 2
    w = tmp_path / "w.frieze"
    code, rep = code_and_json(capsys, "walk", "--graph", str(g), "--word", "fib:600",
                              "--period-bound", "200", "--out", str(w))
    assert code == 0 and rep["rows"] == 600 and rep["period"] is None
    code, rep = code_and_json(capsys, "walk", "--graph", str(g), "--word", "cycle:0:3")
    assert code == 0 and rep["period"] is not None


def test_graph_limit_is_exit_3(capsys):
    assert run(["graph", "--seed", "builtin:wild", "--bound", "4",
                "--max-vertices", "5"]) == 3


def test_enumerate(capsys):
    code, rep = code_and_json(capsys, "enumerate", "--k", "3", "--n", "1",
                              "--bound-schedule", "8,16")
    assert code == 0 and rep["count"] == 5 and rep["stabilized"]
    code, rep = code_and_json(capsys, "enumerate", "--k", "3", "--n", "3",
                              "--bound-schedule", "8,16", "--budget", "0.2")
    assert code == 3 and rep["complete"] is False


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["verify"], ["verify", "/nonexistent.frieze"],
    ["unbounded", "--range", "3"], ["enumerate", "--n", "1", "--bound-schedule", "a,b"],
    ["verify", "builtin:nope"],
])
def test_usage_errors(argv, capsys):
    assert run(argv) == 2


def test_parse_error_is_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.frieze"
    bad.write_text("{ not json")
    assert run(["verify", str(bad)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_unbounded_negative_range(capsys):
    assert run(["unbounded", "--range", "-1..1"]) == 0
    assert run(["unbounded", "--range=-1..1"]) == 0
