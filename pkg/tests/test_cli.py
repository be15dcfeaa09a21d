import io
import json
import subprocess
import sys

import pytest

from make_golden import cases, path_for, render
from oriented_ideals.cli import graph_from_json, graph_to_json, load_graph, parse_graph, run
from oriented_ideals.errors import NonpositiveWeight, ParseError, ValidationError
from oriented_ideals.fixtures import FIXTURES, example1


def invoke(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name, command, fmt", list(cases()))
def test_golden(name, command, fmt):
    expected = path_for(name, command, fmt).read_bytes()
    assert render(name, command, fmt).encode("utf-8") == expected


def test_decompose_example2_line():
    status, out, _ = invoke("decompose", "--fixture", "example2", "--format", "text")
    assert status == 0
    assert "(x1,x3) ∩ (x2^2,x3) ∩ (x2,x4^7) ∩ (x1,x3^5,x4^7) ∩ (x2^2,x3^5,x4^7)" in out.splitlines()
    assert "verified=true" in out.splitlines()


def test_unmixed_eleven_vertex():
    status, out, _ = invoke("unmixed", "--fixture", "eleven-vertex")
    lines = out.splitlines()
    assert status == 0 and "unmixed=true" in lines and "minimal_strong=true" in lines


def test_ass_example1():
    _, out, _ = invoke("ass", "--fixture", "example1")
    lines = out.splitlines()
    assert lines[0] == "associated_primes=9" and len(lines) == 10
    assert "(x1,x2,x3,x4,x5)" in lines


def test_cm_eleven_vertex():
    _, out, _ = invoke("cm", "--fixture", "eleven-vertex")
    assert "requires external CAS" in out


def test_verify_default_depends_on_size():
    _, out, _ = invoke("decompose", "--fixture", "eleven-vertex")
    assert "verified=" not in out
    _, out, _ = invoke("decompose", "--fixture", "example1", "--no-verify")
    assert "verified=" not in out


def test_load_graph_roundtrip(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps(graph_to_json(example1())), encoding="utf-8")
    g = load_graph(p)
    assert g == example1()
    assert graph_from_json(json.loads(json.dumps(graph_to_json(g)))) == g
    for make in FIXTURES.values():
        assert graph_from_json(graph_to_json(make())) == make()


def test_malformed_json():
    with pytest.raises(ParseError) as info:
        parse_graph('{"vertices": [\n  {"name": "x1",, "weight": 1}]}')
    assert info.value.line == 2 and info.value.column is not None


def test_weight_zero():
    with pytest.raises(NonpositiveWeight):
        parse_graph('{"vertices": [{"name": "x1", "weight": 0}], "edges": []}')
    with pytest.raises(ValidationError):
        parse_graph('{"vertices": [{"name": "x1"}], "edges": []}')
    with pytest.raises(ValidationError):
        parse_graph('{"vertices": [{"name": "x1", "weight": 1}], "edges": [["x1"]]}')


def test_exit_codes(tmp_path, monkeypatch):
    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    status, _, err = invoke("decompose", str(bad))
    assert status == 2 and "line 1" in err
    zero = tmp_path / "zero.json"
    zero.write_text('{"vertices": [{"name": "a", "weight": 0}], "edges": []}', encoding="utf-8")
    assert invoke("ass", str(zero))[0] == 2
    assert invoke("ass", str(tmp_path / "missing.json"))[0] == 2
    assert invoke("ass")[0] == 2
    assert invoke("ass", "--fixture", "example1", "--max-n", "4")[0] == 3
    monkeypatch.setenv("ORIENTED_IDEAL_MAX_N", "4")
    assert invoke("ass", "--fixture", "example1")[0] == 3
    # an explicit flag beats the environment
    assert invoke("ass", "--fixture", "example1", "--max-n", "5")[0] == 0
    monkeypatch.setenv("ORIENTED_IDEAL_MAX_N", "lots")
    assert invoke("ass", "--fixture", "example1")[0] == 2


def test_unknown_flag_rejected():
    with pytest.raises(SystemExit) as info:
        run(["ass", "--fixture", "example1", "--bogus"], stdout=io.StringIO(), stderr=io.StringIO())
    assert info.value.code == 2


def test_file_input_matches_fixture(tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps(graph_to_json(example1())), encoding="utf-8")
    assert invoke("covers", str(p)) == invoke("covers", "--fixture", "example1")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "oriented_ideals", "ass", "--fixture", "example2"],
        capture_output=True, text=True, encoding="utf-8",
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[0] == "associated_primes=5"
