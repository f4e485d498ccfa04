import io as stdio
import json

import pytest

from codetops import MatrixGF, field_of_order, make_field
from codetops.cli import main
from codetops.fixtures import example1, example2, example3, example4
from codetops.io import AnalysisRecord, ParseError, format_matrix, parse_matrix
from codetops.tops import analyze


def run(argv):
    buf = stdio.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


def test_matrix_roundtrip():
    for M in (example1().M, example4(4).M,
              MatrixGF(field_of_order(9), [[0, 1, 2, 3], [4, 5, 6, 8]])):
        text = format_matrix(M)
        assert parse_matrix(text) == M


def test_header_forms():
    assert parse_matrix("q=3\n1 2\n").spec == make_field(3)
    assert parse_matrix("q=2^2 poly=1,1,1\n11 10\n").entries.tolist() == [[3, 1]]
    assert parse_matrix("# comment\nq=4\n01\n\n").entries.tolist() == [[2]]


@pytest.mark.parametrize("text,line,col", [
    ("q=3\n1 0 3\n", 2, 5),
    ("q=3\n1 0 1\n0 1\n", 3, 4),
    ("q=6\n1\n", 1, 1),
    ("p=3\n1\n", 1, 1),
    ("q=4\n1 10\n", 2, 1),
    ("q=2^2 poly=1,0,1\n10\n", 1, 1),
    ("", 1, 1),
])
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as info:
        parse_matrix(text)
    assert (info.value.line, info.value.column) == (line, col)


@pytest.mark.parametrize("build", [example1, example2, example3])
def test_analysis_record_roundtrip(build):
    a = analyze(build().M)
    rec = AnalysisRecord.from_analysis(a)
    d = rec.to_dict()
    back = AnalysisRecord.from_dict(json.loads(json.dumps(d)))
    assert back == rec
    assert back.to_dict() == d


def test_record_roundtrip_extension_field():
    M = MatrixGF(field_of_order(4), [[1, 0, 1, 2, 3], [0, 1, 1, 1, 1]])
    rec = AnalysisRecord.from_analysis(analyze(M))
    assert AnalysisRecord.from_dict(json.loads(json.dumps(rec.to_dict()))) == rec


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("example1", "example3", "example5"):
        p = tmp_path / f"{name}.txt"
        assert run(["fixture", name, "-o", str(p)])[0] == 0
        out[name] = str(p)
    p = tmp_path / "example4.txt"
    run(["fixture", "example4", "--q", "3", "-o", str(p)])
    out["example4"] = str(p)
    p = tmp_path / "degenerate.txt"
    p.write_text("q=3\n1 0 1\n0 0 1\n")
    out["degenerate"] = str(p)
    p = tmp_path / "bad.txt"
    p.write_text("q=3\n1 x\n")
    out["bad"] = str(p)
    return out


def test_cli_analyze(files):
    code, out = run(["analyze", "--matrix", files["example1"], "--json"])
    d = json.loads(out)
    assert code == 0 and d["classification"] == "SinglePoint" and d["counts"]["members"] == 1
    code, out = run(["analyze", "--matrix", files["example3"]])
    d = json.loads(out)
    assert d["classification"] == "MaximalTop" and d["dimW"] == 3
    assert "timing" not in d
    assert run(["analyze", "--matrix", files["example3"]])[1] == out
    d = json.loads(run(["analyze", "--matrix", files["example3"], "--timing"])[1])
    assert d["timing"] >= 0


def test_cli_degenerate_and_errors(files, capsys):
    code, out = run(["analyze", "--matrix", files["degenerate"], "--pretty"])
    assert code == 2 and "Empty" in out
    code, _ = run(["analyze", "--matrix", files["bad"]])
    assert code == 1
    assert "line 2, column 3" in capsys.readouterr().err
    assert run(["analyze", "--matrix", files["example1"], "--k", "5"])[0] == 1


def test_cli_groups(files):
    d = json.loads(run(["stabilizer", "--matrix", files["example4"]])[1])
    assert (d["order"], d["orbit_size"], d["group_order"]) == (16, 240, 3840)
    assert len(d["elements"]) == 16
    d = json.loads(run(["orbit", "--matrix", files["example5"]])[1])
    assert (d["order"], d["orbit_size"]) == (48, 15)


def test_cli_too_large(files, monkeypatch):
    monkeypatch.setenv("CODETOPS_MAX_GROUP", "10")
    assert run(["stabilizer", "--matrix", files["example5"]])[0] == 3
    monkeypatch.setenv("CODETOPS_MAX_VERTICES", "10")
    assert run(["graph", "--n", "4", "--k", "2", "--q", "2"])[0] == 3


def test_cli_usage():
    for argv in (["verify", "--suite", "nope"], [], ["analyze"], ["graph", "--n", "x", "--k", "1", "--q", "2"]):
        with pytest.raises(SystemExit) as info:
            run(argv)
        assert info.value.code == 64


def test_cli_graph():
    code, out = run(["graph", "--n", "4", "--k", "2", "--q", "2", "--format", "json"])
    d = json.loads(out)
    assert code == 0 and len(d["vertices"]) == 35
    assert all(len(adj) == 18 for adj in d["adjacency"])
    code, out = run(["graph", "--n", "3", "--k", "1", "--q", "2", "--format", "dot"])
    assert out.count(" -- ") == 21 and out.startswith("graph")
    d = json.loads(run(["graph", "--n", "5", "--k", "2", "--q", "2", "--nondegenerate"])[1])
    from codetops.codes import enumerate_nondegenerate
    assert len(d["vertices"]) == len(list(enumerate_nondegenerate(5, 2, make_field(2))))
    assert run(["graph", "--n", "4", "--k", "2", "--q", "2"])[1] == run(["graph", "--n", "4", "--k", "2", "--q", "2"])[1]


def test_cli_verify_example_suite():
    code, out = run(["verify", "--suite", "paper-examples"])
    assert code == 0 and "5/5 passed" in out


def test_cli_fixture_q_only_for_example4(capsys):
    assert run(["fixture", "example1", "--q", "5"])[0] == 1
