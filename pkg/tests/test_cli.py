import io
import json

import pytest

from polygroup.cli import main
from polygroup.documents import DocumentError, dumps, emit_polytope, loads, parse_element, parse_polytope
from polygroup.group import eq, involution
from polygroup.polytope_ops import minkowski_sum, reflect

from conftest import SQUARE, T, poly


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def pdoc(*verts):
    return {"ambient_dim": len(verts[0]), "vertices": [list(v) for v in verts]}


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out.strip(), err.strip()


@pytest.fixture
def files(tmp_path):
    return {
        "t": write(tmp_path, "t.json", pdoc((0, 0), (1, 0), (0, 1))),
        "st": write(tmp_path, "st.json", pdoc((0, 0), (-1, 0), (0, -1))),
        "sq": write(tmp_path, "sq.json", pdoc((0, 0), (1, 0), (0, 1), (1, 1))),
    }


def test_documents():
    assert parse_polytope(pdoc((0, 0), (1, 0), (0, 1))) == T
    P = parse_polytope({"ambient_dim": 1, "vertices": [["1/2"], [3]]})
    assert not P.is_integral
    assert emit_polytope(P)["vertices"] == [["1/2"], [3]]
    assert emit_polytope(parse_polytope(pdoc((0,), (2,), (1,))))["vertices"] == [[0], [2]]
    doc = emit_polytope(SQUARE)
    assert emit_polytope(parse_polytope(loads(dumps(doc)))) == doc


@pytest.mark.parametrize(
    "doc, msg",
    [
        ({"ambient_dim": 2, "vertices": [[0, "x"]]}, r"vertices\[0\]\[1\]: malformed coordinate"),
        ({"ambient_dim": 2, "vertices": [[0, 0], [1]]}, r"vertices\[1\]: dimension mismatch"),
        ({"ambient_dim": 2, "vertices": []}, "empty vertex list"),
        ({"ambient_dim": 2, "vertices": [[0, 1.5]]}, "malformed coordinate"),
    ],
)
def test_document_errors(doc, msg):
    with pytest.raises(DocumentError, match=msg):
        parse_polytope(doc)


def test_sum_of_t_and_star_t(capsys, files):
    rc, out, _ = run(capsys, "sum", files["t"], files["st"])
    assert rc == 0
    assert parse_polytope(json.loads(out)) == minkowski_sum(T, reflect(T))


def test_hull_from_stdin(capsys, monkeypatch):
    rc, out, _ = run(capsys, "hull", "-", stdin=json.dumps(pdoc((0,), (2,), (1,))), monkeypatch=monkeypatch)
    assert rc == 0 and json.loads(out)["vertices"] == [[0], [2]]


def test_eq(capsys, tmp_path, files):
    P, R = SQUARE, T
    x = write(tmp_path, "x.json", {
        "positive": emit_polytope(minkowski_sum(P, R)), "negative": emit_polytope(R)})
    y = write(tmp_path, "y.json", {"positive": emit_polytope(P), "negative": pdoc((0, 0))})
    assert run(capsys, "eq", x, y)[:2] == (0, "equal")
    assert run(capsys, "eq", files["t"], files["sq"])[:2] == (1, "unequal")
    t2 = write(tmp_path, "t2.json", pdoc((5, 5), (6, 5), (5, 6)))
    assert run(capsys, "eq", files["t"], t2)[:2] == (1, "unequal")
    assert run(capsys, "eq", files["t"], t2, "--quotient")[:2] == (0, "equal")


def test_decompose_and_reassemble(capsys, tmp_path, files):
    rc, out, _ = run(capsys, "decompose", files["t"], "--quotient")
    assert (rc, out) == (0, "{shadow[(1,-1)]: 1}")
    rc, out, _ = run(capsys, "decompose", files["sq"], "--quotient", "--json")
    d = write(tmp_path, "d.json", json.loads(out))
    rc, out, _ = run(capsys, "reassemble", d)
    assert rc == 0
    back = json.loads(out)
    assert parse_polytope(back["positive"]).normalized() == SQUARE


def test_decompose_without_quotient_prints_translation(capsys, tmp_path):
    f = write(tmp_path, "t.json", pdoc((2, 3), (3, 3), (2, 4)))
    rc, out, _ = run(capsys, "decompose", f)
    assert rc == 0 and out.startswith("(2,3)")


@pytest.mark.parametrize(
    "argv",
    [
        ["reflect"],
        ["faces"],
        ["face", "--dir", "0,1"],
        ["shadow"],
        ["upper-shadow"],
        ["cut", "--normal", "0,1", "--offset", "1/2"],
        ["stretch", "--height", "0"],
        ["euler"],
        ["norm", "--phi", "1,2"],
        ["classify"],
    ],
)
def test_single_input_commands(capsys, files, argv):
    rc, out, err = run(capsys, argv[0], files["sq"], *argv[1:])
    assert rc == 0, err
    assert out


def test_face_and_norm_values(capsys, files):
    rc, out, _ = run(capsys, "face", files["sq"], "--dir", "0,1")
    assert json.loads(out)["vertices"] == [[0, 1], [1, 1]]
    rc, out, _ = run(capsys, "norm", files["sq"], "--phi", "1,2")
    assert out == "3"


def test_glue(capsys, tmp_path, files):
    lower = write(tmp_path, "lo.json", pdoc((0, -1), (1, -1), (0, 0), (1, 0)))
    rc, out, _ = run(capsys, "glue", files["sq"], lower)
    assert rc == 0
    assert parse_polytope(json.loads(out)) == poly((0, -1), (1, -1), (0, 1), (1, 1))


def test_witness_commands(capsys, tmp_path, files):
    x = write(tmp_path, "x.json", {"positive": emit_polytope(T), "negative": emit_polytope(reflect(T))})
    rc, out, _ = run(capsys, "witness", x)
    doc = json.loads(out)
    assert rc == 0 and doc["verified"]
    W = parse_element(doc["witness"])
    assert eq(W - involution(W), parse_element(json.loads(open(x).read())))
    rc, out, _ = run(capsys, "witness-r", files["t"], files["st"])
    assert rc == 0 and parse_polytope(json.loads(out)).is_integral


def test_plot2d(capsys, tmp_path, files):
    target = tmp_path / "fig.svg"
    rc, _, _ = run(capsys, "plot2d", files["t"], files["sq"], "-o", str(target))
    assert rc == 0 and target.read_text().startswith("<svg")


def test_exit_codes(capsys, tmp_path, files):
    assert run(capsys, "nonsense")[0] == 2
    bad = write(tmp_path, "bad.json", {"ambient_dim": 2, "vertices": [[0, "x"]]})
    rc, _, err = run(capsys, "hull", bad)
    assert rc == 2 and "malformed coordinate" in err
    assert run(capsys, "hull", str(tmp_path / "missing.json"))[0] == 2
    rc, _, err = run(capsys, "witness", files["t"])
    assert rc == 1 and "ker(id+*)" in err
    assert run(capsys, "face", files["sq"], "--dir", "a,b")[0] == 2


def test_verify_reports_are_deterministic(capsys):
    argv = ["verify", "--suite", "euler", "--trials", "5", "--seed", "7", "--dim", "2", "--coord-bound", "5"]
    rc, first, _ = run(capsys, *argv)
    rc2, second, _ = run(capsys, *argv)
    assert rc == rc2 == 0 and first == second
    report = json.loads(first)
    assert report["passed"] == report["trials"] == 5


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "--suite", "nope")[0] == 2


def test_verify_env_bound(capsys, monkeypatch):
    monkeypatch.setenv("POLYGROUP_COORD_BOUND", "2")
    rc, out, _ = run(capsys, "verify", "--suite", "shadow", "--trials", "3")
    assert rc == 0 and json.loads(out)["coord_bound"] == 2
