import json

import pydot
import pytest

from squarekit import examples as ex
from squarekit.cli import main, shipped_example
from squarekit.dot import export_ladder, export_square, export_staircase
from squarekit.diagrams import enumerate_diagrams, staircase_shape
from squarekit.interchange import InterchangeError, dump_sset, parse_squares, parse_sset


@pytest.fixture(scope="module")
def finset_doc():
    with open(shipped_example(), encoding="utf-8") as fh:
        return json.load(fh)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_shipped_file(capsys):
    code, out, _ = run(capsys, "validate", str(shipped_example()))
    assert code == 0 and "PASS" in out


def test_k0_builder_report(capsys):
    code, out, _ = run(capsys, "k0", "--builder", "finset:2")
    assert code == 0
    assert out.strip() == "free rank 1, torsion none, [2] = 2·[1]"


def test_k0_from_file_matches_builder(capsys):
    _, a, _ = run(capsys, "k0", str(shipped_example()))
    _, b, _ = run(capsys, "k0", "--builder", "finset:2")
    assert a == b


def test_reports_are_deterministic(capsys):
    outs = {run(capsys, "segal", "--builder", "pmonoid:1x", "--levels", "3")[1] for _ in range(3)}
    assert len(outs) == 1


def test_dangling_source_exits_2(tmp_path, capsys, finset_doc):
    doc = json.loads(json.dumps(finset_doc))
    doc["hmor"][1]["src"] = "nowhere"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    code, _, err = run(capsys, "validate", str(p))
    assert code == 2
    assert "hmor[1].src" in err


def test_unknown_key_rejected(finset_doc):
    doc = dict(finset_doc, extra=1)
    with pytest.raises(InterchangeError, match="extra: unknown key"):
        parse_squares(doc)


def test_missing_key_rejected(finset_doc):
    doc = {k: v for k, v in finset_doc.items() if k != "squares"}
    with pytest.raises(InterchangeError, match="squares: missing key"):
        parse_squares(doc)


def test_bad_json_cites_line(tmp_path, capsys):
    p = tmp_path / "broken.json"
    p.write_text('{\n "objects": [\n')
    code, _, err = run(capsys, "validate", str(p))
    assert code == 2 and "line" in err


def test_failing_check_exits_1(tmp_path, capsys, finset_doc):
    doc = json.loads(json.dumps(finset_doc))
    doc["squares"] = doc["squares"][1:]
    p = tmp_path / "fewer.json"
    p.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 1 and "violation" in out


def test_bad_usage_exits_2(capsys):
    assert run(capsys, "k0", "--builder", "finset")[0] == 2
    assert run(capsys, "k0")[0] == 2
    assert run(capsys, "roundtrip", "--builder", "finset:1")[0] == 2
    assert main(["nonsense"]) == 2


def test_roundtrip_verb(capsys):
    code, out, _ = run(capsys, "roundtrip", "--builder", "path:z2", "--levels", "3")
    assert code == 0 and "simplicial isomorphism" in out


def test_roundtrip_from_file(tmp_path, capsys):
    p = tmp_path / "z2.json"
    p.write_text(json.dumps(dump_sset(ex.z2_nerve(4))))
    code, _, _ = run(capsys, "roundtrip", "--builder", f"path:{p}", "--levels", "3")
    assert code == 0


def test_sset_interchange_round_trip():
    x = ex.z2_nerve(3)
    y = parse_sset(json.loads(json.dumps(dump_sset(x))))
    assert y.sizes() == x.sizes()


def test_compare_and_incomplete(capsys):
    assert run(capsys, "compare", str(shipped_example()), "--levels", "2")[0] == 0
    code, out, _ = run(capsys, "compare", "--builder", "graph:3:2", "--mode", "proto")
    assert code == 1 and "INCOMPLETE DATA" in out


def test_other_verbs(capsys):
    assert run(capsys, "weq", "--builder", "graph:1:edge")[0] == 0
    assert run(capsys, "nerve", "--builder", "pmonoid:1x", "--levels", "2")[0] == 0
    assert run(capsys, "validate", "--builder", "intervals:1:2:refl")[0] == 0


def test_out_file(tmp_path, capsys):
    p = tmp_path / "report.txt"
    run(capsys, "k0", "--builder", "finset:2", "--out", str(p))
    assert p.read_text().strip() == "free rank 1, torsion none, [2] = 2·[1]"


def _parse(text):
    graphs = pydot.graph_from_dot_data(text)
    assert graphs and len(graphs) == 1
    return graphs[0]


def _nodes(g):
    return [n for n in g.get_nodes() if n.get_name() not in ("node", "edge", "graph")]


def test_dot_identity_square_on_O(finset2):
    o = finset2.basepoint
    sq = (finset2.hcat.ident(o), finset2.vcat.ident(o), finset2.vcat.ident(o), finset2.hcat.ident(o))
    g = _parse(export_square(finset2, sq))
    assert len(_nodes(g)) == 1
    assert g.get_edges() == []


def test_dot_staircase(finset2):
    sh = staircase_shape(2)
    X = next(X for X in enumerate_diagrams(finset2, sh)
             if all(X[0][sh.index[p]] != 0 for p in [(0, 1), (0, 2), (1, 2)]))
    text = export_staircase(finset2, 2, X)
    g = _parse(text)
    labels = [n.get("label").strip('"') for n in _nodes(g)]
    assert len(labels) == 6 and labels.count("0") == 3
    assert [s.get_name() for s in g.get_subgraphs()] == ["cluster_sq_0"]
    styles = {e.get("style") for e in g.get_edges()}
    assert styles == {"solid", "dashed"}


def test_dot_ladder_and_cli(finset2, capsys):
    from squarekit.constructions import t_simplicial
    T1 = t_simplicial(finset2, 1).levels[1]
    m = sorted(T1.morphisms, key=repr)[0]
    _parse(export_ladder(finset2, 1, m))
    code, out, _ = run(capsys, "dot", "--builder", "finset:2", "--kind", "staircase",
                       "--levels", "2", "--index", "3")
    assert code == 0
    _parse(out)
    assert run(capsys, "dot", "--builder", "finset:2", "--index", "999")[0] == 2
