import csv
import io
import json

import pytest

from brauer_cartan.cli import main

from conftest import DATA, EXAMPLE_CARTAN

EXAMPLE = str(DATA / "example.yaml")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_validate_ok(capsys):
    assert run(capsys, "validate", EXAMPLE) == (0, "ok\n", "")


@pytest.mark.parametrize("name, kind", [
    ("invalid_c1", "C1"),
    ("invalid_c2", "C2"),
    ("invalid_c3", "C3"),
    ("invalid_mismatch", "OrientationMultiplicityMismatch"),
    ("invalid_truncated", "OrientationOnTruncated"),
    ("invalid_missing", "MissingOrientation"),
])
def test_validate_reports(capsys, name, kind):
    code, out, _ = run(capsys, "validate", str(DATA / f"{name}.yaml"))
    assert code == 1
    assert out.split()[0] == kind


def test_cartan_table(capsys):
    code, out, _ = run(capsys, "cartan", EXAMPLE, "--format", "table")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["V1", "V2", "V3", "V4"]
    assert [[int(x) for x in line.split()[1:]] for line in lines[1:]] == EXAMPLE_CARTAN


def test_cartan_csv_and_json(capsys):
    _, out, _ = run(capsys, "cartan", EXAMPLE, "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["", "V1", "V2", "V3", "V4"]
    assert [[int(x) for x in r[1:]] for r in rows[1:]] == EXAMPLE_CARTAN
    _, out, _ = run(capsys, "cartan", EXAMPLE, "--format", "json")
    assert json.loads(out) == {"labels": ["V1", "V2", "V3", "V4"], "entries": EXAMPLE_CARTAN}


def test_dim(capsys):
    assert run(capsys, "dim", EXAMPLE) == (0, "dim=48 cartan_sum=48 ok\n", "")


def test_quiver_dot(capsys):
    code, out, _ = run(capsys, "quiver", EXAMPLE, "--format", "dot")
    assert code == 0
    assert out.startswith("digraph") and out.endswith("}\n")
    edges = [line for line in out.splitlines() if "->" in line]
    nodes = [line for line in out.splitlines() if line.strip().endswith(";") and "->" not in line]
    assert len(nodes) == 4 and len(edges) == 9
    assert '"V3" -> "V3" [label="a^(3)_3"];' in out


def test_quiver_json(capsys):
    _, out, _ = run(capsys, "quiver", EXAMPLE, "--format", "json")
    data = json.loads(out)
    assert data["vertices"] == ["V1", "V2", "V3", "V4"]
    assert len(data["arrows"]) == 9


def test_relations(capsys):
    code, out, _ = run(capsys, "relations", EXAMPLE)
    assert code == 0
    assert "type one (8):" in out
    assert "type two (9):" in out
    assert "type three (16):" in out
    assert "  a^(2)_2 a^(1)_1\n" in out


def test_check(capsys):
    assert run(capsys, "check", EXAMPLE) == (0, "ok\n", "")


def test_fuzz(capsys):
    code, out, _ = run(capsys, "fuzz", "--seed", "7", "--count", "25", "--bounds", "4,4,2,2")
    assert code == 0
    assert out.startswith("fuzz seed=7 count=25 bounds=4,4,2,2")
    assert out.rstrip().endswith("ok")


def test_invalid_file_gives_exit_1(capsys):
    code, out, err = run(capsys, "cartan", str(DATA / "invalid_c3.yaml"))
    assert code == 1 and out == ""
    assert err.startswith("error: C3: polygon V2")


def test_syntax_error_is_one_line(capsys, tmp_path):
    bad = tmp_path / "bad.yaml"
    bad.write_text("vertices: [a\n")
    code, _, err = run(capsys, "dim", str(bad))
    assert code == 1
    assert err.startswith("error: syntax:") and err.count("\n") == 1


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "dim", str(tmp_path / "absent.yaml"))[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["cartan", EXAMPLE, "--format", "xml"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main(["fuzz", "--bounds", "1,2"])
    assert info.value.code == 2


def test_dot_parses_with_graph_tooling(capsys):
    pydot = pytest.importorskip("pydot")
    _, out, _ = run(capsys, "quiver", EXAMPLE, "--format", "dot")
    (graph,) = pydot.graph_from_dot_data(out)
    assert len(graph.get_nodes()) == 4
    assert len(graph.get_edges()) == 9
