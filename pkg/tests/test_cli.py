"""Command-line interface: schemas, piping, exit codes."""

import io
import json

import pytest

from cutcomplexes.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gen(capsys):
    code, out, _ = run_cli(capsys, "gen", "cycle:6")
    assert code == 0
    obj = json.loads(out)
    assert obj["n"] == 6 and len(obj["edges"]) == 6


def test_gen_to_file(tmp_path, capsys):
    target = tmp_path / "g.json"
    code, out, _ = run_cli(capsys, "gen", "path:4", "-o", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["n"] == 4


def test_complex_build_descriptor_vs_file(tmp_path, capsys):
    gfile = tmp_path / "g.json"
    run_cli(capsys, "gen", "cycle:6", "-o", str(gfile))
    code, via_file, _ = run_cli(
        capsys, "complex", "build", "--kind", "totalcut", "--d", "2",
        "--graph", str(gfile),
    )
    assert code == 0
    code, via_descriptor, _ = run_cli(
        capsys, "complex", "build", "--kind", "totalcut", "--d", "2", "cycle:6"
    )
    assert code == 0
    assert via_file == via_descriptor
    obj = json.loads(via_file)
    assert len(obj["facets"]) == 9 and not obj["void"]


def test_complex_build_needs_exactly_one_source(capsys, tmp_path):
    code, _, err = run_cli(capsys, "complex", "build", "--kind", "bi", "--d", "2")
    assert code == 2 and "exactly one" in err


def test_homology_pipe_equals_file(tmp_path, capsys, monkeypatch):
    cfile = tmp_path / "k.json"
    run_cli(
        capsys, "complex", "build", "--kind", "totalcut", "--d", "2", "cycle:6",
        "-o", str(cfile),
    )
    code, from_file, _ = run_cli(capsys, "homology", "--complex", str(cfile))
    assert code == 0
    monkeypatch.setattr("sys.stdin", io.StringIO(cfile.read_text()))
    code, from_stdin, _ = run_cli(capsys, "homology")
    assert code == 0
    assert from_file == from_stdin
    obj = json.loads(from_file)
    assert obj["reduced"] == [{"degree": 2, "betti": 1, "torsion": []}]
    assert obj["euler"] == 1


def test_homology_of_void_complex(capsys, monkeypatch):
    monkeypatch.setattr(
        "sys.stdin", io.StringIO('{"ground": [1, 2], "facets": [], "void": true}')
    )
    code, out, _ = run_cli(capsys, "homology")
    assert code == 0
    obj = json.loads(out)
    assert obj["void"] and obj["reduced"] == [] and obj["euler"] == 0


def test_dual_round_trip(tmp_path, capsys):
    cfile = tmp_path / "k.json"
    run_cli(capsys, "complex", "build", "--kind", "bi", "--d", "2", "cycle:4",
            "-o", str(cfile))
    code, out, _ = run_cli(capsys, "dual", "--complex", str(cfile))
    assert code == 0
    obj = json.loads(out)
    assert sorted(obj["facets"]) == [[1, 3], [2, 4]]


def test_poset_subcommand(capsys):
    code, out, _ = run_cli(capsys, "poset", "--d", "2", "--k", "3")
    assert code == 0
    obj = json.loads(out)
    assert obj["ground"] == [1, 2, 3] and obj["facets"] == [[1], [2], [3]]
    code, aug, _ = run_cli(capsys, "poset", "--d", "2", "--k", "3", "--augmented")
    assert json.loads(aug)["ground"] == [1, 2, 3, 4]


def test_malformed_graph_json_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"n": 3, "edges": [[1, 5]]}')
    code, _, err = run_cli(
        capsys, "complex", "build", "--kind", "bi", "--d", "2", "--graph", str(bad)
    )
    assert code == 2
    assert "out of range" in err
    bad.write_text("{oops")
    code, _, err = run_cli(
        capsys, "complex", "build", "--kind", "bi", "--d", "2", "--graph", str(bad)
    )
    assert code == 2
    assert "line 1" in err


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_force_raises_cap(capsys, monkeypatch):
    # lower the cap through the environment, then override it with --force
    import cutcomplexes as cc

    k = cc.full_simplex(range(1, 11))
    payload = json.dumps(cc.complex_to_json(k))
    monkeypatch.setenv("CUTCOMPLEXES_MAX_GROUND", "5")
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    code, _, err = run_cli(capsys, "homology")
    assert code == 2 and "budget" in err.lower()
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    code, out, _ = run_cli(capsys, "homology", "--force", "12")
    assert code == 0
    assert json.loads(out)["reduced"] == []


def test_env_var_mirrors_force(capsys, monkeypatch):
    import cutcomplexes as cc

    k = cc.full_simplex(range(1, 11))
    payload = json.dumps(cc.complex_to_json(k))
    monkeypatch.setenv("CUTCOMPLEXES_MAX_GROUND", "4")
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    code, _, err = run_cli(capsys, "homology")
    assert code == 2 and "budget" in err.lower()
    monkeypatch.setenv("CUTCOMPLEXES_MAX_GROUND", "12")
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    code, out, _ = run_cli(capsys, "homology")
    assert code == 0
    assert json.loads(out)["reduced"] == []


def test_verify_cli(tmp_path, capsys):
    jout = tmp_path / "r.json"
    cout = tmp_path / "r.csv"
    code, out, _ = run_cli(
        capsys, "verify", "--suite", "poset", "--json", str(jout), "--csv", str(cout)
    )
    assert code == 0
    assert "15/15 checks passed" in out
    report = json.loads(jout.read_text())
    assert report["failures"] == 0 and len(report["entries"]) == 15
    assert cout.read_text().startswith("id,expected,computed")


def test_verify_filter_error(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "poset", "--filter", "zzz*")
    assert code == 2 and "matched no" in err
