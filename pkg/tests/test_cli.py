import json

import pytest

from comax.cli import main


@pytest.fixture(autouse=True)
def cache_env(tmp_path, monkeypatch):
    monkeypatch.setenv("COMAX_CACHE_DIR", str(tmp_path / "cache"))
    return tmp_path / "cache"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_subgroups_listing(capsys):
    code, out, _ = run(capsys, "subgroups", "C12")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 6
    assert lines[0] == "1: {0}" and lines[1] == "2: {0, 6}"
    code, out, _ = run(capsys, "subgroups", "C2 x C2 x C2")
    assert code == 0 and len(out.splitlines()) == 16


def test_subgroups_json(capsys):
    code, out, _ = run(capsys, "subgroups", "Q8", "--json")
    doc = json.loads(out)
    assert code == 0 and doc["group"] == "Q8" and len(doc["subgroups"]) == 6
    assert [s["maximal"] for s in doc["subgroups"]] == [False, False, True, True, True, False]


@pytest.mark.parametrize("argv,code", [
    (("subgroups", "C0"), 2),
    (("subgroups", "C2 x"), 2),
    (("graph", "D2"), 2),
    (("subgroups", "C300"), 3),
    (("subgroups", "C2xC2xC2xC2", "--subgroup-cap", "5"), 3),
    (("verify", "nonsense"), 2),
    (("frobnicate",), 2),
    (("subgroups", "C4", "--order-cap", "0"), 2),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err


def test_parse_error_reports_offset(capsys):
    _, _, err = run(capsys, "subgroups", "C2 x Z3")
    assert "offset 5" in err


def test_graph_formats(capsys):
    code, out, _ = run(capsys, "graph", "Q8", "--json")
    doc = json.loads(out)
    assert code == 0 and len(doc["vertices"]) == 4 and len(doc["edges"]) == 3
    code, out, _ = run(capsys, "graph", "C7", "--dot")
    assert out == "graph comax {\n}\n"
    _, first, _ = run(capsys, "graph", "D6", "--json")
    _, second, _ = run(capsys, "graph", "D6", "--json", "--no-cache")
    assert first == second
    code, out, _ = run(capsys, "graph", "C6")
    assert out.splitlines()[0] == "2 1" and out.splitlines()[-1] == "0 1"


def test_classify_lines(capsys):
    code, out, _ = run(capsys, "classify", "D9")
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "D9: 14 vertices, 12 edges"
    assert "cograph: yes" in lines and "chordal: yes" in lines and "triangle-free: yes" in lines
    assert any(l.startswith("cluster: no [witness: P3 on ") for l in lines)
    _, out, _ = run(capsys, "classify", "C12")
    assert "threshold: yes" in out.splitlines()
    _, out, _ = run(capsys, "classify", "C2xC2")
    verdicts = [l for l in out.splitlines()[1:] if not l.startswith(("triangle-free", "bipartite"))]
    assert all(": yes" in l for l in verdicts)


def test_classify_json(capsys):
    _, out, _ = run(capsys, "classify", "D6", "--json")
    doc = json.loads(out)
    w = doc["classes"]["cograph"]["witness"]
    assert doc["classes"]["cograph"]["member"] is False and w["pattern"] == "P4" and len(w["vertices"]) == 4


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "quaternion", "--max-n", "5")
    assert code == 0 and out.splitlines()[-1].startswith("total=3 matched=3")
    code, out, _ = run(capsys, "verify", "order-pq", "--json")
    assert code == 0 and json.loads(out)["summary"]["mismatched"] == 0
    code, out, _ = run(capsys, "verify", "dihedral", "--max", "4")
    assert code == 1 and "! mismatch D4 claw_free" in out
    code, out, _ = run(capsys, "verify", "dihedral", "--max", "4", "--subgroup-cap", "3")
    assert code == 3


def test_cache_commands(capsys, cache_env):
    code, out, _ = run(capsys, "cache", "warm", "dihedral", "--max", "8")
    assert code == 0 and out.startswith("warmed 6 lattices")
    _, out, _ = run(capsys, "cache", "stat")
    assert ": 6 entries," in out
    snapshot = {p.name: p.read_bytes() for p in cache_env.iterdir()}
    run(capsys, "cache", "warm", "dihedral", "--max", "8")
    assert {p.name: p.read_bytes() for p in cache_env.iterdir()} == snapshot
    code, out, _ = run(capsys, "cache", "clear")
    assert code == 0 and out.startswith("removed 6 entries")
    _, out, _ = run(capsys, "cache", "stat")
    assert ": 0 entries, 0 bytes" in out


def test_cache_dir_flag_beats_environment(capsys, tmp_path, cache_env):
    other = tmp_path / "other"
    run(capsys, "subgroups", "C6", "--cache-dir", str(other))
    assert (other / "C6.json").exists() and not cache_env.exists()


def test_warm_then_verify_matches_cold(capsys):
    _, cold, _ = run(capsys, "verify", "dicyclic", "--max", "9", "--no-cache")
    run(capsys, "cache", "warm", "dicyclic", "--max", "9")
    _, warm, _ = run(capsys, "verify", "dicyclic", "--max", "9")
    assert cold == warm


def test_io_error_exit_code(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    code, _, err = run(capsys, "subgroups", "C6", "--cache-dir", str(blocker / "sub"))
    assert code == 4 and "I/O error" in err
