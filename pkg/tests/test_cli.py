import json

import pytest

from eog.cli import main, parse_pattern, UsageError
from eog.core import path_pattern
from eog.formats import read_eog


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lex(capsys, tmp_path):
    code, out, _ = run(capsys, "lex", "--n", "5", "--pattern", "path:132")
    assert code == 0 and out.splitlines()[0] == "6"
    target = tmp_path / "w.eog"
    code, out, _ = run(capsys, "lex", "--n", "5", "--pattern", "path:132", "-o", str(target))
    assert read_eog(target).m == 6


def test_lex_json(capsys):
    code, out, _ = run(capsys, "lex", "--n", "4", "--pattern", "path:123", "--json")
    data = json.loads(out)
    assert data["value"] == 6 and data["status"] == "exact"


def test_contains(capsys):
    code, out, _ = run(capsys, "contains", "--host", "clique:5:min", "--pattern", "path:1423")
    assert code == 0 and out.startswith("contains")
    code, out, _ = run(capsys, "contains", "--host", "clique:5:max", "--pattern", "path:1423")
    assert out.strip() == "avoids"


def test_canonical_count(capsys):
    code, out, _ = run(capsys, "canonical", "--k", "3", "--n", "3", "--count")
    assert code == 0 and out.strip() == "total=3840 iso=80"


def test_chi_and_can_avoid(capsys):
    code, out, _ = run(capsys, "chi", "--pattern", "path:1423", "--pattern", "path:2314", "--kmax", "3")
    assert out.strip() == "Exactly(3)"
    code, out, _ = run(capsys, "can-avoid", "--graph", "clique:3", "--pattern", "path:12")
    assert out.strip() == "none"


def test_construct(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "star-matching", "--n", "5", "--json")
    assert json.loads(out)["edges"][0] == [0, 1]
    f = tmp_path / "k9.eog"
    assert main(["construct", "k9", "-o", str(f)]) == 0
    assert read_eog(f).m == 36
    code, _, err = run(capsys, "construct", "turan", "--n", "4", "--r", "3", "--pattern", "path:14325")
    assert code == 2 and "error" in err


def test_ds_and_matrix(capsys, tmp_path):
    assert run(capsys, "ds", "contains", "abcacb", "aa")[1].strip() == "contains"
    assert run(capsys, "ds", "max", "--n", "3", "abab")[1].strip() == "5"
    code, out, _ = run(capsys, "ds", "max", "--n", "3", "aaaa", "--max-len", "4")
    assert out.splitlines() == [">=4", "status=budget_exceeded"]
    m, p = tmp_path / "m.mat", tmp_path / "p.mat"
    m.write_text("2 2\n11\n11\n")
    p.write_text("1 2\n11\n")
    assert run(capsys, "matrix", "contains", str(m), str(p))[1].strip() == "contains"
    code, out, _ = run(capsys, "matrix", "to-graph", str(m))
    assert out.splitlines()[0] == "4 4"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "3")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "99")
    assert code == 2


def test_verify_failure_exit_code(capsys, monkeypatch):
    from eog import verify
    monkeypatch.setitem(verify.CLAIMS, 3, verify.Claim("forced", lambda: (False, "forced failure")))
    code, out, _ = run(capsys, "verify", "3")
    assert code == 1 and out.startswith("FAIL")


def test_usage_errors(capsys):
    assert run(capsys, "contains", "--host", "wat:1", "--pattern", "path:12")[0] == 2
    assert run(capsys, "contains", "--host", "file:/nonexistent.eog", "--pattern", "path:12")[0] == 2
    assert run(capsys, "nosuch")[0] == 2
    assert run(capsys)[0] == 2


def test_pattern_language():
    assert parse_pattern("path:132") == path_pattern([1, 3, 2])
    assert parse_pattern("d4").m == 5
    assert parse_pattern("knncan:2").m == 4
    assert parse_pattern("k9").n == 9
    with pytest.raises(UsageError):
        parse_pattern("path:1x")
