from __future__ import annotations

import json

import pytest

from netbounds import cli
from netbounds.cache import ResultCache
from netbounds.checks import CheckResult
from netbounds.errors import InvariantViolation


@pytest.fixture(autouse=True)
def cache_dir(tmp_path, monkeypatch):
    path = tmp_path / "cache"
    monkeypatch.setenv("NETBOUNDS_CACHE_DIR", str(path))
    return path


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_table_csv(capsys):
    code, out, _ = run(capsys, "table", "--dmax", "5", "--format", "csv", "--jobs", "1")
    assert code == 0
    assert out == "d,k,bound\n4,1,1\n4,2,1\n5,1,4\n5,2,2\n5,3,4\n"


def test_table_markdown(capsys):
    code, out, _ = run(capsys, "table", "--dmax", "6", "--format", "markdown", "--jobs", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "| k \\ d | 4 | 5 | 6 |"
    assert lines[2] == "| 1 | 1 | 4 | 14 |"
    assert lines[5] == "| 4 |  |  | 12 |"


def test_table_output_is_deterministic(capsys):
    outs = set()
    for jobs in ("1", "2", "1"):
        code, out, _ = run(capsys, "table", "--dmax", "8", "--format", "json", "--jobs", jobs)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1
    rows = json.loads(outs.pop())
    assert len(rows) == 20
    assert all(r["bound"] * (2 * r["d"] - 2) == r["sumV"] for r in rows)


@pytest.mark.parametrize(
    "argv",
    [
        ("table", "--dmax", "99"),
        ("table", "--dmax", "3"),
        ("table", "--format", "xml"),
        ("table", "--jobs", "0"),
        ("bound", "-d", "4", "-k", "5"),
        ("bound", "-d", "4"),
        ("frobnicate",),
    ],
)
def test_usage_errors_exit_one(capsys, argv):
    # argparse reports through SystemExit, our own checks through the return value
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:
        code = exc.code
    assert code == 1


def test_bound(capsys):
    assert run(capsys, "bound", "-d", "6", "-k", "3", "--jobs", "1")[1] == "12\n"


def test_bound_pair(capsys):
    code, out, _ = run(capsys, "bound", "-d", "4", "-k", "4", "--pair", "--jobs", "1")
    assert code == 0
    assert out.splitlines() == ["k=4: 1", "k=1: 1", "the two bounds agree (informational only)"]


def test_bound_uses_cache(capsys, cache_dir):
    run(capsys, "bound", "-d", "5", "-k", "2", "--jobs", "1")
    assert ResultCache(cache_dir).load(5, 2).bound == 2
    run(capsys, "bound", "-d", "5", "-k", "2", "--jobs", "1", "--no-cache")


@pytest.mark.parametrize("net, v", [("(())()", 2), ("()()()", 0), ("1-4,2-3,5-6", 2)])
def test_trace_text(capsys, net, v):
    code, out, _ = run(capsys, "trace", "-d", "4", "-k", "1", "--net", net)
    assert code == 0
    lines = out.splitlines()
    assert lines[-2] == f"V={v}"
    assert lines[-1].startswith("c=")
    assert sum(1 for line in lines if "(L,U)=" in line) == 12


def test_trace_json(capsys):
    code, out, _ = run(capsys, "trace", "-d", "4", "-k", "1", "--net", "(())()", "--format", "json")
    data = json.loads(out)
    assert data["V"] == 2
    assert [h["label"] for h in data["halfIntervals"][:3]] == ["V0", "W0", "V1"]
    flagged = [h["extremum"] for h in data["halfIntervals"] if h["extremum"]]
    assert sorted(flagged) == ["max", "min"]


@pytest.mark.parametrize(
    "argv",
    [
        ("-d", "4", "-k", "9", "--net", "(())()"),
        ("-d", "5", "-k", "1", "--net", "(())()"),
        ("-d", "4", "-k", "1", "--net", "(()"),
    ],
)
def test_trace_errors(capsys, argv):
    assert run(capsys, "trace", *argv)[0] == 1


def test_internal_violation_exits_two(capsys, monkeypatch):
    def broken(*a, **kw):
        raise InvariantViolation("boom")

    monkeypatch.setattr(cli, "lower_bound", broken)
    code, _, err = run(capsys, "bound", "-d", "5", "-k", "1", "--no-cache")
    assert code == 2
    assert "boom" in err


def test_verify_mismatch_exits_three(capsys, monkeypatch):
    def fake(level, **kw):
        results = [CheckResult("1 table", False, "(4,1) got 2 want 1"), CheckResult("2 other", True)]
        for r in results:
            kw["report"](r)
        return results

    monkeypatch.setattr(cli, "run_all", fake)
    code, out, _ = run(capsys, "verify", "--level", "fast")
    assert code == 3
    assert "FAIL 1 table" in out


def test_verify_fast_with_corrupted_cache(capsys, cache_dir):
    cache = ResultCache(cache_dir)
    cache_dir.mkdir()
    cache.path(6, 2).write_text("{not json")
    cache.path(6, 3).write_text(json.dumps({"d": 6, "k": 3, "bound": 99}))
    code, out, _ = run(capsys, "verify", "--level", "fast", "--jobs", "1")
    assert code == 0, out
    assert out.splitlines()[-1].endswith("0 failed")
    assert cache.load(6, 2).bound == 6
    assert cache.load(6, 3).bound == 12


def test_render(capsys, tmp_path):
    target = tmp_path / "net.svg"
    code, out, _ = run(capsys, "render", "--net", "(())()", "--out", str(target), "-k", "2")
    assert code == 0
    assert target.read_text().count("<line ") == 3


@pytest.mark.parametrize(
    "argv",
    [
        ("--net", "(()", "--out", "x.svg"),
        ("--net", "()()", "--out", "/nonexistent-dir/x.svg"),
        ("--net", "()()", "--out", "x.svg", "-k", "3"),
    ],
)
def test_render_errors(capsys, argv, tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert run(capsys, "render", *argv)[0] == 1
