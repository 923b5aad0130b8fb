import io
import json
import subprocess
import sys

import pytest

from fintop import golden
from fintop.cli import run


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in golden.SPACES.items():
        p = tmp_path / f"{name}.top"
        p.write_text(text)
        paths[name] = str(p)
    bad = tmp_path / "bad.top"
    bad.write_text("points: a b\nopen: a\nopen: b c\n")
    paths["bad"] = str(bad)
    return paths


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_check_echoes_canonical_space(files):
    code, text = call("check", files["ex39"])
    assert code == 0
    assert text == "points: a b c d\nopen:\nopen: a\nopen: b\nopen: a b\nopen: a b c d\n"


def test_check_reports_bad_line(files, capsys):
    code, text = call("check", files["bad"])
    assert code == 2 and text == ""
    assert "line 3" in capsys.readouterr().err


def test_missing_file(tmp_path, capsys):
    assert call("check", str(tmp_path / "nope.top"))[0] == 2
    assert "cannot read" in capsys.readouterr().err


def test_families_single(files):
    code, text = call("families", files["ex37"], "--lc", "aLC")
    assert code == 0 and text == "{}\n{b}\n{a,c,d}\n{a,b,c,d}\n"


def test_families_multiple_have_headers(files):
    code, text = call("families", files["aspace"], "--variant", "aO", "--variant", "aC", "--lc", "LC")
    assert code == 0
    blocks = text.split("# ")[1:]
    assert [b.splitlines()[0] for b in blocks] == ["aO", "aC", "LC"]
    assert blocks[0] == "aO\n{}\n{a}\n{b,c,d}\n{a,b,c,d}\n"


def test_families_default_lists_everything(files):
    code, text = call("families", files["ex38"])
    assert code == 0 and text.count("# ") == 15


def test_families_unknown_variant(files, capsys):
    assert call("families", files["ex37"], "--variant", "zO")[0] == 2
    assert "zO" in capsys.readouterr().err


def test_classify_empty_set(files):
    code, text = call("classify", files["ex37"], "--set", "{}")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "set: {}"
    flags = [l for l in lines[1:16]]
    assert len(flags) == 15 and all(l.endswith(": true") for l in flags)


def test_classify_example(files):
    code, text = call("classify", files["ex39"], "--set", "{c}")
    assert code == 0
    assert "aLC: true" in text.splitlines() and "LC: false" in text.splitlines()
    assert "  b: true P={a,b,c}" in text


def test_classify_bad_set(files, capsys):
    assert call("classify", files["ex37"], "--set", "{a,z}")[0] == 2
    assert "--set" in capsys.readouterr().err


def test_diagram(files):
    code, text = call("diagram", files["ex37"])
    assert code == 0
    lines = text.splitlines()
    assert lines[0].split()[0] == "set" and len(lines[0].split()) == 16
    assert len(lines) == 1 + 16 + 9 + 1
    assert lines[-1] == "all arrows hold"


def test_search_found(files):
    code, text = call("search", "--points", "2", "--claim", "LC=>aLC")
    assert code == 1
    rec = json.loads(text)
    assert rec["status"] == "Found" and rec["subset"] == "{a}"
    assert rec["space"] == "points: a b\nopen:\nopen: a\nopen: a b\n"


def test_search_exhausted_and_deterministic():
    outs = []
    for workers in ("1", "2"):
        code, text = call("search", "--points", "3", "--question-3-10", "--workers", workers)
        assert code == 0
        recs = json.loads(text)
        for r in recs:
            r.pop("elapsed_ms")
        outs.append(recs)
    assert outs[0] == outs[1]
    assert [r["status"] for r in outs[0]] == ["ExhaustedUpTo(3)"] * 2


@pytest.mark.parametrize(
    "argv",
    [
        ["search", "--points", "2"],
        ["search", "--points", "2", "--claim", "LC"],
        ["search", "--points", "9", "--claim", "LC=>aLC"],
        ["search", "--points", "2", "--claim", "LC=>aLC", "--workers", "0"],
        ["frobnicate"],
        ["check"],
        ["diagram", "x.top", "--bogus"],
    ],
)
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == 2
    assert capsys.readouterr().err


def test_verify_paper():
    code, text = call("verify-paper")
    assert code == 0
    assert text.splitlines()[-1] == f"{len(golden.run_golden())}/{len(golden.run_golden())} examples match"
    assert "FAIL" not in text


def test_verify_paper_reports_diff(monkeypatch):
    broken = list(golden.GOLDEN_FAMILIES)
    broken[0] = ("ex37", "lc", "aLC", "{}\n{a}")
    monkeypatch.setattr(golden, "GOLDEN_FAMILIES", broken)
    code, text = call("verify-paper")
    assert code == 1 and "FAIL ex37 aLC" in text and "+{b}" in text


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "fintop", "families", files["ex37"], "--lc", "aLC"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "{}\n{b}\n{a,c,d}\n{a,b,c,d}\n"
