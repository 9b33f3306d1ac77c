import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from cli_cases import CASES
from colorcomp.cli import main, parse_sequence_text

ROOT = Path(__file__).resolve().parent.parent
GOLDEN = ROOT / "tests" / "golden"


@pytest.fixture(autouse=True)
def _at_root(monkeypatch):
    monkeypatch.chdir(ROOT)


def run(argv):
    buf = io.StringIO()
    code = main(argv, out=buf)
    return code, buf.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out = run(CASES[name])
    assert code == 0
    assert out == (GOLDEN / f"{name}.txt").read_text()


def test_golden_values_match_reference():
    lines = lambda name: (GOLDEN / f"{name}.txt").read_text().splitlines()  # noqa: E731
    assert lines("count_ones") == ["1", "2", "4", "8", "16"]
    assert lines("count_fib_offset") == ["0", "1", "1", "2", "3"]
    assert lines("enumerate_catalan")[-1] == "total=14" and len(lines("enumerate_catalan")) == 15
    assert lines("enumerate_zero") == ["", "total=1"]
    assert lines("transform_inverse_naturals")[-1] == "coloration: no (first negative at index 3)"
    assert lines("parts_fib") == "0 1 3 7 15 30 58 109 201 365".split()
    assert lines("parts_catalan") == "0 1 3 9 28 90 297 1001 3432 11934".split()
    assert lines("blacktie_natural") == "0 1 2 3 4 5".split()
    assert lines("bell_4") == ["t1^4 + 3*t1^2*t2 + t2^2 + 2*t1*t3 + t4"]


def test_count_methods_agree():
    outs = {run(["count", "--prefix", "2,0,3", "--tail", "1,0", "--n", "10", "--method", m])[1]
            for m in ("recurrence", "multinomial", "invert")}
    assert len(outs) == 1


def test_blacktie_methods_agree():
    outs = {run(["blacktie", "--preset", "catalan", "--n", "9", "--method", m])[1] for m in ("conv", "t5", "t6")}
    assert len(outs) == 1


def test_json_round_trip():
    _, out = run(["count", "--preset", "natural", "--n", "12", "--json"])
    terms, offset = parse_sequence_text(out)
    _, plain = run(["count", "--preset", "natural", "--n", "12"])
    assert terms == [int(v) for v in plain.split()]
    assert offset is None
    doc = json.loads(out)
    assert all(isinstance(t, str) for t in doc["terms"])


def test_inverse_json_reports_witness():
    _, out = run(["transform", "1,2,3,4,5,6", "--op", "inverse", "--json"])
    assert json.loads(out) == {"terms": ["1", "1", "0", "-1", "-1", "0"], "coloration": False, "witness_index": 3}


def test_bfile_parser():
    terms, offset = parse_sequence_text("# c\n0 5\n1 6\n\n2 7\n")
    assert (terms, offset) == ([5, 6, 7], 0)


@pytest.mark.parametrize(
    "argv, status",
    [
        (["count", "--prefix", "1,x", "--n", "3"], 2),
        (["count", "--n", "3", "--preset", "nope"], 2),
        (["count", "--preset", "ones", "--prefix", "1", "--n", "3"], 2),
        (["count", "--prefix", "-1", "--n", "3"], 2),
        (["bell", "4", "5"], 2),
        (["bell", "4", "--eval", "1,2"], 2),
        (["transform", "1,2", "--op", "invert", "--n", "5"], 2),
        (["transform", "1,1,1", "--op", "invert", "--x", "1/2"], 2),
        (["transform", "1,2", "--op", "sigma", "--n", "3"], 2),
        (["enumerate", "--preset", "ones", "--n", "10", "--cap", "100"], 3),
        (["transform", "@tests/data/bad.b", "--op", "invert"], 4),
        (["transform", "@tests/data/gap.b", "--op", "invert"], 4),
        (["transform", "@tests/data/missing.b", "--op", "invert"], 4),
        (["frobnicate"], 2),
    ],
)
def test_exit_statuses(argv, status, capsys):
    code, _ = run(argv)
    assert code == status
    assert capsys.readouterr().err


def test_cap_message_names_cap(capsys):
    run(["enumerate", "--preset", "ones", "--n", "10", "--cap", "100"])
    assert "100" in capsys.readouterr().err


def test_rational_parameter_integral_result():
    assert run(["transform", "2,0,0", "--op", "invert", "--x", "1/2"])[1] == "2\n2\n2\n"


def _subprocess(args, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "colorcomp", *args], input=stdin, capture_output=True, text=True, cwd=ROOT
    )


def test_subprocess_byte_identical_and_deterministic():
    for name in ("enumerate_catalan", "transform_bfile", "bell_4"):
        first = _subprocess(CASES[name])
        second = _subprocess(CASES[name])
        assert first.returncode == 0
        assert first.stdout == second.stdout == (GOLDEN / f"{name}.txt").read_text()


def test_subprocess_stdin_and_statuses():
    res = _subprocess(["transform", "-", "--op", "inverse"], stdin="0 1\n1 1\n2 2\n3 3\n4 5\n5 8\n6 13\n")
    assert res.returncode == 0
    assert res.stdout.splitlines()[-1] == "coloration: yes"
    assert "b-file offset: 0" in res.stderr
    assert _subprocess(["count", "--n"]).returncode == 2
    assert _subprocess(["enumerate", "--preset", "ones", "--n", "8", "--cap", "5"]).returncode == 3
    assert _subprocess(["transform", "-", "--op", "invert"], stdin="1 a\n").returncode == 4
