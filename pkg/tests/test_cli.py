import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from halinturan import __version__
from halinturan.cli import run

GOLDEN = Path(__file__).parent / "golden"


def halin(*argv, cache=None):
    out, err = io.StringIO(), io.StringIO()
    args = list(argv)
    if cache is not None:
        args += ["--cache-dir", str(cache)]
    code = run(args, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("argv, golden", [
    (["construct", "--family", "t16", "--format", "json"], "construct_t16.json"),
    (["check", "--input", str(GOLDEN / "k4.halin"), "--forbid", "4", "--format", "json"], "check_k4.json"),
    (["faces", "--input", str(GOLDEN / "t16.halin"), "--format", "json"], "faces_t16.json"),
    (["extremal", "--n", "16", "--forbid", "4", "--witnesses", "--format", "json"], "extremal_16_4.json"),
    (["audit", "--n", "16", "--format", "json"], "audit_16.json"),
    (["conjecture", "--n-min", "4", "--n-max", "12", "--format", "csv"], "conjecture_4_12.csv"),
    (["reduce", "--input", str(GOLDEN / "e21.halin"), "--format", "json"], "reduce_e21.json"),
])
def test_golden(argv, golden, tmp_path):
    code, out, err = halin(*argv, cache=tmp_path)
    assert code == 0, err
    assert out == (GOLDEN / golden).read_text()
    # a second run reads the cache and must print the same bytes
    assert halin(*argv, cache=tmp_path)[1] == out


def test_wheel_n4():
    assert halin("construct", "--family", "wheel", "--n", "4")[1] == "halin1 (()()())\n"


def test_check_k4_text():
    code, out, _ = halin("check", "--input", str(GOLDEN / "k4.halin"), "--forbid", "4")
    assert code == 0
    assert out == "contains C4: 0 1 2 3\n"


def test_extremal_text(tmp_path):
    code, out, _ = halin("extremal", "--n", "16", "--forbid", "4", cache=tmp_path)
    assert code == 0 and "max_edges 25" in out.splitlines()


def test_extremal_none(tmp_path):
    code, out, _ = halin("extremal", "--n", "4", "--forbid", "4", cache=tmp_path)
    assert code == 0 and "max_edges none" in out


def test_version():
    code, out, _ = halin("--version")
    assert code == 0 and __version__ in out and "halin1" in out


@pytest.mark.parametrize("argv", [
    [],
    ["construct"],
    ["construct", "--family", "wheel"],
    ["construct", "--family", "t16", "--bogus"],
    ["check", "--input", "x", "--forbid", "4", "--format", "csv"],
    ["audit", "--n", "19"],
    ["conjecture", "--n-min", "9", "--n-max", "5"],
    ["reduce", "--input", "x", "--site", "1,2"],
])
def test_usage_errors(argv):
    code, out, err = halin(*argv)
    assert code == 1 and out == "" and "usage error" in err


def test_precondition_errors(tmp_path):
    bad = tmp_path / "bad.halin"
    bad.write_text("halin1 (()")
    code, _, err = halin("check", "--input", str(bad), "--forbid", "4")
    assert code == 2 and "byte 10" in err
    deg2 = tmp_path / "deg2.halin"
    deg2.write_text("halin1 ((()))")
    assert halin("faces", "--input", str(deg2))[0] == 2
    k4 = str(GOLDEN / "k4.halin")
    assert halin("reduce", "--input", k4, "--rule", "contraction", "--site", "0,1")[0] == 2
    assert halin("construct", "--family", "extremal", "--n", "10")[0] == 2
    assert halin("reduce", "--input", str(GOLDEN / "t16.halin"))[0] == 2


def test_limit_exceeded(tmp_path):
    assert halin("extremal", "--n", "25", "--forbid", "4", cache=tmp_path)[0] == 3
    assert halin("enumerate", "--n", "19", "--count-only")[0] == 3
    assert halin("conjecture", "--n-min", "18", "--n-max", "19", cache=tmp_path)[0] == 3


def test_enumerate():
    code, out, _ = halin("enumerate", "--n", "8")
    assert code == 0 and len(out.splitlines()) == 4
    assert halin("enumerate", "--n", "14", "--count-only")[1].strip().isdigit()
    assert halin("enumerate", "--n", "16", "--forbid", "4", "--count-only")[1] == "2\n"


def test_random_seeded():
    a = halin("construct", "--family", "random", "--n", "30", "--seed", "7")[1]
    b = halin("construct", "--family", "random", "--n", "30", "--seed", "7")[1]
    assert a == b and a.startswith("halin1 ")


def test_stdin_and_module_entry(tmp_path):
    p = subprocess.run(
        [sys.executable, "-m", "halinturan", "check", "--input", "-", "--forbid", "3"],
        input="halin1 (()()())\n", capture_output=True, text=True,
    )
    assert p.returncode == 0 and p.stdout.startswith("contains C3")


def test_progress_goes_to_stderr(tmp_path):
    code, out, err = halin("extremal", "--n", "12", "--forbid", "4", "-v", cache=tmp_path)
    assert "cache miss" in err and "cache" not in out
