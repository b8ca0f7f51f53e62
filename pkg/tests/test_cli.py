import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from qhk.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out = capsys.readouterr()
    return rc, out.out, out.err


def run_json(capsys, *argv):
    rc, out, _ = run(capsys, *argv)
    return rc, json.loads(out)


def test_dim(capsys):
    rc, data = run_json(capsys, "dim", "--ell", "2", "--beta", "2,2,2")
    assert rc == 0 and data["dim"] == 172


def test_dim_text(capsys):
    rc, out, _ = run(capsys, "--format", "text", "dim", "--ell", "2", "--beta", "2,2,2")
    assert rc == 0 and "172" in out


def test_walls(capsys):
    rc, data = run_json(capsys, "walls", "--ell", "2", "--beta", "2,2,2")
    assert rc == 0 and data["count"] == 3
    assert data["walls"] == [[6], [5, 1], [4, 2]]


def test_orbit(capsys):
    rc, data = run_json(capsys, "ar", "--ell", "2", "--orbit", "v0gamma")
    assert rc == 0 and data["period"] == 5 and data["ok"]


def test_orbit_dot(capsys):
    rc, out, _ = run(capsys, "ar", "--ell", "2", "--orbit", "v0gamma", "--dot")
    assert rc == 0
    assert out.startswith("digraph") and out.count("->") == 5


def test_tau(capsys):
    rc, data = run_json(capsys, "ar", "--ell", "2", "--tau", "beta2 alpha2")
    assert rc == 0
    assert "yes" in json.dumps(data)


def test_bands(capsys):
    rc, data = run_json(capsys, "ar", "--ell", "2", "--bands", "--prime", "5")
    assert rc == 0 and data["classes"] == 6 == len(data["bands"])


def test_tableaux(capsys):
    rc, data = run_json(capsys, "tableaux", "--ell", "2", "--shape", "3,2")
    assert rc == 0 and data["count"] == 2
    assert set(data["counts"].values()) == {2}


def test_fock(capsys):
    rc, data = run_json(capsys, "fock", "--ell", "2", "--word", "f2 f1 f0")
    assert rc == 0 and data["terms"] == [{"coefficient": 1, "partition": [3]}]


def test_modules(capsys):
    rc, data = run_json(capsys, "modules", "--ell", "2", "--build", "M")
    assert rc == 0 and data["dim"] == 10


def test_basic_consistency(capsys):
    rc, out, _ = run(capsys, "basic", "--ell", "2", "--consistency")
    assert rc == 0 and "172" in out


def test_crosscheck_reports_without_failing(capsys):
    rc, data = run_json(capsys, "crosscheck", "--ell", "2", "--maxheight", "3")
    assert rc == 0 and len(data["rows"]) >= 3


@pytest.mark.parametrize(
    "argv",
    [
        ["dim", "--ell", "0", "--n", "2"],
        ["dim", "--ell", "2", "--beta", "x,y"],
        ["ar", "--ell", "2", "--bands", "--dot"],
        ["fock", "--ell", "2", "--word", "g1"],
    ],
)
def test_usage_errors(capsys, argv):
    rc, _, err = run(capsys, *argv)
    assert rc == 2 and "error" in err


def test_argparse_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["dim"])
    assert exc.value.code == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "qhk", "dim", "--ell", "2", "--n", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["dim"] == 3


COMMANDS = [
    ["dim", "--ell", "2", "--n", "4"],
    ["tableaux", "--ell", "2", "--shape", "5,2"],
    ["walls", "--ell", "3", "--beta", "2,2,2,2"],
    ["ar", "--ell", "2", "--strings", "--maxlen", "3"],
    ["basic", "--ell", "2", "--gram"],
]


@settings(max_examples=10)
@given(st.sampled_from(COMMANDS), st.sampled_from(["json", "text"]))
def test_output_is_deterministic(argv, fmt):
    outs = []
    for _ in range(2):
        from io import StringIO
        import contextlib

        buf = StringIO()
        with contextlib.redirect_stdout(buf):
            main(["--format", fmt] + argv)
        outs.append(buf.getvalue())
    assert outs[0] == outs[1] and outs[0]
