import io
import json
import subprocess
import sys

import pytest

from sincpow.cli import run_command


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_cfn():
    assert run("cfn", "--n", "4", "--k", "1") == (0, "0\n", "")
    assert run("cfn", "--n", "3", "--k", "1")[1] == "1/4\n"
    assert run("cfn", "--n", "5", "--k", "3", "--scaled")[1] == "10\n"


def test_stirling2_and_weighted():
    assert run("stirling2", "--n", "4", "--k", "2")[1] == "7\n"
    assert run("weighted", "--n", "2", "--k", "1", "--r", "3/7")[1] == "13/7\n"
    assert run("weighted", "--n", "2", "--k", "1", "--r", "-1/2")[1] == "0\n"
    assert run("weighted", "--n", "3", "--k", "2", "--r", "-1")[1] == "0\n"


def test_series_csv():
    code, out, _ = run("series", "--function", "sinc", "--exponent", "2", "--order", "4",
                       "--method", "cfn", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["power,coefficient", "0,1", "2,-1/3", "4,2/45"]


def test_series_json():
    code, out, _ = run("series", "--function", "exp-sinc", "--order", "6", "--method", "stirling",
                       "--format", "json")
    payload = json.loads(out)
    assert payload == {"order": 6, "coefficients": ["1", "0", "-1/6", "0", "1/45", "0", "-107/45360"]}


def test_series_plain_and_negative_exponent():
    code, out, _ = run("series", "--function", "sinc", "--exponent", "-1", "--order", "4",
                       "--method", "oracle", "--format", "plain")
    assert code == 0
    assert out == "1 + 1/6*z^2 + 7/360*z^4 + O(z^5)\n"
    code, out, _ = run("series", "--function", "sinhc", "--exponent", "-1", "--order", "4")
    assert out == "1 - 1/6*z^2 + 7/360*z^4 + O(z^5)\n"


@pytest.mark.parametrize("method", ["cfn", "stirling", "oracle"])
def test_series_methods_agree(method):
    base = ("series", "--function", "sinc", "--exponent", "-3/2", "--order", "12", "--format", "json")
    assert run(*base, "--method", method)[1] == run(*base, "--method", "oracle")[1]


def test_bell():
    assert run("bell", "--n", "4", "--k", "2", "--args", "0,-1/3,0")[1] == "1/3\n"
    for method in ("recurrence", "cfn", "stirling"):
        assert run("bell", "--n", "4", "--k", "2", "--sinc-args", "--method", method)[1] == "1/3\n"
    assert run("bell", "--n", "7", "--k", "3", "--sinc-args", "--method", "cfn")[1] == "0\n"
    code, _, err = run("bell", "--n", "4", "--k", "2", "--args", "0,1,0", "--method", "cfn")
    assert code == 2 and "--sinc-args" in err


def test_verify_ok():
    code, out, _ = run("verify", "--identity", "alt-sum", "--max", "12")
    assert code == 0
    assert "verified" in out
    for ident in ("parity", "ts-relations", "odd-blocks", "symfun"):
        code, out, _ = run("verify", "--identity", ident, "--max", "6")
        assert code == 0 and out.startswith(f"{ident}: verified")


def test_verify_counterexample_exits_1(monkeypatch):
    from sincpow import identities

    def broken(bound):
        report = identities.IdentityReport("parity", {"max": bound})
        report.compare(("x", 1), 1, 2)
        return report

    monkeypatch.setitem(identities.IDENTITIES, "parity", broken)
    code, out, _ = run("verify", "--identity", "parity", "--max", "3")
    assert code == 1
    assert "counterexample (x, 1): lhs=1 rhs=2" in out


def test_eval():
    code, out, _ = run("eval", "--function", "sinc", "--exponent", "-1", "--z", "1.0", "--order", "24")
    assert code == 0
    fields = dict(line.split("=") for line in out.splitlines())
    assert float(fields["abs_error"]) < 1e-10
    assert float(fields["reference"]) == pytest.approx(1.1883951057781212, rel=1e-15)


@pytest.mark.parametrize("argv", [
    ["frobnicate"],
    [],
    ["cfn", "--n", "4"],
    ["cfn", "--n", "4", "--k", "1", "--bogus"],
    ["weighted", "--n", "2", "--k", "1", "--r", "0.5"],
    ["series", "--function", "sinc", "--exponent", "1", "--order", "4", "--format", "xml"],
    ["series", "--function", "exp-sinc", "--exponent", "2", "--order", "4"],
    ["verify", "--identity", "odd-blocks", "--max", "40"],
    ["eval", "--function", "sinc", "--exponent", "1/2", "--z", "4.0", "--order", "10"],
    ["cfn", "--n", "2", "--k", "3", "--scaled"],
])
def test_usage_errors_exit_2(argv):
    code, out, err = run(*argv)
    assert code == 2
    assert out == ""
    assert "usage:" in err


def test_module_entry_point_is_deterministic():
    argv = [sys.executable, "-m", "sincpow", "series", "--function", "sinhc", "--exponent", "1/2",
            "--order", "10", "--format", "csv"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert first.startswith(b"power,coefficient\n0,1\n2,1/12\n")
