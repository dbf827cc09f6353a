import json

import pytest

from ringforge import cli
from ringforge.exact import DiagCertificate


def run_json(capsys, *argv):
    code = cli.run([*argv, "--json"])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_smith_example(capsys):
    code, out = run_json(capsys, "smith", "--ring", "Z/12", "--matrix", "[[4,0],[0,6]]")
    assert code == 0
    assert out["diagonal"] == [2, 0]
    assert out["verification"]["passed"]
    assert list(out)[:5] == ["ring", "matrix", "P", "D", "Q"]


def test_lambda_example(capsys):
    code, out = run_json(capsys, "lambda", "--ring", "valq:Q:open:1", "--element", "t^1/2", "--depth", "8")
    assert code == 0 and out["result"] == "Finite(1)"


def test_demo_dim3(capsys):
    code, out = run_json(capsys, "demo", "dim3")
    assert code == 0 and out["passed"]
    assert out["verdict"] == "λ-dim witness = 3"
    items = {c["item"]: c["got"] for c in out["checks"]}
    assert items["ann(a1) finitely generated"] is True
    assert items["ann(b1) finitely generated"] is False
    assert items["lambda(R/Ra1)"] == "Finite(2)"


@pytest.mark.parametrize("name", ["reduced", "noncoherent", "padic"])
def test_other_demos(capsys, name):
    code, out = run_json(capsys, "demo", name)
    assert code == 0 and out["passed"]


def test_json_output_is_stable(capsys):
    first = run_json(capsys, "hermite", "--ring", "Z/12", "4", "6")
    second = run_json(capsys, "hermite", "--ring", "Z/12", "4", "6")
    assert first == second
    assert list(first[1]) == list(second[1])


@pytest.mark.parametrize(
    "argv",
    [
        ["bezout", "--ring", "Z/12", "5", "7"],
        ["hermite", "--ring", "Z/12", "8", "6"],
        ["adequate", "--ring", "Z/12", "2", "3"],
        ["canon", "--ring", "Z/12", "4", "6"],
        ["gh", "--ring", "Z/12", "4", "2", "3"],
        ["minprime", "--ring", "Z/12"],
        ["ann", "--ring", "Z/12", "--element", "4"],
        ["ann", "--ring", "dim3", "--element", "a1"],
        ["ann", "--ring", "valq:Z:closed:5", "--element", "t^2"],
        ["fg", "--ring", "valq:Q:open:1/2", "--cut", "closed:1/3"],
        ["fg", "--ring", "reduced", "--element", "a1"],
        ["classify", "--ring", "valq:Z2lex:row:2"],
        ["smith", "--ring", "Z/4xZ/9", "--matrix", "[[6,0],[0,4]]"],
        ["selftest", "--only", "11"],
    ],
)
def test_commands_succeed(capsys, argv):
    assert cli.run(argv) == 0
    assert cli.run([*argv, "--json"]) == 0
    capsys.readouterr()


def test_bezout_values(capsys):
    code, out = run_json(capsys, "bezout", "--ring", "Z/12", "5", "7")
    assert code == 0
    assert [out[k] for k in ("d", "a1", "b1", "u", "v")] == [1, 5, 7, 3, 10]


def test_fg_values(capsys):
    code, out = run_json(capsys, "fg", "--ring", "valq:Q:open:1/2", "--cut", "open:1/4")
    assert code == 0 and out["finitely_generated"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["smith", "--ring", "Z/1x", "--matrix", "[[1]]"],
        ["smith", "--ring", "Z/12", "--matrix", "[[1,2],"],
        ["lambda", "--ring", "valq:Q:open:1", "--element", "t^(1"],
        ["lambda", "--ring", "valq:Q:clsed:1", "--element", "t^1"],
        ["adequate", "--ring", "Z/12", "0", "3"],
        ["gh", "--ring", "Z/12", "2", "4", "0"],
        ["demo", "nosuch"],
        ["frobnicate"],
    ],
)
def test_bad_input_exits_2(capsys, argv):
    assert cli.run(argv) == 2
    capsys.readouterr()


def test_verification_failure_exits_1(capsys, monkeypatch):
    def broken(ring, a):
        z = ((0,),)
        return DiagCertificate(z, ((1,),), z)

    monkeypatch.setattr(cli, "smith_form", broken)
    code, out = run_json(capsys, "smith", "--ring", "Z/12", "--matrix", "[[4]]")
    assert code == 1
    assert not out["verification"]["passed"]
