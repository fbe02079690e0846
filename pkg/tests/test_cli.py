import json

import pytest

from webbasis.cli import main
from webbasis.tableaux import Partition
from webbasis.transition import parse, transition_matrix


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_webs(capsys):
    code, out, _ = run(capsys, "enumerate", "webs", "--n", "2", "--r", "1")
    assert code == 0
    assert out.split() == ["(())|", "()()|", "()|()", "|(())", "|()()"]


def test_enumerate_tableaux(capsys):
    code, out, _ = run(capsys, "enumerate", "tableaux", "--shape", "2,1")
    assert code == 0 and out.split() == ["[[1,2],[3]]", "[[1,3],[2]]"]


def test_map_roundtrip(capsys):
    assert run(capsys, "map", "psi", "--tableau", "[[1,2,3],[4,5]]")[1].strip() == "|(())"
    assert run(capsys, "map", "phi", "--web", "|(())")[1].strip() == "[[1,2,3],[4,5]]"


def test_nest(capsys):
    code, out, _ = run(capsys, "nest", "--web", "|(())")
    assert code == 0 and "= 3" in out


def test_matrix_json(capsys):
    code, out, _ = run(capsys, "matrix", "--shape", "4,2", "--format", "json")
    assert code == 0
    assert parse(out) == transition_matrix(Partition((4, 2)))


def test_matrix_all_methods(capsys):
    code, out, _ = run(capsys, "matrix", "--shape", "3,3", "--method", "all", "--format", "pretty")
    assert code == 0 and "((()))" in out


def test_hasse_dot(capsys):
    code, out, _ = run(capsys, "hasse", "--shape", "2,2", "--side", "webs")
    assert code == 0
    assert out.startswith("digraph") and '"()()" -> "(())" [label="2"];' in out


@pytest.mark.parametrize("which", ["bijection", "unitriangular", "positive", "equivariance",
                                   "eigen", "resolvers", "hecke-relations", "order-iso"])
def test_checks_pass(capsys, which):
    code, out, _ = run(capsys, "check", which, "--shape", "4,2")
    assert code == 0 and "result: pass" in out


def test_check_all_upto(capsys):
    code, out, _ = run(capsys, "check", "all", "--all-upto", "5")
    assert code == 0 and "FAIL" not in out


def test_oracle(capsys):
    code, out, _ = run(capsys, "oracle", "key-lemma", "--shape", "3,3")
    assert code == 0 and "1+3q^-2+3q^-4+q^-6" in out
    code, out, _ = run(capsys, "oracle", "action", "--shape", "2,1", "--i", "1")
    assert code == 0 and "-q^-1" in out


def test_oracle_bound_is_a_usage_error(capsys):
    code, _, err = run(capsys, "oracle", "action", "--shape", "5,4", "--i", "1")
    assert code == 2 and "oracle bound" in err


@pytest.mark.parametrize("argv", [
    ["nest", "--web", "(("],
    ["map", "phi", "--web", "x"],
    ["matrix", "--shape", "2,1,1"],
    ["enumerate", "webs"],
])
def test_bad_input_exits_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_global_flags_before_subcommand(capsys):
    code, out, _ = run(capsys, "--format", "json", "matrix", "--shape", "1")
    assert code == 0 and json.loads(out)["lambda"] == [1, 0]


def test_palindromic_is_reported_not_failed(capsys):
    code, out, _ = run(capsys, "check", "palindromic", "--shape", "5,3")
    assert code == 0 and "FAIL" in out and "2q^3+q" in out
    code, _, _ = run(capsys, "check", "palindromic", "--shape", "5,3", "--strict")
    assert code == 1
