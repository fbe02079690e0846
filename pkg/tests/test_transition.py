import pytest

from webbasis.qlaurent import ONE, ZERO, Q, LaurentPoly
from webbasis.tableaux import Partition
from webbasis.transition import (
    METHODS, Report, check_bijection, check_eigen_relation, check_equivariance,
    check_module_relations, check_order_isomorphism, check_palindromic, check_positive,
    check_q_one, check_resolvers, check_unitriangular, eigenvalue, parse, serialize,
    standard_labels, transition_matrix, two_row,
)
from webbasis.webs import Web

SHAPES = [(1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1), (3, 3), (4, 2), (5, 1)]


def test_two_row():
    assert two_row(Partition((4, 2))) == (2, 2)
    assert two_row(Partition((3,))) == (0, 3)
    with pytest.raises(ValueError):
        two_row(Partition((2, 1, 1)))


@pytest.mark.parametrize("parts", SHAPES)
def test_methods_agree(parts):
    shape = Partition(parts)
    mats = [transition_matrix(shape, m) for m in METHODS]
    assert mats[0] == mats[1] == mats[2]


@pytest.mark.parametrize("parts", SHAPES)
def test_structural_checks(parts):
    shape = Partition(parts)
    m = transition_matrix(shape)
    for rep in (check_unitriangular(m), check_positive(m), check_palindromic(m),
                check_q_one(m), check_equivariance(shape), check_eigen_relation(shape),
                check_bijection(shape), check_module_relations(shape),
                check_order_isomorphism(shape), check_resolvers(shape)):
        assert rep.passed, rep.lines()


def test_diagonal_is_literal():
    m = transition_matrix(Partition((3, 3)))
    assert all(m.entries[k][k] == ONE for k in range(len(m.row_labels)))
    assert [str(w) for w in m.row_labels] == ["()()()", "()(())", "(())()", "(()())", "((()))"]


def test_json_roundtrip():
    m = transition_matrix(Partition((4, 2)))
    assert parse(serialize(m)) == m
    one = transition_matrix(Partition((1,)))
    assert serialize(one).startswith('{"lambda":[1,0],')
    assert serialize(one).endswith('"entries":[[[[0,1]]]]}')


def test_pretty_output():
    text = serialize(transition_matrix(Partition((2, 1))), "pretty")
    assert text.splitlines()[0] == "lambda = (2,1)"
    assert "q" in text
    with pytest.raises(ValueError):
        serialize(transition_matrix(Partition((2, 1))), "xml")


def test_parse_rejects_shape_mismatch():
    text = serialize(transition_matrix(Partition((2, 1)))).replace('"entries":[[', '"entries":[[[],', 1)
    with pytest.raises(ValueError):
        parse(text)


def test_column_order_starts_with_superstandard():
    labels = standard_labels(Partition((3, 3)))
    assert labels[0].rows == ((1, 2), (3, 4), (5, 6))


def test_eigenvalue():
    assert eigenvalue(Partition((3, 3))) == (ONE + Q ** -2) ** 3
    assert eigenvalue(Partition((2,))) == ONE


def test_report_lines():
    rep = Report("demo", True)
    rep.notes.append("hello")
    assert rep.lines() == ["demo: pass", "  hello"]
    rep.fail("bad")
    assert rep.lines()[0] == "demo: FAIL" and rep.lines()[-1] == "  failure: bad"


def test_palindromic_check_flags_asymmetric_entries():
    m = transition_matrix(Partition((2, 1)))
    m.entries[0][1] = LaurentPoly({2: 1, 1: 2})
    assert not check_palindromic(m).passed
    m.entries[0][1] = ZERO
    assert check_palindromic(m).passed


def test_unknown_method():
    with pytest.raises(ValueError):
        transition_matrix(Partition((2, 1)), "magic")
    assert Web("()|")
