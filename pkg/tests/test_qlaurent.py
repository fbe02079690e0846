import pytest
from hypothesis import given, strategies as st

from webbasis.qlaurent import (
    ONE, Q, ZERO, LaurentPoly, eval_at_one, is_palindromic, quantum_factorial, quantum_int,
)

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(polys, polys)
def test_exact_division_roundtrip(a, b):
    if b:
        assert (a * b).divmod_exact(b) == a


@given(polys)
def test_json_roundtrip(a):
    assert LaurentPoly.from_json(a.to_json()) == a


@given(polys, polys)
def test_evaluation_is_a_ring_map(a, b):
    assert eval_at_one(a * b) == eval_at_one(a) * eval_at_one(b)
    assert (a * b).evaluate(-1) == a.evaluate(-1) * b.evaluate(-1)


def test_no_zero_coefficients_stored():
    assert LaurentPoly({1: 1, 2: 0}).terms == {1: 1}
    assert (Q - Q).terms == {}
    assert ZERO.to_json() == []


def test_quantum_integers():
    assert quantum_int(0) == ZERO
    assert quantum_int(1) == ONE
    assert quantum_int(2) == LaurentPoly({1: 1, -1: 1})
    assert quantum_int(3) == LaurentPoly({2: 1, 0: 1, -2: 1})
    for k in range(8):
        assert eval_at_one(quantum_int(k)) == k
        assert quantum_int(k) == quantum_int(k).bar()
    assert eval_at_one(quantum_factorial(5)) == 120
    assert quantum_factorial(0) == ONE


def test_quantum_integer_recurrence():
    q2 = quantum_int(2)
    for k in range(1, 8):
        assert quantum_int(k + 1) == q2 * quantum_int(k) - quantum_int(k - 1)


def test_palindromic():
    assert is_palindromic(ZERO)
    assert is_palindromic(LaurentPoly({3: 1, 1: 1}))
    assert is_palindromic(Q ** 4)
    assert not is_palindromic(LaurentPoly({2: 1, 1: 2}))
    assert not is_palindromic(LaurentPoly({0: 1, 1: -1}))


def test_pretty_printing():
    assert str(LaurentPoly({3: 1, 1: 1})) == "q^3+q"
    assert str(quantum_int(2)) == "q+q^-1"
    assert str(ZERO) == "0"
    assert str(LaurentPoly({-1: -1})) == "-q^-1"
    assert str(LaurentPoly({1: 2})) == "2q"


def test_inexact_division_raises():
    with pytest.raises(ArithmeticError):
        ONE.divmod_exact(ONE + Q)
    with pytest.raises(ZeroDivisionError):
        ONE.divmod_exact(ZERO)


def test_malformed_json_rejected():
    with pytest.raises(ValueError):
        LaurentPoly.from_json([[1, 0]])
    with pytest.raises(ValueError):
        LaurentPoly.from_json([[2, 1], [1, 1]])
