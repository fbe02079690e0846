import pytest

from webbasis.hecke import (
    HeckeElement, OracleBoundError, T, action_matrix_standard, check_key_lemma, element_z,
    mult, mult_generator, mult_word, standard_basis,
)
from webbasis.linalg import mat_mul
from webbasis.qlaurent import ONE, Q, LaurentPoly
from webbasis.tableaux import Partition, from_word

QI = Q ** -1


def test_quadratic_relation_in_algebra():
    h = HeckeElement.one(3)
    lhs = mult_word(h, (1, 1))
    rhs = mult_generator(h, 1).scale(Q - QI) + h
    assert lhs == rhs


def test_braid_relation_in_algebra():
    h = HeckeElement.one(4)
    assert mult_word(h, (1, 2, 1)) == mult_word(h, (2, 1, 2)) == T(from_word((1, 2, 1), 4))
    assert mult_word(h, (1, 3)) == mult_word(h, (3, 1))


def test_multiplication_associative():
    a = mult_word(HeckeElement.one(4), (1, 2)) + HeckeElement.one(4).scale(Q)
    b = mult_word(HeckeElement.one(4), (3, 2, 1))
    c = mult_word(HeckeElement.one(4), (2, 3))
    assert mult(mult(a, b), c) == mult(a, mult(b, c))


@pytest.mark.parametrize("parts,expected", [
    ((1,), ONE),
    ((2,), ONE),
    ((1, 1), ONE + Q ** -2),
    ((3, 3), (ONE + Q ** -2) ** 3),
    ((2, 2), (ONE + Q ** -2) ** 2),
])
def test_key_lemma_values(parts, expected):
    assert check_key_lemma(Partition(parts)) == expected


def test_key_lemma_nonzero_beyond_two_rows():
    for parts in [(2, 1), (3, 2, 1), (2, 2, 1), (4, 1, 1)]:
        assert check_key_lemma(Partition(parts))


def test_specht_dimension_and_nonzero():
    basis = standard_basis(Partition((3, 2)))
    assert len(basis) == 5
    assert not element_z(Partition((3, 2))).is_zero()


@pytest.mark.parametrize("parts", [(2, 1), (3, 2), (2, 2, 1), (4, 2)])
def test_action_matrices_satisfy_relations(parts):
    shape = Partition(parts)
    d = shape.d
    mats = {i: action_matrix_standard(shape, i) for i in range(1, d)}
    k = len(mats[1])
    eye = [[ONE if a == b else LaurentPoly() for b in range(k)] for a in range(k)]
    for i, m in mats.items():
        sq = mat_mul(m, m)
        lin = [[(Q - QI) * m[a][b] + eye[a][b] for b in range(k)] for a in range(k)]
        assert sq == lin
    for i in range(1, d - 1):
        a, b = mats[i], mats[i + 1]
        assert mat_mul(mat_mul(a, b), a) == mat_mul(mat_mul(b, a), b)
    for i in range(1, d):
        for j in range(i + 2, d):
            assert mat_mul(mats[i], mats[j]) == mat_mul(mats[j], mats[i])


def test_oracle_bound():
    with pytest.raises(OracleBoundError):
        action_matrix_standard(Partition((5, 4)), 1)
    with pytest.raises(IndexError):
        action_matrix_standard(Partition((2, 1)), 3)

