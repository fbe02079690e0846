import itertools

import pytest

from webbasis.tableaux import (
    Partition, StandardTableau, act, apply_simple, bruhat_covers_up, catalan, compose,
    enumerate_std, eta_inverse, from_word, identity, inverse, permutation_length,
    reduced_word, reduced_word_to, sigma_lambda, simple, superstandard, transpose_tableau,
)


def hook_length_count(shape: Partition) -> int:
    from math import factorial
    conj = shape.transpose().parts
    prod = 1
    for i, row in enumerate(shape.parts):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(shape.d) // prod


@pytest.mark.parametrize("parts", [(1,), (2, 1), (3, 3), (4, 2), (3, 2, 1), (2, 2, 2), (5, 3)])
def test_enumeration_matches_hook_length(parts):
    shape = Partition(parts)
    tabs = enumerate_std(shape)
    assert len(tabs) == hook_length_count(shape)
    assert all(t.is_standard() and t.shape == shape for t in tabs)
    words = [t.reading_word() for t in tabs]
    assert words == sorted(words) and len(set(words)) == len(words)


def test_transpose_involution():
    for t in enumerate_std(Partition((3, 2))):
        assert transpose_tableau(transpose_tableau(t)) == t
        assert transpose_tableau(t).shape == t.shape.transpose()


def test_partition_validation():
    assert Partition((3, 0)).parts == (3,)
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_right_action():
    t = superstandard(Partition((2, 2, 2)))
    for s, u in itertools.product(itertools.permutations(range(1, 7)), repeat=2):
        if s[0] > 2 or u[0] > 2:  # sample
            continue
        assert act(act(t, s), u) == act(t, compose(s, u))
    u, ok = apply_simple(t, 2)
    assert ok and u.rows == ((1, 3), (2, 4), (5, 6))
    assert not apply_simple(t, 1)[1]


def test_permutation_helpers():
    p = (3, 1, 4, 2)
    assert compose(p, inverse(p)) == identity(4)
    assert permutation_length(p) == 3
    assert from_word(reduced_word(p), 4) == p
    assert len(reduced_word(p)) == permutation_length(p)
    assert simple(2, 4) == (1, 3, 2, 4)


def test_hasse_diagram_33():
    t0 = superstandard(Partition((2, 2, 2)))
    covers = {(str(t), i, str(u)) for t in enumerate_std(t0.shape) for i, u in bruhat_covers_up(t)}
    assert len(covers) == 5
    assert sorted(i for _, i, _ in covers) == [2, 2, 3, 4, 4]


def test_reduced_word_to_reaches_target():
    for t in enumerate_std(Partition((2, 2, 1, 1))):
        word = reduced_word_to(t)
        base = superstandard(t.shape)
        cur = base
        for i in word:
            assert i in [j for j, _ in bruhat_covers_up(cur)]
            cur, ok = apply_simple(cur, i)
            assert ok
        assert cur == t
        assert len(word) == permutation_length(eta_inverse(t))


def test_cover_chain_words_for_33():
    got = [reduced_word_to(t) for t in enumerate_std(Partition((2, 2, 2)))]
    assert sorted(got) == sorted([(), (4,), (2,), (4, 2), (4, 2, 3)])


def test_eta_inverse():
    for t in enumerate_std(Partition((2, 2, 1))):
        assert act(superstandard(t.shape), eta_inverse(t)) == t


def test_sigma_lambda():
    shape = Partition((2, 2, 2))
    sigma = sigma_lambda(shape)
    assert sigma == (1, 3, 5, 2, 4, 6)
    moved = act(superstandard(shape), sigma)
    assert transpose_tableau(moved) == superstandard(shape.transpose())


def test_json_forms():
    t = StandardTableau(((1, 4), (2, 5), (3,)))
    assert StandardTableau.from_json(t.to_json()) == t
    assert t.to_json(compact=True) == {"col1": [1, 2, 3], "col2": [4, 5]}
    assert StandardTableau.from_json({"col1": [1, 2, 3], "col2": [4, 5]}) == t
    with pytest.raises(ValueError):
        StandardTableau.from_json([[2, 1]])


def test_catalan():
    assert [catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
