from __future__ import annotations

import itertools
from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from outerplanar import (
    NotACharacterError,
    SymLaurent,
    catalan,
    char_product,
    decompose_char,
    irr_char,
    multiplicity,
    multiplicity_by_recursion,
)


def weight_count_multiplicity(d, k):
    # independent route: count basis monomials of weight k and k+2 directly
    def dim(w):
        return sum(1 for e in itertools.product(*(range(x + 1) for x in d)) if sum(d) - 2 * sum(e) == w)

    return dim(k) - dim(k + 2)


def test_irr_char_examples():
    assert irr_char(0) == {0: 1}
    assert irr_char(1) == {1: 1, -1: 1}
    assert irr_char(2) == {2: 1, 0: 1, -2: 1}


def test_char_product_examples():
    assert char_product([irr_char(1)]) == {1: 1, -1: 1}
    assert char_product([irr_char(1), irr_char(1)]) == {2: 1, 0: 2, -2: 1}
    assert char_product([irr_char(2), irr_char(3)]) == {5: 1, 3: 2, 1: 3, -1: 3, -3: 2, -5: 1}


def test_char_product_rejects_empty():
    with pytest.raises(ValueError):
        char_product([])


def test_decompose_char_examples():
    assert decompose_char(SymLaurent({1: 1, -1: 1})) == {1: 1}
    assert decompose_char(char_product([irr_char(1)] * 2)) == {2: 1, 0: 1}
    assert decompose_char(char_product([irr_char(1)] * 3)) == {3: 1, 1: 2}


def test_asymmetric_and_mixed_parity_rejected():
    with pytest.raises(NotACharacterError):
        SymLaurent({1: 1})
    with pytest.raises(NotACharacterError):
        decompose_char(SymLaurent({1: 1, -1: 1, 0: 1}))
    # symmetric, parity-pure, but q^2 + q^-2 alone would need a negative ρ0
    with pytest.raises(NotACharacterError):
        decompose_char(SymLaurent({2: 1, -2: 1}))


def test_multiplicity_examples():
    assert multiplicity((1,) * 6, 0) == 5
    for a in range(7):
        assert multiplicity((a,), a) == 1
    assert multiplicity((2, 3), 0) == 0
    assert multiplicity_by_recursion((1, 1), 0) == 1
    assert multiplicity_by_recursion((2, 2, 2), 0) == 1
    assert multiplicity_by_recursion((1, 1, 1), 1) == 2


def test_empty_degrees_rejected():
    with pytest.raises(ValueError):
        multiplicity((), 0)
    with pytest.raises(ValueError):
        multiplicity_by_recursion((), 0)


def test_catalan_examples():
    assert catalan(0) == 1
    assert catalan(3) == 5
    assert catalan(4) == 14


def test_catalan_closed_form():
    for n in range(1, 12):
        assert catalan(n) == comb(2 * n, n) // (n + 1)


def test_ones_give_catalan():
    for n in range(1, 9):
        assert multiplicity((1,) * (2 * n), 0) == catalan(n)


def test_routes_agree_small_range():
    for m in range(1, 4):
        for d in itertools.product(range(4), repeat=m):
            for k in range(sum(d) + 2):
                a = multiplicity(d, k)
                assert a == multiplicity_by_recursion(d, k)
                assert a == weight_count_multiplicity(d, k)


def test_clebsch_gordan_two_factors():
    for a in range(6):
        for b in range(6):
            for k in range(a + b + 1):
                expected = int(abs(a - b) <= k <= a + b and (a + b - k) % 2 == 0)
                assert multiplicity((a, b), k) == expected


degree_tuples = st.lists(st.integers(0, 4), min_size=1, max_size=5).map(tuple)


@given(degree_tuples)
def test_dimension_count(d):
    assert sum(multiplicity(d, k) * (k + 1) for k in range(sum(d) + 1)) == prod(x + 1 for x in d)


@given(degree_tuples)
def test_decompose_char_matches_multiplicity(d):
    mults = decompose_char(char_product([irr_char(x) for x in d]))
    for k in range(sum(d) + 1):
        assert mults.get(k, 0) == multiplicity(d, k)
    assert len({k % 2 for k in mults}) <= 1


@given(degree_tuples, st.integers(0, 8))
def test_residue_identity(d, d0):
    assert multiplicity(d, d0) == multiplicity((d0,) + d, 0)


@given(st.lists(st.integers(0, 5), min_size=1, max_size=3))
def test_characters_symmetric_and_pure(ds):
    c = char_product([irr_char(x) for x in ds])
    assert all(c[k] == c[-k] for k, _ in c.items())
    assert c.is_parity_pure()
