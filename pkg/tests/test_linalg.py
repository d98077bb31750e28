from __future__ import annotations

from fractions import Fraction

from conftest import fraction_rank
from hypothesis import given, strategies as st

from outerplanar import linalg
from outerplanar.kernels import rank_mod_p

NCOLS = 6
entries = st.one_of(st.integers(-4, 4), st.fractions(min_value=-3, max_value=3, max_denominator=3))
matrices = st.lists(st.lists(entries, min_size=NCOLS, max_size=NCOLS), min_size=0, max_size=7)


def sparse(matrix):
    return [{c: v for c, v in enumerate(row) if v} for row in matrix]


@given(matrices)
def test_rank_matches_gauss_jordan(m):
    assert linalg.rank(sparse(m)) == (fraction_rank(m) if m else 0)


@given(matrices)
def test_kernel_is_kernel(m):
    rows = sparse(m)
    ker = linalg.kernel(rows, NCOLS)
    assert len(ker) == NCOLS - linalg.rank(rows)
    for v in ker:
        for r in rows:
            assert sum(r.get(c, 0) * x for c, x in v.items()) == 0
    assert linalg.rank(ker) == len(ker)


@given(matrices)
def test_rref_normal_form(m):
    red = linalg.rref(sparse(m))
    pivots = [min(r) for r in red]
    assert pivots == sorted(set(pivots))
    for r, p in zip(red, pivots):
        assert r[p] == 1
        for other, q in zip(red, pivots):
            if other is not r:
                assert other.get(p, 0) == 0


@given(matrices, st.lists(st.integers(-3, 3), min_size=7, max_size=7))
def test_solve_left_recovers_combination(m, coeffs):
    rows = sparse(m)
    target: dict = {}
    for c, r in zip(coeffs, rows):
        for k, v in r.items():
            target[k] = target.get(k, 0) + c * v
    sol = linalg.solve_left(rows, target)
    assert sol is not None
    back: dict = {}
    for c, r in zip(sol, rows):
        for k, v in r.items():
            back[k] = back.get(k, 0) + c * v
    assert {k: v for k, v in back.items() if v} == {k: v for k, v in target.items() if v}


def test_solve_left_unsolvable():
    assert linalg.solve_left([{0: 1, 1: 1}], {0: 1}) is None
    assert linalg.solve_left([{0: 2}, {1: Fraction(1, 3)}], {0: 1, 1: 1}) == [Fraction(1, 2), Fraction(3)]


@given(st.lists(st.lists(st.integers(-5, 5), min_size=NCOLS, max_size=NCOLS), max_size=7))
def test_mod_p_rank_bounds_exact_rank(m):
    rows = sparse(m)
    exact = linalg.rank(rows)
    assert rank_mod_p(rows, NCOLS, 2**31 - 1) == exact
    assert rank_mod_p(rows, NCOLS, 3) <= exact
