from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from conftest import tensor
from hypothesis import given, settings, strategies as st

from outerplanar import (
    GroupElement,
    LieGenerator,
    SparseTensor,
    TensorSpace,
    act_group,
    act_lie,
    build_t_G,
    componentwise_product,
    enumerate_graphs,
    weight,
)

WEDGE = tensor((1, 1), {(0, 1): 1, (1, 0): -1})
E, F, H = LieGenerator.E, LieGenerator.F, LieGenerator.H


def exp_action(X, s, t):
    """sum_k s^k X^k t / k!, which terminates because E and F are nilpotent."""
    out = SparseTensor(t.space)
    term, k = t, 0
    while term:
        out = out + Fraction(s**k, factorial(k)) * term
        term = act_lie(X, term)
        k += 1
    return out


def test_identity_and_diag():
    t = tensor((2, 1), {(0, 1): 3, (2, 0): -1})
    assert act_group(GroupElement.identity(), t) == t
    for k in range(5):
        xk = SparseTensor.monomial((k,), (0,))
        assert act_group(GroupElement.diag(2), xk) == 2**k * xk


def test_wedge_invariant_under_any_unimodular():
    for g in [GroupElement(2, 3, 1, 2), GroupElement(Fraction(1, 2), 5, 0, 2), GroupElement(0, 1, -1, 0)]:
        assert act_group(g, WEDGE) == WEDGE


def test_non_unimodular_rejected():
    with pytest.raises(ValueError):
        GroupElement(1, 1, 1, 1)


def test_lie_examples():
    assert not act_lie(H, SparseTensor.monomial((1, 1), (0, 1)))
    assert not act_lie(E, WEDGE)
    assert not act_lie(F, WEDGE)
    assert act_lie(E, SparseTensor.monomial((2,), (2,))) == 2 * SparseTensor.monomial((2,), (1,))
    assert act_lie("F", SparseTensor.monomial((2,), (0,))) == 2 * SparseTensor.monomial((2,), (1,))


def test_weight_examples():
    for k in range(5):
        assert weight((0,), (k,)) == k
        assert weight((k,), TensorSpace((k,))) == -k
    assert weight((0, 1), (1, 1)) == 0


def test_commutation_relations():
    t = tensor((2, 3, 1), {(0, 1, 0): 1, (2, 2, 1): -3, (1, 3, 0): Fraction(5, 2)})
    ef = act_lie(E, act_lie(F, t)) - act_lie(F, act_lie(E, t))
    assert ef == act_lie(H, t)
    assert act_lie(H, act_lie(E, t)) - act_lie(E, act_lie(H, t)) == 2 * act_lie(E, t)
    assert act_lie(H, act_lie(F, t)) - act_lie(F, act_lie(H, t)) == -2 * act_lie(F, t)


def test_invariants_fixed_by_unipotents():
    for d in [(1, 1), (2, 2, 2), (1, 2, 1, 2), (3, 1, 1, 1)]:
        for G in enumerate_graphs(d):
            t = build_t_G(G)
            assert not act_lie(E, t) and not act_lie(F, t)
            assert act_group(GroupElement.upper(1), t) == t
            assert act_group(GroupElement.lower(1), t) == t


space_degrees = st.lists(st.integers(0, 3), min_size=1, max_size=3).map(tuple)


@st.composite
def tensors(draw, degrees=None):
    degrees = degrees if degrees is not None else draw(space_degrees)
    keys = list(TensorSpace(degrees).basis())
    vals = st.fractions(min_value=-50, max_value=50, max_denominator=4)
    return SparseTensor(degrees, draw(st.dictionaries(st.sampled_from(keys), vals, max_size=6)))


@settings(max_examples=60)
@given(tensors(), st.integers(-3, 3))
def test_lie_matches_group(t, s):
    assert act_group(GroupElement.upper(s), t) == exp_action(E, s, t)
    assert act_group(GroupElement.lower(s), t) == exp_action(F, s, t)


@given(tensors())
def test_h_is_weight(t):
    expected = SparseTensor(t.space, {e: weight(e, t.space) * v for e, v in t.items()})
    assert act_lie(H, t) == expected
    q = Fraction(2)
    scaled = SparseTensor(t.space, {e: q ** weight(e, t.space) * v for e, v in t.items()})
    assert act_group(GroupElement.diag(q), t) == scaled


@settings(max_examples=40)
@given(space_degrees.flatmap(lambda d: st.tuples(tensors(d), tensors(d))))
def test_group_multiplicative(pair):
    s, t = pair
    g = GroupElement(2, 1, 1, 1)
    assert act_group(g, componentwise_product(s, t)) == componentwise_product(act_group(g, s), act_group(g, t))


@given(space_degrees.flatmap(lambda d: st.tuples(tensors(d), tensors(d))))
def test_lie_linear(pair):
    a, b = pair
    for X in LieGenerator:
        assert act_lie(X, a + b) == act_lie(X, a) + act_lie(X, b)
