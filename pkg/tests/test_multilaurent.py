from math import factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hallwc.errors import SizeCap, VarCountMismatch
from hallwc.multilaurent import (
    MultiLaurent,
    VirtualLineSum,
    block_embed,
    constant_term,
    constant_term_of_product,
    gamma_minus,
    is_symmetric,
    lambda_at_minus_one,
    lambda_series,
    ratio,
)

monos = st.dictionaries(
    st.tuples(st.integers(-2, 2), st.integers(-2, 2)), st.integers(-3, 3), max_size=4
).map(lambda d: MultiLaurent(d, 2))


@given(monos, monos, monos)
def test_ring_laws(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@given(monos, monos)
def test_constant_term_of_product(a, b):
    assert constant_term_of_product(a, b) == constant_term(a * b)


@given(monos)
def test_dual_is_involution(a):
    assert a.dual().dual() == a


def test_gamma_constant_terms():
    # CT of the Weyl density is |W|
    for n in range(1, 5):
        assert constant_term(gamma_minus(n)) == factorial(n)
    with pytest.raises(SizeCap):
        gamma_minus(7)


def test_gamma_symmetric():
    assert is_symmetric(gamma_minus(3), [3])


def test_lambda_zero_and_infinity_agree_for_positive_classes():
    v = VirtualLineSum(((ratio(0, 1, 2), 1), ((1, 1), 1)), 2)
    t0 = lambda_series(v, "t_zero")
    tinf = lambda_series(v, "t_infinity")
    assert len(t0) == v.rank + 1
    # Laurent polynomial in t: both expansions list the same coefficients
    assert [tinf[k] for k in range(len(tinf))] == [t0[v.rank - k] for k in range(v.rank + 1)]


def test_lambda_negative_line_is_geometric():
    v = VirtualLineSum((((1,), -1),), 1)
    series = lambda_series(v, "t_zero", order=4)
    assert series == [MultiLaurent.monomial((k,)) for k in range(5)]


def test_lambda_at_minus_one():
    v = VirtualLineSum((((1, -1), 1),), 2)
    assert lambda_at_minus_one(v) == MultiLaurent({(0, 0): 1, (1, -1): -1}, 2)


def test_block_embed():
    p = MultiLaurent({(1, -1): 2}, 2)
    assert block_embed(p, 1, 3) == MultiLaurent({(0, 1, -1): 2}, 3)
    with pytest.raises(VarCountMismatch):
        block_embed(p, [0, 0], 3)


def test_var_count_mismatch():
    with pytest.raises(VarCountMismatch):
        MultiLaurent.constant(1, 2) + MultiLaurent.constant(1, 3)
