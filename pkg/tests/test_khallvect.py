from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb

import pytest

from hallwc.errors import SizeCap, VarCountMismatch
from hallwc.khallvect import (
    BlockProfile,
    binomial_example,
    block_density,
    compositions,
    delta_eval,
    epsilon_eval,
    epsilon_eval_blockwise,
    khall_product_eval,
    khall_product_eval_blockwise,
    nested_product_eval,
)
from hallwc.multilaurent import gamma_minus
from hallwc.repchar import Character, schur_char, weight_zero_dominant_weights


def test_compositions():
    assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]


@pytest.mark.parametrize("sizes", [(1, 1), (2, 1), (1, 2), (1, 1, 1), (2, 2), (1, 3)])
def test_block_density_collapses(sizes):
    assert block_density(sizes) == gamma_minus(sum(sizes))


@pytest.mark.parametrize("n", [2, 3])
def test_epsilon_paths_agree(n):
    for w in weight_zero_dominant_weights(n, -2, 2):
        chi = schur_char(w)
        assert epsilon_eval(n, chi) == epsilon_eval_blockwise(n, chi) == 0


def test_products_agree_blockwise():
    chi = schur_char((1, 0, -1)) * schur_char((1, 0, -1))
    for comp in compositions(3):
        assert khall_product_eval(comp, chi) == khall_product_eval_blockwise(comp, chi)


def test_delta_is_invariant_dimension():
    assert delta_eval(2, schur_char((0, 0))) == 1
    assert delta_eval(2, schur_char((1, -1))) == 0


def test_binomial_example():
    for N in range(1, 6):
        assert binomial_example(N) == (-1) ** N * comb(2 * N + 2, N + 1)


def test_nested_associativity():
    chi = schur_char((1, 0, -1)) * schur_char((1, 0, -1))
    left = nested_product_eval(((1, 1), 1), chi)
    right = nested_product_eval((1, (1, 1)), chi)
    assert left == right == khall_product_eval((1, 1, 1), chi)


def test_errors():
    with pytest.raises(VarCountMismatch):
        delta_eval(3, schur_char((0, 0)))
    with pytest.raises(SizeCap):
        delta_eval(6, Character.one(6))
    with pytest.raises(ValueError):
        BlockProfile((0, 1))
