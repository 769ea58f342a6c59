import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hallwc.errors import DimMismatch, ZeroDenominator
from hallwc.quiver import (
    Quiver,
    SlopeFunction,
    a2,
    enumerate_hn_types,
    fixed_slope_decomps,
    kronecker,
    load_quiver,
    slope_cmp,
    subvectors,
    vect,
)


def test_euler_form():
    K = kronecker()
    assert K.euler_form((1, 1), (1, 1)) == 0
    assert K.euler_form((1, 0), (0, 1)) == -2
    assert K.euler_form((0, 1), (1, 0)) == 0
    assert K.euler_matrix() == [[1, -2], [0, 1]]
    with pytest.raises(DimMismatch):
        K.euler_form((1,), (1, 0))


def test_acyclicity():
    assert a2().is_acyclic()
    assert not Quiver((1,), ((1, 1),)).is_acyclic()
    assert not Quiver(("a", "b"), (("a", "b"), ("b", "a"))).is_acyclic()


def test_record_roundtrip(tmp_path):
    Q = Quiver(("a", "b", "c"), (("a", "b"), ("b", "c"), ("a", "c")))
    path = tmp_path / "q.json"
    path.write_text(json.dumps(Q.to_record()))
    assert load_quiver(str(path)) == Q
    assert load_quiver("vect") == vect()


def test_slope_compare():
    mu = SlopeFunction((1, 0))
    assert slope_cmp(mu, (1, 0), (0, 1)) == "GT"
    assert slope_cmp(mu, (1, 1), (2, 2)) == "EQ"
    tiered = SlopeFunction((0, 0), tiers=(((0, 1), (1, 1)),))
    assert tiered.compare((0, 1), (1, 0)) == 1
    with pytest.raises(ZeroDenominator):
        SlopeFunction((1, 0), (0, 1))
    assert SlopeFunction.from_record(tiered.to_record()) == tiered


def test_hn_types_a2():
    mu = SlopeFunction((1, 0))
    assert enumerate_hn_types((1, 1), mu) == [((1, 0), (0, 1)), ((1, 1),)]
    assert enumerate_hn_types((1, 1), SlopeFunction((0, 1))) == [((0, 1), (1, 0)), ((1, 1),)]


def test_fixed_slope_decomps_trivial():
    # all ordered compositions of (1,1) into nonzero parts
    assert sorted(fixed_slope_decomps((1, 1), SlopeFunction((0, 0)))) == [
        ((0, 1), (1, 0)),
        ((1, 0), (0, 1)),
        ((1, 1),),
    ]


dims = st.tuples(st.integers(0, 2), st.integers(0, 2)).filter(any)
thetas = st.tuples(st.integers(-2, 2), st.integers(-2, 2))


@given(dims, thetas)
def test_hn_types_are_strictly_decreasing(alpha, theta):
    mu = SlopeFunction(theta)
    for parts in enumerate_hn_types(alpha, mu):
        assert tuple(map(sum, zip(*parts))) == alpha
        assert all(mu.compare(a, b) > 0 for a, b in zip(parts, parts[1:]))


def test_subvectors_order():
    assert subvectors((1, 1)) == ((0, 1), (1, 0), (1, 1))
