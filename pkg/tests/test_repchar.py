import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hallwc.errors import NonDominant, NotACharacter, ParseError
from hallwc.multilaurent import MultiLaurent
from hallwc.repchar import (
    Character,
    HighestWeight,
    decompose_by_peeling,
    invariant_dim_ct,
    invariant_dim_peel,
    parse_character,
    schur_char,
    weight_zero_dominant_weights,
)


def test_adjoint_sl2():
    s = schur_char((1, -1))
    assert s.poly == MultiLaurent({(1, -1): 1, (0, 0): 1, (-1, 1): 1}, 2)


def test_schur_dimension():
    # dim of GL_3 rep with weight (2,0,-2) is 27
    s = schur_char((2, 0, -2))
    assert sum(s.poly.terms.values()) == 27


def test_non_dominant():
    with pytest.raises(NonDominant):
        HighestWeight((0, 1))


def test_peel_rejects_nonsymmetric():
    with pytest.raises(NotACharacter):
        decompose_by_peeling(Character(MultiLaurent({(1, 0): 1}, 2)))


def test_parse_character():
    chi = parse_character("s[1,-1]^2 - 2*s[0,0]")
    assert chi.n == 2
    assert invariant_dim_ct(chi) == -1
    with pytest.raises(ParseError):
        parse_character("s[0,1]")
    with pytest.raises(ParseError):
        parse_character("s[1,-1] + s[0,0,0]")


weights3 = st.sampled_from(weight_zero_dominant_weights(3, -2, 2))


@given(st.lists(weights3, min_size=1, max_size=2), st.integers(-2, 2))
@settings(max_examples=40, deadline=None)
def test_ct_matches_peeling(ws, shift):
    chi = Character.one(3) * (shift * shift)
    for w in ws:
        chi = chi * schur_char(w)
    assert invariant_dim_ct(chi) == invariant_dim_peel(chi)


def test_weight_zero_enumeration():
    ws = weight_zero_dominant_weights(2, -3, 3)
    assert ws == [(3, -3), (2, -2), (1, -1), (0, 0)]
