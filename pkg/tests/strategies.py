"""Shared hypothesis strategies."""
from fractions import Fraction

from hypothesis import strategies as st

from hallwc.exactalg import LaurentPoly, RatFunc

small_frac = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


@st.composite
def laurent_polys(draw, var="q", lo=-3, hi=3, max_terms=4):
    exps = draw(st.lists(st.integers(lo, hi), max_size=max_terms, unique=True))
    return LaurentPoly({e: draw(small_frac) for e in exps}, var)


@st.composite
def ratfuncs(draw, var="q"):
    num = draw(laurent_polys(var))
    den = draw(laurent_polys(var).filter(lambda p: not p.is_zero()))
    return RatFunc(num, den, var)


@st.composite
def zero_one_inf_funcs(draw):
    """``P(u) / (u^a (1 - u)^b)``: poles only at 0, 1 and infinity."""
    coeffs = draw(st.lists(small_frac, min_size=1, max_size=5))
    num = LaurentPoly({i: c for i, c in enumerate(coeffs)}, "u")
    a = draw(st.integers(0, 3))
    b = draw(st.integers(0, 3))
    den = LaurentPoly({a: 1}, "u") * LaurentPoly({0: 1, 1: -1}, "u") ** b
    return RatFunc(num, den, "u")
