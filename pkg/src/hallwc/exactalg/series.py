"""Truncated Laurent expansions and residues at u = 1."""
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ..errors import PoleElsewhere
from .laurent import (
    LaurentPoly,
    dense_divmod,
    dense_gcd,
    dense_mul,
    dense_trim,
    taylor_shift,
)
from .ratfunc import RatFunc

DEFAULT_ORDER = 16

# local parameter used at each expansion point
LOCAL_PARAMETER = {"zero": "u", "infinity": "u^-1", "one": "(1-u)"}


@dataclass(frozen=True)
class SeriesWindow:
    """Coefficients ``c_valuation .. c_order`` of a Laurent expansion.

    Exponents are in the local parameter of ``point`` (see
    ``LOCAL_PARAMETER``). If the expansion
    vanishes through ``order``, ``coeffs`` is empty and ``valuation`` is
    ``order + 1``.
    """

    point: str
    valuation: int
    coeffs: tuple
    order: int

    def coeff(self, k):
        if k > self.order:
            raise IndexError(f"coefficient {k} beyond truncation order {self.order}")
        i = k - self.valuation
        if i < 0:
            return Fraction(0)
        return self.coeffs[i]

    def as_dict(self):
        return {self.valuation + i: c for i, c in enumerate(self.coeffs) if c}

    def u_exponents(self):
        """Map the local exponents back to powers of ``u`` (only for zero/infinity)."""
        if self.point == "zero":
            return self.as_dict()
        if self.point == "infinity":
            return {-k: c for k, c in self.as_dict().items()}
        raise ValueError("expansion at one is not a series in u")


def _power_series_quotient(num, den, n_terms):
    """First ``n_terms`` coefficients of ``num/den`` at 0, with ``den[0] != 0``."""
    out = []
    d0 = den[0]
    for k in range(n_terms):
        acc = num[k] if k < len(num) else Fraction(0)
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        out.append(acc / d0)
    return out


def _expand_at_zero(f, order):
    if f.is_zero():
        return order + 1, ()
    n, shift = f.num.to_dense()
    d, _ = f.den.to_dense()
    # f = u^shift * n/d with n[0] != 0 and d[0] != 0, so valuation == shift
    if shift > order:
        return order + 1, ()
    coeffs = _power_series_quotient(n, d, order - shift + 1)
    return shift, tuple(coeffs)


def _reflect(f, var):
    """``f(1/u)`` as a rational function in ``var``."""
    d, _ = f.den.to_dense()
    deg = len(d) - 1
    num = LaurentPoly({deg - k: c for k, c in f.num.terms.items()}, var)
    den = LaurentPoly({deg - i: c for i, c in enumerate(d) if c}, var)
    return RatFunc(num, den, var)


def _dense_pow(p, k):
    out = [Fraction(1)]
    for _ in range(k):
        out = dense_mul(out, p)
    return out


def _one_minus(p):
    """Coefficients of ``p(1 - s)`` in ``s``."""
    shifted = taylor_shift(p, Fraction(1))
    return [c if i % 2 == 0 else -c for i, c in enumerate(shifted)]


def _at_one_local(f, var="s"):
    """``f(1 - s)`` as a rational function in ``s``."""
    n, m = f.num.to_dense()
    d, _ = f.den.to_dense()
    num = _one_minus(n)
    den = _one_minus(d)
    one_minus_s = [Fraction(1), Fraction(-1)]
    if m >= 0:
        num = dense_mul(num, _dense_pow(one_minus_s, m))
    else:
        den = dense_mul(den, _dense_pow(one_minus_s, -m))
    return RatFunc(LaurentPoly.from_dense(num, 0, var), LaurentPoly.from_dense(den, 0, var), var)


def expand(f, point, order=DEFAULT_ORDER):
    """Truncated Laurent expansion of ``f`` at ``point`` in its local parameter."""
    if point == "zero":
        g = f
    elif point == "infinity":
        g = _reflect(f, "v")
    elif point == "one":
        g = _at_one_local(f)
    else:
        raise ValueError(f"unknown expansion point {point!r}")
    valuation, coeffs = _expand_at_zero(g, order)
    return SeriesWindow(point, valuation, coeffs, order)


def _is_power_of_u_minus_one(d):
    b = len(d) - 1
    target = [Fraction(comb(b, i) * (-1) ** (b - i)) for i in range(b + 1)]
    return d == target, b


def as_one_laurent(f):
    """Rewrite ``f`` as a finite Laurent polynomial in ``(1 - u)``.

    Only functions whose poles all sit at ``u = 1`` qualify; a pole at 0
    would need an infinite ``(1 - u)`` series.
    """
    if f.is_zero():
        return LaurentPoly({}, "(1-u)")
    d, _ = f.den.to_dense()
    ok, b = _is_power_of_u_minus_one(d)
    if not ok or not f.num.is_polynomial():
        raise PoleElsewhere(f"{f} has poles away from u = 1")
    n, m = f.num.to_dense()
    n = [Fraction(0)] * m + n
    c = _one_minus(n)
    # den (u-1)^b = (-1)^b s^b
    sign = -1 if b % 2 else 1
    return LaurentPoly({k - b: sign * ck for k, ck in enumerate(c) if ck}, "(1-u)")


def one_laurent_to_ratfunc(p, var="u"):
    """Inverse of :func:`as_one_laurent`."""
    s = RatFunc(LaurentPoly({0: 1, 1: -1}, var), var=var)
    out = RatFunc.constant(0, var)
    for k, c in p.terms.items():
        out = out + s**k * c
    return out


def _check_poles(f):
    if not f.poles_within([0, 1]):
        raise PoleElsewhere(f"{f} has poles outside {{0, 1, infinity}}")


def residue_by_expansions(f):
    """``Res_{u=1} u^-1 f(u) du`` as ``[u^0](f_- - f_+)``.

    ``f_+`` and ``f_-`` are the Laurent expansions of ``f`` at 0 and at
    infinity; the identity is the residue theorem on the sphere.
    """
    _check_poles(f)
    plus = expand(f, "zero", 0).coeff(0)
    minus = expand(f, "infinity", 0).coeff(0)
    return minus - plus


def _ext_euclid(a, b):
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` monic."""
    r0, r1 = dense_trim(a), dense_trim(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = dense_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _dense_sub(s0, dense_mul(q, s1))
        t0, t1 = t1, _dense_sub(t0, dense_mul(q, t1))
    lead = r0[-1]
    return ([c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0])


def _dense_sub(a, b):
    n = max(len(a), len(b))
    out = [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)]
    return dense_trim([Fraction(x) for x in out])


def residue_by_partial_fractions(f):
    """``Res_{u=1} u^-1 f(u) du`` from the polar part at ``u = 1``.

    Writes ``f/u = N / ((u-1)^m D1)`` with ``D1(1) != 0``. The polar part
    is ``A/(u-1)^m`` with ``A = N * D1^{-1} mod (u-1)^m``, the inverse
    coming from the extended Euclidean algorithm. The residue is the
    ``(u-1)^{m-1}`` Taylor coefficient of ``A`` at 1.
    """
    _check_poles(f)
    n, shift = f.num.to_dense()
    d, _ = f.den.to_dense()
    shift -= 1  # divide by u
    if shift >= 0:
        n = [Fraction(0)] * shift + n
    else:
        d = [Fraction(0)] * (-shift) + d
    m = 0
    root = [Fraction(-1), Fraction(1)]
    while len(d) > 1:
        q, r = dense_divmod(d, root)
        if r:
            break
        d = q
        m += 1
    if m == 0:
        return Fraction(0)
    modulus = _dense_pow(root, m)
    g, inv, _ = _ext_euclid(d, modulus)
    assert g == [Fraction(1)]
    _, a = dense_divmod(dense_mul(n, inv), modulus)
    taylor = taylor_shift(a, Fraction(1))
    return taylor[m - 1] if m - 1 < len(taylor) else Fraction(0)


def residue_at_one(f):
    """Residue at ``u = 1`` of ``u^-1 f(u) du``, cross-checked by two methods."""
    r1 = residue_by_expansions(f)
    r2 = residue_by_partial_fractions(f)
    if r1 != r2:
        raise ArithmeticError(f"residue methods disagree on {f}: {r1} != {r2}")
    return r1


def regular_at_one(f):
    return f.regular_at_one()


def eval_at(f, q0):
    return f.eval_at(q0)
