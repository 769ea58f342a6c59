"""Sparse univariate Laurent polynomials over the rationals.

Dense helpers (lists of Fractions, lowest degree first) are used internally
for division and gcd; the public type is the sparse :class:`LaurentPoly`.
"""
from fractions import Fraction
from numbers import Rational

from ..errors import DivisionByZero


def as_fraction(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class LaurentPoly:
    """Immutable sparse Laurent polynomial ``sum c_k * var^k``."""

    __slots__ = ("terms", "var", "_hash")

    def __init__(self, terms=None, var="q"):
        clean = {}
        if terms:
            for k, c in dict(terms).items():
                c = as_fraction(c)
                if c:
                    clean[int(k)] = c
        self.terms = clean
        self.var = var
        self._hash = None

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c, var="q"):
        return cls({0: c}, var)

    @classmethod
    def monomial(cls, k, c=1, var="q"):
        return cls({k: c}, var)

    @classmethod
    def from_dense(cls, coeffs, shift=0, var="q"):
        return cls({i + shift: c for i, c in enumerate(coeffs) if c}, var)

    # -- basic queries -------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def valuation(self):
        if not self.terms:
            raise ValueError("valuation of zero polynomial")
        return min(self.terms)

    def degree(self):
        if not self.terms:
            raise ValueError("degree of zero polynomial")
        return max(self.terms)

    def leading_coefficient(self):
        return self.terms[self.degree()]

    def coeff(self, k):
        return self.terms.get(k, Fraction(0))

    def is_polynomial(self):
        return not self.terms or self.valuation() >= 0

    def is_constant(self):
        return not self.terms or set(self.terms) == {0}

    def to_dense(self):
        """Return ``(coeffs, shift)`` with ``self = var^shift * sum coeffs[i] var^i``."""
        if not self.terms:
            return [], 0
        lo, hi = self.valuation(), self.degree()
        out = [Fraction(0)] * (hi - lo + 1)
        for k, c in self.terms.items():
            out[k - lo] = c
        return out, lo

    def shift(self, k):
        return LaurentPoly({e + k: c for e, c in self.terms.items()}, self.var)

    def __call__(self, x):
        x = as_fraction(x)
        if x == 0 and self.terms and self.valuation() < 0:
            raise DivisionByZero("negative power evaluated at zero")
        return sum((c * x**k for k, c in self.terms.items()), Fraction(0))

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self.terms) != 1:
                raise ValueError("negative power of a non-monomial Laurent polynomial")
            (k, c), = self.terms.items()
            return LaurentPoly({k * n: c**n}, self.var)
        result = LaurentPoly.constant(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        c = as_fraction(c)
        return LaurentPoly({k: c * v for k, v in self.terms.items()}, self.var)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.var)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly({render_laurent(self)!r})"

    def __str__(self):
        return render_laurent(self)


def render_laurent(p, var=None):
    """Render in the ASCII grammar accepted by :func:`hallwc.exactalg.parse_ratfunc`."""
    var = var or p.var
    if not p.terms:
        return "0"
    pieces = []
    for k in sorted(p.terms, reverse=True):
        c = p.terms[k]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        pieces.append((sign, body))
    first_sign, first = pieces[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


# -- dense polynomial helpers (lowest degree first, no trailing zeros) --------

def dense_trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def dense_divmod(a, b):
    a = dense_trim(a)
    b = dense_trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if len(a) < len(b):
        return [], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = [Fraction(x) for x in a]
    lead = b[-1]
    for i in range(len(q) - 1, -1, -1):
        c = r[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                r[i + j] -= c * bj
    return dense_trim(q), dense_trim(r[: len(b) - 1])


def dense_monic(a):
    a = dense_trim(a)
    if not a:
        return a
    lead = a[-1]
    return [Fraction(x) / lead for x in a]


def dense_gcd(a, b):
    a = dense_trim(a)
    b = dense_trim(b)
    while b:
        _, r = dense_divmod(a, b)
        a, b = b, r
    return dense_monic(a)


def dense_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return dense_trim(out)


def dense_eval(a, x):
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def taylor_shift(a, h):
    """Coefficients of ``a(x + h)`` (Horner scheme on polynomials)."""
    out = []
    for c in reversed(dense_trim(a)):
        # out = out * (x + h) + c
        new = [Fraction(0)] * (len(out) + 1)
        for i, v in enumerate(out):
            new[i + 1] += v
            new[i] += h * v
        new[0] += c
        out = new
    return dense_trim(out)
