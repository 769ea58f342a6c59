"""Reduced univariate rational functions over the rationals."""
from fractions import Fraction

from ..errors import DivisionByZero, ParseError, PoleAtPoint
from .laurent import (
    LaurentPoly,
    as_fraction,
    dense_divmod,
    dense_eval,
    dense_gcd,
    render_laurent,
)
from .parse import ExprParser


class RatFunc:
    """A rational function ``num/den`` in canonical form.

    ``den`` is an ordinary monic polynomial with nonzero constant term; every
    power of the variable lives in ``num``, which may carry negative
    exponents. With ``gcd(num, den) = 1`` this makes the representation
    unique, so equality is a comparison of coefficient maps.
    """

    __slots__ = ("num", "den", "var", "_hash")

    def __init__(self, num, den=None, var=None, _canonical=False):
        if not isinstance(num, LaurentPoly):
            num = LaurentPoly.constant(num, var or "q")
        var = var or num.var
        if den is None:
            den = LaurentPoly.constant(1, var)
        elif not isinstance(den, LaurentPoly):
            den = LaurentPoly.constant(den, var)
        self.var = var
        self._hash = None
        if _canonical:
            self.num, self.den = num, den
            return
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if num.is_zero():
            self.num = LaurentPoly({}, var)
            self.den = LaurentPoly.constant(1, var)
            return
        n, a = num.to_dense()
        d, b = den.to_dense()
        g = dense_gcd(n, d)
        if len(g) > 1:
            n, _ = dense_divmod(n, g)
            d, _ = dense_divmod(d, g)
        lead = d[-1]
        if lead != 1:
            n = [c / lead for c in n]
            d = [c / lead for c in d]
        self.num = LaurentPoly.from_dense(n, a - b, var)
        self.den = LaurentPoly.from_dense(d, 0, var)

    # -- constructors -------------------------------------------------------
    @classmethod
    def constant(cls, c, var="q"):
        return cls(LaurentPoly.constant(c, var), var=var)

    @classmethod
    def gen(cls, var="q"):
        return cls(LaurentPoly.monomial(1, 1, var), var=var)

    @classmethod
    def monomial(cls, k, c=1, var="q"):
        return cls(LaurentPoly.monomial(k, c, var), var=var)

    # -- queries -------------------------------------------------------------
    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_laurent(self):
        return self.den.is_constant()

    def regular_at(self, x0):
        d, _ = self.den.to_dense()
        return dense_eval(d, as_fraction(x0)) != 0

    def regular_at_one(self):
        return self.regular_at(1)

    def eval_at(self, x0):
        x0 = as_fraction(x0)
        d, _ = self.den.to_dense()
        dv = dense_eval(d, x0)
        if dv == 0:
            raise PoleAtPoint(f"pole at {x0}")
        if x0 == 0 and self.num.terms and self.num.valuation() < 0:
            raise PoleAtPoint("pole at 0")
        return self.num(x0) / dv

    def poles_within(self, points):
        """True if every root of the denominator (and 0, if needed) lies in ``points``."""
        points = [as_fraction(p) for p in points]
        d, _ = self.den.to_dense()
        for p in points:
            if p == 0:
                continue
            while len(d) > 1 and dense_eval(d, p) == 0:
                d, _ = dense_divmod(d, [-p, Fraction(1)])
        if len(d) > 1:
            return False
        if self.num.terms and self.num.valuation() < 0 and Fraction(0) not in points:
            return False
        return True

    # -- arithmetic ----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, LaurentPoly):
            return RatFunc(other, var=self.var)
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(other, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den, self.var)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den, self.var)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, self.var, _canonical=True)

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
        if self.is_zero() or other.is_zero():
            return RatFunc.constant(0, self.var)
        if other.den.is_constant() and len(other.num.terms) == 1:
            (k, c), = other.num.terms.items()
            return RatFunc(self.num.shift(k).scale(c), self.den, self.var, _canonical=True)
        return RatFunc(self.num * other.num, self.den * other.den, self.var)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero rational function")
        return RatFunc(self.den, self.num, self.var)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.num**n, self.den**n, self.var, _canonical=True)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RatFunc({render_ratfunc(self)!r})"

    def __str__(self):
        return render_ratfunc(self)

    # -- serialization ------------------------------------------------------
    def to_record(self):
        def triples(p):
            return [[k, p.terms[k].numerator, p.terms[k].denominator] for k in sorted(p.terms)]

        return {"num": triples(self.num), "den": triples(self.den)}

    @classmethod
    def from_record(cls, rec, var="q"):
        def poly(ts):
            return LaurentPoly({k: Fraction(a, b) for k, a, b in ts}, var)

        return cls(poly(rec["num"]), poly(rec["den"]), var)


def render_ratfunc(f):
    num = render_laurent(f.num)
    if f.den.is_constant():
        return num
    if len(f.num.terms) > 1:
        num = f"({num})"
    return f"{num}/({render_laurent(f.den)})"


def rf_arith(a, b, op):
    """Binary operation on rational functions; ``op`` in add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return a / b
    raise ValueError(f"unknown op {op!r}")


def parse_ratfunc(text, var="q"):
    """Parse an ASCII expression in one variable into a :class:`RatFunc`.

    Either ``q`` or ``u`` is accepted as the variable name; the result is
    tagged with the name that appears (or ``var`` for constants).
    """
    seen = set()

    def make_atom(name, args, pos):
        if args is not None or name not in ("q", "u"):
            raise ParseError(f"unknown symbol {name!r}", pos)
        seen.add(name)
        if len(seen) > 1:
            raise ParseError("mixed variables q and u", pos)
        return RatFunc.gen(name)

    value = ExprParser(text, lambda n: RatFunc.constant(n, var), make_atom).parse()
    out_var = seen.pop() if seen else var
    return RatFunc(LaurentPoly(value.num.terms, out_var), LaurentPoly(value.den.terms, out_var),
                   out_var, _canonical=True)
