"""GL_n characters, Weyl-integration invariant dimensions and a peeling oracle."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial

from .errors import NonDominant, NotACharacter, ParseError, VarCountMismatch
from .exactalg.parse import ExprParser
from .multilaurent import MultiLaurent, constant_term_of_product, gamma_minus

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class HighestWeight:
    parts: tuple

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise NonDominant(f"weight {self.parts} is not non-increasing")

    @property
    def n(self):
        return len(self.parts)

    def is_weight_zero(self):
        return sum(self.parts) == 0


@dataclass(frozen=True)
class Character:
    """A virtual torus character of GL_n, stored as a Laurent polynomial."""

    poly: MultiLaurent

    @property
    def n(self):
        return self.poly.nvars

    @property
    def weight_zero(self):
        return self.poly.is_weight_zero()

    @classmethod
    def one(cls, n):
        return cls(MultiLaurent.constant(1, n))

    def _wrap(self, other):
        if isinstance(other, Character):
            return other.poly
        if isinstance(other, (int, Fraction)):
            return MultiLaurent.constant(other, self.n)
        return NotImplemented

    def __add__(self, other):
        o = self._wrap(other)
        return NotImplemented if o is NotImplemented else Character(self.poly + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._wrap(other)
        return NotImplemented if o is NotImplemented else Character(self.poly - o)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Character(-self.poly)

    def __mul__(self, other):
        o = self._wrap(other)
        return NotImplemented if o is NotImplemented else Character(self.poly * o)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers of characters are not supported")
        return Character(self.poly**k)

    def __str__(self):
        return str(self.poly)


def _perm_sign(p):
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def alternant(exps):
    """``det(u_i^{exps_j})`` as a Laurent polynomial."""
    n = len(exps)
    terms = {}
    for sigma in permutations(range(n)):
        e = [0] * n
        for j in range(n):
            e[sigma[j]] = exps[j]
        terms[tuple(e)] = terms.get(tuple(e), 0) + _perm_sign(sigma)
    return MultiLaurent(terms, n)


def exact_divide(a, b, max_steps=1_000_000):
    """Quotient of an exact division of Laurent polynomials (lex leading terms)."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    n = a.nvars
    lead_b = max(b.terms)
    cb = Fraction(b.terms[lead_b])
    rem = dict(a.terms)
    quot = {}
    steps = 0
    while rem:
        steps += 1
        if steps > max_steps:
            raise ArithmeticError("division does not terminate; not exact")
        m = max(rem)
        c = Fraction(rem[m]) / cb
        shift = tuple(m[i] - lead_b[i] for i in range(n))
        quot[shift] = c
        for mb, cbb in b.terms.items():
            key = tuple(shift[i] + mb[i] for i in range(n))
            v = rem.get(key, 0) - c * cbb
            if v:
                rem[key] = v
            else:
                rem.pop(key, None)
    return MultiLaurent(quot, n)


@lru_cache(maxsize=None)
def _schur_poly(parts):
    n = len(parts)
    rho = [n - 1 - j for j in range(n)]
    num = alternant([parts[j] + rho[j] for j in range(n)])
    den = alternant(rho)
    return exact_divide(num, den)


def schur_char(weight, n=None):
    """Character of the irreducible GL_n representation with highest weight ``weight``.

    Computed as the bialternant ``det(u_i^{l_j + n - j}) / det(u_i^{n - j})``.
    """
    if not isinstance(weight, HighestWeight):
        weight = HighestWeight(tuple(weight))
    if n is not None and n != weight.n:
        raise VarCountMismatch(f"weight has length {weight.n}, expected {n}")
    if weight.n == 0:
        raise ValueError("empty weight")
    return Character(_schur_poly(weight.parts))


def invariant_dim_ct(chi):
    """Invariant dimension ``(1/n!) [u^0](gamma_minus(n) * chi)``."""
    if not chi.weight_zero:
        log.warning("character is not weight zero; constant-term value may not be a PGL_n invariant count")
    n = chi.n
    return Fraction(constant_term_of_product(gamma_minus(n), chi.poly)) / factorial(n)


def decompose_by_peeling(chi):
    """Multiplicities of irreducibles, peeling off the lex-largest dominant weight."""
    rem = chi.poly
    mults = {}
    while not rem.is_zero():
        top = max(rem.terms)
        c = rem.terms[top]
        if any(a < b for a, b in zip(top, top[1:])):
            raise NotACharacter(f"leading weight {top} is not dominant; input is not symmetric")
        if c < 0:
            raise NotACharacter(f"negative multiplicity {c} for weight {top}")
        if Fraction(c).denominator != 1:
            raise NotACharacter(f"non-integral multiplicity {c} for weight {top}")
        mults[top] = int(c)
        rem = rem - _schur_poly(top).scale(c)
    return mults


def invariant_dim_peel(chi):
    """Multiplicity of the trivial representation, by highest-weight peeling."""
    return decompose_by_peeling(chi).get((0,) * chi.n, 0)


def parse_weight(text):
    try:
        parts = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ParseError(f"bad weight {text!r}; expected comma-separated integers") from None
    return HighestWeight(parts)


def parse_character(text, n=None):
    """Parse a Schur-word expression such as ``s[1,-1]^2 - 2*s[0,0]``."""
    state = {"n": n}

    def make_atom(name, args, pos):
        if name != "s" or args is None:
            raise ParseError(f"unknown symbol {name!r}", pos)
        if state["n"] is None:
            state["n"] = len(args)
        elif len(args) != state["n"]:
            raise ParseError(f"weight {args} has length {len(args)}, expected {state['n']}", pos)
        try:
            return schur_char(HighestWeight(tuple(args)))
        except NonDominant as exc:
            raise ParseError(str(exc), pos) from None

    value = ExprParser(text, lambda k: k, make_atom).parse()
    if isinstance(value, int):
        if state["n"] is None:
            raise ParseError("cannot infer the rank from a constant; pass n", 0)
        value = Character.one(state["n"]) * value
    return value


def weight_zero_dominant_weights(n, lo, hi):
    """All non-increasing weights of length ``n`` with entries in ``[lo, hi]`` and sum 0."""
    out = []

    def rec(prefix, top):
        if len(prefix) == n:
            if sum(prefix) == 0:
                out.append(tuple(prefix))
            return
        for a in range(top, lo - 1, -1):
            rec(prefix + [a], a)

    rec([], hi)
    return out
