"""Wall-crossing coefficients by composing substitutions in a free algebra.

Letters are dimension vectors. A substitution maps each letter ``x_b`` to a
combination of words of multidegree ``b``. Composing the dominant
wall-crossing substitutions along a path of stabilities yields the ``S``
table; conjugating it by exp/log yields ``U``. ``U~`` rewrites ``U`` in
left-nested commutators.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import comb, factorial

from .errors import DegreeOverflow, NotLieElement
from .quiver import SlopeFunction, enumerate_hn_types, fixed_slope_decomps, subvectors
from .torus import check_numerical_dominance

MAX_BOUND_TOTAL = 6


class FreeElem:
    """Rational linear combination of words (tuples of dimension vectors)."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {tuple(map(tuple, w)): Fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def word(cls, letters, c=1):
        return cls({tuple(map(tuple, letters)): c})

    @classmethod
    def letter(cls, beta):
        return cls.word((tuple(beta),))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return FreeElem._raw(out)

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def __neg__(self):
        return FreeElem._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return FreeElem()
        return FreeElem._raw({w: v * c for w, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return FreeElem({w: c for w, c in out.items() if c})

    __rmul__ = scale

    def __eq__(self, other):
        if not isinstance(other, FreeElem):
            return NotImplemented
        return self.terms == other.terms

    def is_zero(self):
        return not self.terms

    def multidegrees(self):
        return {tuple(map(sum, zip(*w))) for w in self.terms}

    def __repr__(self):
        return f"FreeElem({render_free(self)})"


def _letter_str(b):
    return "x(" + ",".join(map(str, b)) + ")"


def render_free(e):
    if not e.terms:
        return "0"
    return " + ".join(f"{c}*" + "".join(_letter_str(b) for b in w) for w, c in sorted(e.terms.items()))


def commutator(a, b):
    return a * b - b * a


def nested_commutator(letters):
    """Left-nested ``[[..[x_1, x_2], ..], x_n]``."""
    out = FreeElem.letter(letters[0])
    for b in letters[1:]:
        out = commutator(out, FreeElem.letter(b))
    return out


# -- substitutions -----------------------------------------------------------------

def apply_substitution(elem, sub):
    """Algebra map sending each letter ``b`` to ``sub[b]`` (letters missing from ``sub`` are fixed)."""
    out = FreeElem()
    cache = {}
    for w, c in elem.terms.items():
        term = FreeElem.word((), c)
        for b in w:
            img = sub.get(b)
            if img is None:
                img = cache.setdefault(b, FreeElem.letter(b))
            term = term * img
        out = out + term
    return out


def compose(inner, outer):
    """``outer`` after ``inner``: letters in ``outer`` images are replaced by ``inner`` images."""
    return {b: apply_substitution(img, inner) for b, img in outer.items()}


def identity_substitution(bound):
    return {b: FreeElem.letter(b) for b in subvectors(tuple(bound))}


def invert_substitution(sub):
    """Inverse of a unitriangular substitution ``x_b -> x_b + (words in smaller letters)``."""
    inv = {}
    for b in sorted(sub, key=lambda v: (sum(v), v)):
        img = sub[b]
        if img.terms.get((b,)) != 1:
            raise ValueError(f"substitution is not unitriangular at {b}")
        rest = FreeElem._raw({w: c for w, c in img.terms.items() if w != (b,)})
        inv[b] = FreeElem.letter(b) - apply_substitution(rest, inv)
    return inv


def _check_bound(bound):
    bound = tuple(bound)
    if sum(bound) > MAX_BOUND_TOTAL:
        raise DegreeOverflow(f"bound {bound} exceeds total degree {MAX_BOUND_TOTAL}")
    return bound


@dataclass(frozen=True)
class HopSpec:
    """One dominant wall-crossing step between ``side`` and ``wall`` stabilities.

    ``direction='to_wall'`` expresses wall invariants through side ones;
    ``'from_wall'`` is the inverse step.
    """

    wall: SlopeFunction
    side: SlopeFunction
    direction: str = "to_wall"

    def __post_init__(self):
        if self.direction not in ("to_wall", "from_wall"):
            raise ValueError(f"unknown hop direction {self.direction!r}")

    @property
    def source(self):
        return self.side if self.direction == "to_wall" else self.wall

    @property
    def target(self):
        return self.wall if self.direction == "to_wall" else self.side

    @classmethod
    def from_record(cls, rec):
        return cls(
            SlopeFunction.from_record(rec["wall"]),
            SlopeFunction.from_record(rec["side"]),
            rec.get("direction", "to_wall"),
        )

    def to_record(self):
        return {"wall": self.wall.to_record(), "side": self.side.to_record(), "direction": self.direction}


def hop_substitution(hop, bound):
    """``x_b -> sum over HN_b(side/wall) of x_{b_1} .. x_{b_k}`` for every ``b <= bound``."""
    bound = _check_bound(bound)
    sub = {}
    for b in subvectors(bound):
        check_numerical_dominance(hop.wall, hop.side, b)
        img = FreeElem()
        for parts in enumerate_hn_types(b, hop.side, same_slope_under=hop.wall):
            img = img + FreeElem.word(parts)
        sub[b] = img
    if hop.direction == "from_wall":
        sub = invert_substitution(sub)
    return sub


def compose_hops(hops, bound):
    """Substitution expressing final-stability deltas through start-stability deltas."""
    bound = _check_bound(bound)
    total = identity_substitution(bound)
    for hop in hops:
        total = compose(total, hop_substitution(hop, bound))
    return total


def table_from_substitution(sub):
    """Coefficient table keyed by word; a word determines its multidegree."""
    out = {}
    for b in sorted(sub, key=lambda v: (sum(v), v)):
        for w, c in sub[b].terms.items():
            out[w] = c
    return out


# -- exp / log conjugation -------------------------------------------------------------

def exp_substitution(mu, bound):
    """``x_b -> sum_k 1/k! sum over mu-equal-slope decompositions of words``."""
    return {
        b: FreeElem({parts: Fraction(1, factorial(len(parts))) for parts in fixed_slope_decomps(b, mu)})
        for b in subvectors(tuple(bound))
    }


def log_substitution(mu, bound):
    return {
        b: FreeElem(
            {parts: Fraction((-1) ** (len(parts) - 1), len(parts)) for parts in fixed_slope_decomps(b, mu)}
        )
        for b in subvectors(tuple(bound))
    }


def u_from_s(s_sub, start, final, bound):
    """Epsilon transform ``log_final o S o exp_start``."""
    return compose(compose(exp_substitution(start, bound), s_sub), log_substitution(final, bound))


def s_from_u(u_sub, start, final, bound):
    """Inverse construction ``exp_final o U o log_start``."""
    return compose(compose(log_substitution(start, bound), u_sub), exp_substitution(final, bound))


def _solve_first(columns, target):
    """Solve ``sum x_j columns[j] = target`` over the rationals.

    Columns are FreeElems; pivots are taken in column order and free
    variables are set to zero. Returns ``(solution, n_free)`` or raises
    :class:`NotLieElement` if the system is inconsistent.
    """
    rows = sorted({w for col in columns for w in col.terms} | set(target.terms))
    index = {w: i for i, w in enumerate(rows)}
    ncol = len(columns)
    mat = [[Fraction(0)] * (ncol + 1) for _ in rows]
    for j, col in enumerate(columns):
        for w, c in col.terms.items():
            mat[index[w]][j] = c
    for w, c in target.terms.items():
        mat[index[w]][ncol] = c
    pivots = []
    r = 0
    for j in range(ncol):
        piv = next((i for i in range(r, len(rows)) if mat[i][j]), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][j]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(rows)):
            if i != r and mat[i][j]:
                f = mat[i][j]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(j)
        r += 1
    for i in range(r, len(rows)):
        if mat[i][ncol]:
            raise NotLieElement("target is not in the span of nested commutators")
    sol = [Fraction(0)] * ncol
    for i, j in enumerate(pivots):
        sol[j] = mat[i][ncol]
    return sol, ncol - len(pivots)


def _multiset_key(word):
    return tuple(sorted(word))


def utilde_from_u(u_sub):
    """Express each ``U`` image in left-nested commutators.

    Works per multiset of letters: a nested commutator of a tuple only
    involves permutations of that tuple. Candidate tuples are tried in
    decreasing lexicographic order and the first solution is returned.
    Returns ``(table, nonunique)``, where ``nonunique`` lists the letter
    multisets whose solution space has positive dimension.
    """
    table = {}
    nonunique = []
    for b in sorted(u_sub, key=lambda v: (sum(v), v)):
        groups = {}
        for w, c in u_sub[b].terms.items():
            groups.setdefault(_multiset_key(w), {})[w] = c
        for key in sorted(groups):
            target = FreeElem(groups[key])
            cands = sorted(set(permutations(key)), reverse=True)
            cols = [nested_commutator(t) for t in cands]
            sol, nfree = _solve_first(cols, target)
            if nfree:
                nonunique.append(key)
            for t, c in zip(cands, sol):
                if c:
                    table[t] = c
    return table, nonunique


def expand_utilde(table, b=None):
    """Re-expand a ``U~`` table (optionally only multidegree ``b``) into words."""
    out = FreeElem()
    for t, c in table.items():
        if b is not None and tuple(map(sum, zip(*t))) != tuple(b):
            continue
        out = out + nested_commutator(t).scale(c)
    return out


@dataclass
class CoeffTables:
    S: dict
    U: dict
    Utilde: dict
    bound: tuple
    nonunique: list = field(default_factory=list)

    def to_record(self):
        def rows(tab):
            return [
                {"tuple": [list(b) for b in w], "value": _frac_str(tab[w])}
                for w in sorted(tab, key=lambda w: (sum(map(sum, w)), len(w), w))
            ]

        return {
            "bound": list(self.bound),
            "S": rows(self.S),
            "U": rows(self.U),
            "Utilde": rows(self.Utilde),
            "Utilde_nonunique": [[list(b) for b in k] for k in self.nonunique],
        }


def _frac_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def path_endpoints(hops):
    if not hops:
        raise ValueError("empty path")
    return hops[0].source, hops[-1].target


def coefficient_tables(hops, bound):
    bound = _check_bound(bound)
    start, final = path_endpoints(hops)
    s_sub = compose_hops(hops, bound)
    u_sub = u_from_s(s_sub, start, final, bound)
    ut, nonunique = utilde_from_u(u_sub)
    return CoeffTables(
        table_from_substitution(s_sub), table_from_substitution(u_sub), ut, bound, nonunique
    )


def nontrivial(table):
    """Entries other than the single-letter identity terms."""
    return {w: c for w, c in table.items() if len(w) > 1}


# -- combinatorial identities ---------------------------------------------------------------

def step4_lhs(lams):
    n = len(lams)
    total = Fraction(0)
    for p in range(1, n + 1):
        inner = Fraction(0)
        for k in range(p, n + 1):
            l = n - k
            inner += Fraction((-1) ** (k - p), factorial(k) * factorial(l)) * comb(k - 1, p - 1)
        total += lams[p - 1] * inner
    return total


def js_step4_identity(n, lams):
    """``sum_p l_p sum_{k >= p, k + l = n} (-1)^(k-p)/(k! l!) C(k-1, p-1) == sum(l)/n!``."""
    lams = list(lams)
    if len(lams) != n or n < 1:
        raise ValueError("need n >= 1 weights")
    return step4_lhs(lams) == Fraction(sum(lams), factorial(n))


def js_bracket_expansion_check(n):
    """Nested brackets weighted by the first letter equal the p-sum word expansion.

    The word expansion carries the weight ``(-1)^(n-p) C(n-1, p-1) / n!`` on
    ``l_p``; with ``literal=True`` the binomial is dropped, which only
    agrees for ``n <= 2``. Both sides are linear in symbolic weights
    ``l_1..l_n``, so the check runs weight by weight over distinct letters.
    """
    return _bracket_expansion_check(n, literal=False)


def _bracket_expansion_check(n, literal):
    if not 1 <= n <= 5:
        raise ValueError("n must be in 1..5")
    letters = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    sign = Fraction((-1) ** (n - 1), factorial(n))
    lhs = {i: FreeElem() for i in range(n)}
    rhs = {i: FreeElem() for i in range(n)}
    for order in permutations(range(n)):
        word = [letters[i] for i in order]
        lhs[order[0]] = lhs[order[0]] + nested_commutator(word).scale(sign)
        for p in range(1, n + 1):
            c = Fraction((-1) ** (n - p), factorial(n))
            if not literal:
                c *= comb(n - 1, p - 1)
            rhs[order[p - 1]] = rhs[order[p - 1]] + FreeElem.word(word, c)
    return all(lhs[i] == rhs[i] for i in range(n))


def js_bracket_expansion_literal(n):
    """Same comparison without the binomial weight."""
    return _bracket_expansion_check(n, literal=True)
