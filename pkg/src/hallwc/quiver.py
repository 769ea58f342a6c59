"""Quivers, Euler forms, slope stability and Harder-Narasimhan types."""
import json
from dataclasses import dataclass, field
from functools import lru_cache
from graphlib import CycleError, TopologicalSorter
from itertools import product as iproduct

from .errors import DimMismatch, ParseError, ZeroDenominator
from .exactalg import LaurentPoly, RatFunc


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple  # (source index, target index) pairs, with multiplicity

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        n = len(self.vertices)
        arrows = []
        for a in self.arrows:
            s, t = (self._index(x) for x in a)
            arrows.append((s, t))
        object.__setattr__(self, "arrows", tuple(arrows))
        if any(not (0 <= s < n and 0 <= t < n) for s, t in self.arrows):
            raise ValueError("arrow endpoint is not a vertex")

    def _index(self, x):
        if x in self.vertices:
            return self.vertices.index(x)
        raise ValueError(f"unknown vertex {x!r}")

    @property
    def nverts(self):
        return len(self.vertices)

    def is_acyclic(self):
        graph = {v: set() for v in range(self.nverts)}
        for s, t in self.arrows:
            if s == t:
                return False
            graph[t].add(s)
        try:
            tuple(TopologicalSorter(graph).static_order())
        except CycleError:
            return False
        return True

    def euler_matrix(self):
        n = self.nverts
        m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for s, t in self.arrows:
            m[s][t] -= 1
        return m

    def euler_form(self, d, e):
        """``sum_v d_v e_v - sum_{a: i -> j} d_i e_j``."""
        d, e = self.check_dim(d), self.check_dim(e)
        return sum(x * y for x, y in zip(d, e)) - sum(d[s] * e[t] for s, t in self.arrows)

    def check_dim(self, d):
        d = tuple(d)
        if len(d) != self.nverts:
            raise DimMismatch(f"dimension vector {d} has length {len(d)}, quiver has {self.nverts} vertices")
        return d

    def to_record(self):
        v = self.vertices
        return {"vertices": list(v), "arrows": [[v[s], v[t]] for s, t in self.arrows]}

    @classmethod
    def from_record(cls, rec):
        try:
            return cls(tuple(rec["vertices"]), tuple(tuple(a) for a in rec["arrows"]))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad quiver record: {exc}") from None


def vect():
    return Quiver(("v",), ())


def a2():
    return Quiver((1, 2), ((1, 2),))


def kronecker(m=2):
    return Quiver((1, 2), ((1, 2),) * m)


BUILTIN_QUIVERS = {"vect": vect, "A2": a2, "kronecker2": kronecker}


def load_quiver(name_or_path):
    if name_or_path in BUILTIN_QUIVERS:
        return BUILTIN_QUIVERS[name_or_path]()
    with open(name_or_path, encoding="utf-8") as fh:
        return Quiver.from_record(json.load(fh))


@dataclass(frozen=True)
class SlopeFunction:
    """Slope ``theta.d / kappa.d``, refined lexicographically by optional tiers."""

    theta: tuple
    kappa: tuple = None
    tiers: tuple = field(default=())

    def __post_init__(self):
        theta = tuple(int(x) for x in self.theta)
        kappa = tuple(int(x) for x in self.kappa) if self.kappa is not None else (1,) * len(theta)
        if len(kappa) != len(theta):
            raise DimMismatch("theta and kappa lengths differ")
        if any(k <= 0 for k in kappa):
            raise ZeroDenominator("kappa entries must be positive")
        tiers = tuple(
            (tuple(int(x) for x in t), tuple(int(x) for x in k)) for t, k in (self.tiers or ())
        )
        for t, k in tiers:
            if len(t) != len(theta) or len(k) != len(theta) or any(x <= 0 for x in k):
                raise ZeroDenominator("tier kappa must be positive with matching length")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "kappa", kappa)
        object.__setattr__(self, "tiers", tiers)

    def levels(self):
        return ((self.theta, self.kappa),) + self.tiers

    def compare(self, d, e):
        """Sign of ``slope(d) - slope(e)``."""
        for theta, kappa in self.levels():
            kd = sum(k * x for k, x in zip(kappa, d))
            ke = sum(k * x for k, x in zip(kappa, e))
            if kd <= 0 or ke <= 0:
                raise ZeroDenominator(f"kappa pairing is not positive on {d} or {e}")
            td = sum(t * x for t, x in zip(theta, d))
            te = sum(t * x for t, x in zip(theta, e))
            s = td * ke - te * kd
            if s:
                return 1 if s > 0 else -1
        return 0

    def to_record(self):
        rec = {"theta": list(self.theta), "kappa": list(self.kappa)}
        if self.tiers:
            rec["tiers"] = [{"theta": list(t), "kappa": list(k)} for t, k in self.tiers]
        return rec

    @classmethod
    def from_record(cls, rec):
        tiers = tuple((t["theta"], t.get("kappa", [1] * len(t["theta"]))) for t in rec.get("tiers", ()))
        return cls(tuple(rec["theta"]), tuple(rec["kappa"]) if rec.get("kappa") else None, tiers)


def trivial_stability(n):
    return SlopeFunction((0,) * n)


def slope_cmp(mu, d, e):
    """Return ``'LT'``, ``'EQ'`` or ``'GT'``."""
    return {-1: "LT", 0: "EQ", 1: "GT"}[mu.compare(d, e)]


def parse_dim(text):
    try:
        return tuple(int(x) for x in str(text).split(","))
    except ValueError:
        raise ParseError(f"bad dimension vector {text!r}") from None


@lru_cache(maxsize=None)
def subvectors(alpha):
    """Nonzero vectors componentwise below ``alpha``, in lexicographic order."""
    out = [v for v in iproduct(*(range(a + 1) for a in alpha)) if any(v)]
    return tuple(out)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def enumerate_hn_types(alpha, mu, same_slope_under=None):
    """Ordered decompositions of ``alpha`` with strictly decreasing ``mu``-slope.

    With ``same_slope_under=mu0`` only tuples whose parts all have the
    ``mu0``-slope of ``alpha`` are kept.
    """
    alpha = tuple(alpha)
    if not any(alpha):
        raise ValueError("alpha must be nonzero")
    mu0 = same_slope_under
    out = []

    def ok0(beta):
        return mu0 is None or mu0.compare(beta, alpha) == 0

    def rec(rem, prev, acc):
        for beta in subvectors(rem):
            if prev is not None and mu.compare(beta, prev) >= 0:
                continue
            if not ok0(beta):
                continue
            if beta == rem:
                out.append(tuple(acc + [beta]))
            else:
                rec(_sub(rem, beta), beta, acc + [beta])

    rec(alpha, None, [])
    return out


def fixed_slope_decomps(alpha, mu):
    """Ordered decompositions of ``alpha`` into nonzero parts of slope ``mu(alpha)``."""
    alpha = tuple(alpha)
    out = []

    def rec(rem, acc):
        for beta in subvectors(rem):
            if mu.compare(beta, alpha) != 0:
                continue
            if beta == rem:
                out.append(tuple(acc + [beta]))
            else:
                rec(_sub(rem, beta), acc + [beta])

    rec(alpha, [])
    return out


def poincare_gl(n):
    """``P_q(GL_n) = prod_{i<n} (q^n - q^i)`` as a Laurent polynomial."""
    out = LaurentPoly.constant(1)
    for i in range(n):
        out = out * LaurentPoly({n: 1, i: -1})
    return out


def stack_poincare(Q, d, rigidified=True):
    """Virtual Poincare polynomial of the stack of representations of dimension ``d``."""
    d = Q.check_dim(d)
    if any(x < 0 for x in d):
        raise ValueError("dimension vector must be effective")
    arrows_dim = sum(d[s] * d[t] for s, t in Q.arrows)
    den = LaurentPoly.constant(1)
    for x in d:
        den = den * poincare_gl(x)
    value = RatFunc(LaurentPoly.monomial(arrows_dim), den)
    if rigidified:
        value = value * RatFunc(LaurentPoly({1: 1, 0: -1}))
    return value
