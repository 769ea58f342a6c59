"""Sparse multivariate Laurent polynomials in ``u_1..u_n`` over the rationals."""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import SizeCap, VarCountMismatch

MAX_VARS = 6


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class MultiLaurent:
    """Immutable map from exponent tuples to nonzero rationals."""

    __slots__ = ("terms", "nvars", "_hash")

    def __init__(self, terms, nvars):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        for mono, c in dict(terms).items():
            mono = tuple(mono)
            if len(mono) != nvars:
                raise VarCountMismatch(f"monomial {mono} has length {len(mono)}, expected {nvars}")
            if c:
                clean[mono] = _norm(c)
        self.terms = clean
        self.nvars = nvars
        self._hash = None

    @classmethod
    def _raw(cls, terms, nvars):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.nvars = nvars
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def monomial(cls, exps, c=1):
        exps = tuple(exps)
        return cls({exps: c}, len(exps))

    @classmethod
    def variable(cls, i, nvars, power=1):
        e = [0] * nvars
        e[i] = power
        return cls.monomial(e)

    # -- queries -------------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, exps):
        return self.terms.get(tuple(exps), 0)

    def total_degrees(self):
        return {sum(m) for m in self.terms}

    def is_weight_zero(self):
        return all(sum(m) == 0 for m in self.terms)

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return MultiLaurent.constant(other, self.nvars)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        if other.nvars != self.nvars:
            raise VarCountMismatch(f"{self.nvars} vs {other.nvars} variables")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = _norm(v)
            else:
                out.pop(m, None)
        return MultiLaurent._raw(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return MultiLaurent._raw({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        out = {}
        n = self.nvars
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(m1[i] + m2[i] for i in range(n))
                out[m] = out.get(m, 0) + c1 * c2
        return MultiLaurent({m: c for m, c in out.items() if c}, n)

    __rmul__ = __mul__

    def scale(self, c):
        if not c:
            return MultiLaurent._raw({}, self.nvars)
        return MultiLaurent._raw({m: _norm(v * c) for m, v in self.terms.items()}, self.nvars)

    def __pow__(self, k):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials can be inverted")
            (m, c), = self.terms.items()
            return MultiLaurent.monomial(tuple(e * k for e in m), Fraction(1) / Fraction(c) ** (-k))
        result = MultiLaurent.constant(1, self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MultiLaurent.constant(other, self.nvars)
        if not isinstance(other, MultiLaurent):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def permute(self, perm):
        """Rename variable ``i`` to ``perm[i]``."""
        n = self.nvars
        out = {}
        for m, c in self.terms.items():
            e = [0] * n
            for i, k in enumerate(m):
                e[perm[i]] = k
            out[tuple(e)] = c
        return MultiLaurent._raw(out, n)

    def dual(self):
        """Substitute ``u_i -> 1/u_i``."""
        return MultiLaurent._raw({tuple(-k for k in m): c for m, c in self.terms.items()}, self.nvars)

    def __repr__(self):
        return f"MultiLaurent({render_multi(self)!r})"

    def __str__(self):
        return render_multi(self)

    def to_record(self):
        return [[list(m), _rational_str(self.terms[m])] for m in sorted(self.terms)]


def _rational_str(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_multi(p):
    if not p.terms:
        return "0"
    parts = []
    for m in sorted(p.terms, reverse=True):
        c = Fraction(p.terms[m])
        mono = "*".join(
            f"u{i + 1}" if k == 1 else f"u{i + 1}^{k}" for i, k in enumerate(m) if k
        )
        a = abs(c)
        if not mono:
            body = _rational_str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_rational_str(a)}*{mono}"
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for s, b in parts[1:]:
        out += f" {s} {b}"
    return out


def ml_arith(a, b, op):
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def constant_term(p):
    """Coefficient of the all-zero exponent vector."""
    return p.terms.get((0,) * p.nvars, 0)


def constant_term_of_product(a, b):
    """``constant_term(a * b)`` without forming the product."""
    if a.nvars != b.nvars:
        raise VarCountMismatch(f"{a.nvars} vs {b.nvars} variables")
    if len(a.terms) > len(b.terms):
        a, b = b, a
    bt = b.terms
    total = 0
    for m, c in a.terms.items():
        d = bt.get(tuple(-k for k in m))
        if d:
            total += c * d
    return _norm(Fraction(total)) if isinstance(total, Fraction) else total


def ratio(i, j, nvars):
    """The monomial ``u_i / u_j`` (0-based indices)."""
    e = [0] * nvars
    e[i] += 1
    e[j] -= 1
    return tuple(e)


@lru_cache(maxsize=None)
def gamma_minus(n):
    """Expanded ``prod_{i != j} (1 - u_i/u_j)`` in ``n`` variables."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_VARS:
        raise SizeCap(f"gamma_minus capped at n <= {MAX_VARS}")
    result = MultiLaurent.constant(1, n)
    for i in range(n):
        for j in range(n):
            if i != j:
                factor = MultiLaurent({(0,) * n: 1, ratio(i, j, n): -1}, n)
                result = result * factor
    return result


# -- lambda operations on virtual sums of line characters ---------------------

@dataclass(frozen=True)
class VirtualLineSum:
    """A K-theory class ``sum sign_i * L_i`` of monomial line characters."""

    lines: tuple  # of (exponent tuple, sign)
    nvars: int

    def __post_init__(self):
        for m, s in self.lines:
            if len(m) != self.nvars:
                raise VarCountMismatch("line character has wrong length")
            if s not in (1, -1):
                raise ValueError("signs must be +1 or -1")

    @property
    def rank(self):
        return sum(s for _, s in self.lines)

    def dual(self):
        return VirtualLineSum(tuple((tuple(-k for k in m), s) for m, s in self.lines), self.nvars)

    def det(self):
        e = [0] * self.nvars
        for m, s in self.lines:
            for i, k in enumerate(m):
                e[i] += s * k
        return MultiLaurent.monomial(e)

    def character(self):
        out = MultiLaurent({}, self.nvars)
        for m, s in self.lines:
            out = out + MultiLaurent.monomial(m, s)
        return out


def _series_mul(a, b, order):
    n = a[0].nvars
    out = [MultiLaurent({}, n) for _ in range(order + 1)]
    for i, x in enumerate(a):
        if i > order or x.is_zero():
            continue
        for j, y in enumerate(b):
            if i + j > order:
                break
            if not y.is_zero():
                out[i + j] = out[i + j] + x * y
    return out


def _line_factor(m, sign, order, nvars, coeff_sign=-1):
    """Series of ``(1 + coeff_sign * t * m)^sign`` in t up to ``order``."""
    one = MultiLaurent.constant(1, nvars)
    mono = MultiLaurent.monomial(m)
    if sign == 1:
        return [one, mono.scale(coeff_sign)]
    # geometric series of (1 + c t m)^-1 = sum (-c)^k t^k m^k
    out = [one]
    power = one
    for _ in range(order):
        power = power * mono.scale(-coeff_sign)
        out.append(power)
    return out


def _trim(series):
    while len(series) > 1 and series[-1].is_zero():
        series.pop()
    return series


def lambda_series(v, direction, order=16):
    """Coefficients of ``Lambda_{-t}(v) = prod (1 - t m)^sign``.

    ``t_zero``: entry ``k`` is the coefficient of ``t^k``.
    ``t_infinity``: the expansion in ``1/t`` of
    ``(-t)^rk Lambda_{-1/t}(v^dual) det(v)``; entry ``k`` is the
    coefficient of ``t^(rk - k)``.
    Trailing zero entries are dropped when the series terminates.
    """
    n = v.nvars
    series = [MultiLaurent.constant(1, n)]
    if direction == "t_zero":
        for m, s in v.lines:
            series = _series_mul(series, _line_factor(m, s, order, n), order)
        return _trim(series)
    if direction == "t_infinity":
        lead = MultiLaurent.constant(1, n)
        for m, s in v.lines:
            # (1 - t m) = (-t m)(1 - t^-1 m^-1)
            lead = lead * (MultiLaurent.monomial(m, -1) ** s)
            inv = tuple(-k for k in m)
            series = _series_mul(series, _line_factor(inv, s, order, n), order)
        return _trim([lead * c for c in series])
    raise ValueError(f"unknown direction {direction!r}")


def lambda_at_minus_one(v):
    """``Lambda_{-1}(v) = prod (1 - m)^sign`` for a class of nonnegative signs only."""
    if any(s < 0 for _, s in v.lines):
        raise ValueError("Lambda_{-1} of a negative line is not a Laurent polynomial")
    series = lambda_series(v, "t_zero", order=len(v.lines))
    out = MultiLaurent({}, v.nvars)
    for c in series:
        out = out + c
    return out


# -- block tori ------------------------------------------------------------------

def block_embed(p, offsets, nvars):
    """Move variable ``i`` of ``p`` to position ``offsets[i]`` of an ``nvars`` torus.

    ``offsets`` may also be a single integer, meaning a contiguous block.
    """
    if isinstance(offsets, int):
        offsets = list(range(offsets, offsets + p.nvars))
    offsets = list(offsets)
    if len(offsets) != p.nvars or len(set(offsets)) != len(offsets):
        raise VarCountMismatch("offsets must name distinct target variables, one per source")
    if any(not 0 <= k < nvars for k in offsets):
        raise VarCountMismatch("offset outside the target torus")
    out = {}
    for m, c in p.terms.items():
        e = [0] * nvars
        for i, k in enumerate(m):
            e[offsets[i]] = k
        out[tuple(e)] = c
    return MultiLaurent._raw(out, nvars)


def is_symmetric(p, block_sizes):
    """Invariance under permutations of variables inside each block."""
    if sum(block_sizes) != p.nvars:
        raise VarCountMismatch("block sizes must add up to the number of variables")
    start = 0
    for size in block_sizes:
        for i in range(start, start + size - 1):
            perm = list(range(p.nvars))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            if p.permute(perm) != p:
                return False
        start += size
    return True

