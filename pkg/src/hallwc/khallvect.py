"""K-Hall functionals on the stacks of vector spaces, evaluated on characters.

For ``Vect`` the K-theoretic invariant ``delta_n`` sends a PGL_n
representation to the dimension of its invariants. A product
``delta_{n_1} * ... * delta_{n_k}`` evaluated on a character of GL_N,
``N = sum n_a``, is a constant term against the full density
``prod_{i != j <= N} (1 - u_i/u_j)`` divided by ``prod n_a!``.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod

from .errors import SizeCap, VarCountMismatch
from .multilaurent import (
    MultiLaurent,
    VirtualLineSum,
    block_embed,
    constant_term,
    constant_term_of_product,
    gamma_minus,
    lambda_at_minus_one,
    ratio,
)
from .repchar import invariant_dim_ct

MAX_RANK = 5


@dataclass(frozen=True)
class BlockProfile:
    sizes: tuple

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(s) for s in self.sizes))
        if not self.sizes or any(s < 1 for s in self.sizes):
            raise ValueError("block sizes must be a nonempty list of positive integers")

    @property
    def total(self):
        return sum(self.sizes)

    def ranges(self):
        out, start = [], 0
        for s in self.sizes:
            out.append(range(start, start + s))
            start += s
        return out


@dataclass(frozen=True)
class VectFunctionalResult:
    value: Fraction
    profile: BlockProfile
    total_rank: int


def compositions(n):
    """Ordered tuples of positive integers summing to ``n``."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


def _check_char(chi, n):
    if chi.n != n:
        raise VarCountMismatch(f"character has {chi.n} variables, expected {n}")
    if n > MAX_RANK:
        raise SizeCap(f"total rank {n} exceeds cap {MAX_RANK}")


def delta_eval(n, chi):
    """``delta_n(chi)``: the dimension of the PGL_n-invariant part."""
    _check_char(chi, n)
    return invariant_dim_ct(chi)


def khall_product_eval(blocks, chi):
    """``(delta_{n_1} * ... * delta_{n_k})(chi)`` via the collapsed density."""
    if not isinstance(blocks, BlockProfile):
        blocks = BlockProfile(tuple(blocks))
    n = blocks.total
    _check_char(chi, n)
    ct = constant_term_of_product(gamma_minus(n), chi.poly)
    return Fraction(ct) / prod(factorial(s) for s in blocks.sizes)


def khall_product_result(blocks, chi):
    if not isinstance(blocks, BlockProfile):
        blocks = BlockProfile(tuple(blocks))
    return VectFunctionalResult(khall_product_eval(blocks, chi), blocks, blocks.total)


def epsilon_eval(n, chi):
    """``epsilon_n(chi) = sum_k (-1)^(k-1)/k sum_{n_1+..+n_k=n} (delta_{n_1}*..*delta_{n_k})(chi)``."""
    _check_char(chi, n)
    total = Fraction(0)
    for comp in compositions(n):
        k = len(comp)
        total += Fraction((-1) ** (k - 1), k) * khall_product_eval(comp, chi)
    return total


# -- block-by-block oracle ---------------------------------------------------------

def cross_density(groups, nvars):
    """The cross-block factor ``Lambda_{-1}(Ext_< + Ext_>^dual) (det Ext_<)^-1 (-1)^rk``.

    ``groups`` is an ordered list of disjoint variable index sets. For
    variables ``i`` in an earlier group and ``j`` in a later one the class
    ``Ext_<`` contains the line ``u_j/u_i``; ``Ext_>`` contains ``u_i/u_j``
    for the reversed order.
    """
    lines = []
    det = [0] * nvars
    rank = 0
    for a, ga in enumerate(groups):
        for b, gb in enumerate(groups):
            if a == b:
                continue
            for i in ga:
                for j in gb:
                    if a < b:
                        # Ext_< line u_j/u_i
                        lines.append((ratio(j, i, nvars), 1))
                        det[j] += 1
                        det[i] -= 1
                        rank += 1
                    else:
                        # Ext_> line u_j/u_i, dualised to u_i/u_j
                        lines.append((ratio(i, j, nvars), 1))
    lam = lambda_at_minus_one(VirtualLineSum(tuple(lines), nvars))
    inv_det = MultiLaurent.monomial(tuple(-d for d in det), (-1) ** rank)
    return lam * inv_det


def block_density(blocks):
    """Per-block Weyl densities times the explicit cross-block factor."""
    if not isinstance(blocks, BlockProfile):
        blocks = BlockProfile(tuple(blocks))
    n = blocks.total
    ranges = blocks.ranges()
    out = cross_density([list(r) for r in ranges], n)
    for r in ranges:
        out = out * block_embed(gamma_minus(len(r)), list(r), n)
    return out


def khall_product_eval_blockwise(blocks, chi):
    if not isinstance(blocks, BlockProfile):
        blocks = BlockProfile(tuple(blocks))
    n = blocks.total
    _check_char(chi, n)
    ct = constant_term_of_product(block_density(blocks), chi.poly)
    return Fraction(ct) / prod(factorial(s) for s in blocks.sizes)


def _tree_leaves(tree):
    if isinstance(tree, int):
        return [tree]
    out = []
    for t in tree:
        out.extend(_tree_leaves(t))
    return out


def nested_density(tree):
    """Density for a bracketed product such as ``((1, 1), 1)``.

    A leaf ``n`` stands for ``delta_n`` (its own Weyl density over ``n!``);
    an inner node multiplies its children's densities by the cross factor
    between the children's variable blocks.
    """
    total = sum(_tree_leaves(tree))

    def rec(node, start):
        if isinstance(node, int):
            dens = block_embed(gamma_minus(node), list(range(start, start + node)), total)
            return dens.scale(Fraction(1, factorial(node))), list(range(start, start + node))
        groups, dens = [], MultiLaurent.constant(1, total)
        for child in node:
            d, vars_ = rec(child, start)
            start += len(vars_)
            dens = dens * d
            groups.append(vars_)
        dens = dens * cross_density(groups, total)
        return dens, [v for g in groups for v in g]

    return rec(tree, 0)[0]


def nested_product_eval(tree, chi):
    n = sum(_tree_leaves(tree))
    _check_char(chi, n)
    return Fraction(constant_term_of_product(nested_density(tree), chi.poly))


def epsilon_eval_blockwise(n, chi):
    total = Fraction(0)
    for comp in compositions(n):
        k = len(comp)
        total += Fraction((-1) ** (k - 1), k) * khall_product_eval_blockwise(comp, chi)
    return total


def binomial_example(n_power):
    """``(delta_1 * delta_1)((V - 2)^N)`` for the adjoint-type weight ``(1, -1)``."""
    from .repchar import Character

    v = MultiLaurent({(1, -1): 1, (-1, 1): 1, (0, 0): -2}, 2)
    return khall_product_eval((1, 1), Character(v**n_power))


def density_constant_term(n):
    return constant_term(gamma_minus(n))
