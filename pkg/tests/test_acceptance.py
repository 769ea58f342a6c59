"""Acceptance criteria; each test prints one PASS/FAIL line."""
import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, factorial

import pytest

from hallwc.exactalg import LaurentPoly, RatFunc, residue_by_expansions, residue_by_partial_fractions
from hallwc.freewall import HopSpec, coefficient_tables, js_bracket_expansion_check, js_step4_identity, nontrivial
from hallwc.khallvect import epsilon_eval, khall_product_eval, nested_product_eval
from hallwc.multilaurent import constant_term_of_product, gamma_minus
from hallwc.quiver import SlopeFunction, a2, kronecker, stack_poincare, subvectors, vect
from hallwc.repchar import Character, schur_char, weight_zero_dominant_weights
from hallwc.torus import (
    HallContext,
    TorusElem,
    delta_family_from_epsilon,
    dominant_wc_check,
    dt_extract,
    epsilon_family,
    hn_sum,
    qt_mul,
)

q = RatFunc.gen()


@pytest.fixture
def report(capsys):
    def emit(number, ok, label):
        with capsys.disabled():
            print(f"\ncriterion {number:2d}: {'PASS' if ok else 'FAIL'}  {label}")
        assert ok

    return emit


def classes(total_max, nverts):
    out = []
    for total in range(1, total_max + 1):
        for v in subvectors((total,) * nverts):
            if sum(v) == total:
                out.append(v)
    return out


# two distinct stabilities per quiver
RANGE = [
    (vect(), [(n,) for n in range(1, 5)], [SlopeFunction((0,)), SlopeFunction((1,))]),
    (a2(), classes(4, 2), [SlopeFunction((1, 0)), SlopeFunction((0, 1))]),
    (kronecker(), classes(4, 2), [SlopeFunction((1, 0)), SlopeFunction((0, 1))]),
]


def test_01_vect_dt(report):
    ctx = HallContext(vect(), SlopeFunction((0,)))
    for n in range(1, 7):
        ctx.epsilon_coeff((n,))
    fam = ctx.epsilon
    got = [dt_extract(fam, (n,)) for n in range(1, 7)]
    want = [Fraction((-1) ** (n - 1), n * n) for n in range(1, 7)]
    report(1, got == want, f"Vect DT_n = (-1)^(n-1)/n^2 for n = 1..6: {[str(x) for x in got]}")


def test_02_vect_second_invariants(report):
    ctx = HallContext(vect(), SlopeFunction((0,)))
    eps, delta = ctx.epsilon_coeff((2,)), ctx.delta_coeff((2,))
    ok = eps == -1 / (2 * q * (q + 1)) and delta == 1 / (q * (q**2 - 1))
    report(2, ok, f"eps_2 = {eps}, delta_2 = {delta}")


def test_03_vect_epsilon_vanishes(report):
    bad = []
    count = 0
    for n in (2, 3, 4):
        ws = weight_zero_dominant_weights(n, -2, 2)
        chars = [Character.one(n)] + [schur_char(w) for w in ws]
        for i, j in combinations_with_replacement(range(len(chars)), 2):
            chi = chars[i] * chars[j]
            count += 1
            if epsilon_eval(n, chi) != 0:
                bad.append((n, i, j))
    report(3, not bad, f"epsilon_n(chi) = 0 on {count} products of weight-zero Schur characters, n in 2..4")


def test_04_weyl_constant_terms(report):
    ok = True
    count = 0
    for n in range(1, 5):
        for w in weight_zero_dominant_weights(n, -3, 3):
            ct = constant_term_of_product(gamma_minus(n), schur_char(w).poly)
            want = factorial(n) if not any(w) else 0
            ok &= ct == want
            count += 1
    report(4, ok, f"CT(Gamma_n s_lambda) = n! or 0 on {count} weights, n <= 4")


def test_05_binomial_sequence(report):
    v = Character(schur_char((1, -1)).poly) - 3
    got = [khall_product_eval((1, 1), v**N) for N in range(0, 9)]
    want = [(-1) ** N * comb(2 * N + 2, N + 1) for N in range(0, 9)]
    report(5, got == want, f"(delta_1*delta_1)((u + 1/u - 2)^N), N <= 8: {[str(x) for x in got]}")


def _random_f(rng):
    num = LaurentPoly({i: Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for i in range(rng.randint(1, 6))}, "u")
    den = LaurentPoly({rng.randint(0, 3): 1}, "u") * LaurentPoly({0: 1, 1: -1}, "u") ** rng.randint(0, 4)
    return RatFunc(num, den, "u")


def test_06_residue_methods(report):
    rng = random.Random(20240601)
    fs = [_random_f(rng) for _ in range(200)]
    ok = all(residue_by_expansions(f) == residue_by_partial_fractions(f) for f in fs)
    report(6, ok, "residue by expansions equals residue by partial fractions on 200 random f")


def test_07_stability_independence(report):
    ok = True
    count = 0
    for Q, alphas, stabs in RANGE:
        for alpha in alphas:
            target = stack_poincare(Q, alpha)
            sums = []
            for mu in stabs:
                ctx = HallContext(Q, mu)
                ctx.fill(alpha)
                sums.append(hn_sum(ctx.delta, alpha).coeff(alpha))
            ok &= all(s == target for s in sums)
            count += 1
    report(7, ok, f"HN sums agree with the stack count for two stabilities on {count} classes")


def test_08_dominant_wallcrossing(report):
    ok = True
    for Q in (a2(), kronecker()):
        for side in (SlopeFunction((1, 0)), SlopeFunction((0, 1))):
            for alpha in classes(4, 2):
                ok &= dominant_wc_check(Q, SlopeFunction((0, 0)), side, alpha)
    ok &= dominant_wc_check(a2(), SlopeFunction((1, 1)), SlopeFunction((1, 0)), (1, 1))
    report(8, ok, "dominant wall-crossing holds on A2 and Kronecker-2 simple walls")


def test_09_simple_wall_commutator(report):
    wall = SlopeFunction((0, 0))
    minus = nontrivial(coefficient_tables([HopSpec(wall, SlopeFunction((1, 0)))], (1, 1)).Utilde)
    plus = nontrivial(coefficient_tables([HopSpec(wall, SlopeFunction((0, 1)))], (1, 1)).Utilde)
    key = ((1, 0), (0, 1))
    ok = minus == {key: Fraction(1, 2)} and plus == {key: Fraction(-1, 2)}
    report(9, ok, f"simple wall: +{minus.get(key)} and {plus.get(key)} times [eps_a1, eps_a2]")


def test_10_no_pole(report):
    ok = True
    count = 0
    for Q, alphas, stabs in RANGE:
        for mu in stabs:
            ctx = HallContext(Q, mu)
            for alpha in alphas:
                ok &= ctx.epsilon_coeff(alpha).regular_at_one()
                count += 1
    report(10, ok, f"epsilon regular at q = 1 on {count} (class, stability) pairs")


def test_11_step4_and_brackets(report):
    rng = random.Random(7)
    ok = all(
        js_step4_identity(n, [Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(n)])
        for n in range(1, 7)
        for _ in range(50)
    )
    ok &= all(js_bracket_expansion_check(n) for n in range(1, 5))
    report(11, ok, "step-4 identity for n <= 6 (50 draws each) and bracket expansion for n <= 4")


def test_12_algebra_laws(report):
    rng = random.Random(11)
    K = kronecker()

    def mono():
        alpha = (rng.randint(0, 3), rng.randint(0, 3))
        return TorusElem.basis(alpha, RatFunc.monomial(rng.randint(-3, 3), Fraction(rng.randint(1, 5), rng.randint(1, 3))))

    assoc = True
    for _ in range(100):
        x, y, z = mono(), mono(), mono()
        assoc &= qt_mul(qt_mul(x, y, K), z, K) == qt_mul(x, qt_mul(y, z, K), K)

    chi = schur_char((1, 0, -1)) * schur_char((1, 0, -1)) + schur_char((2, -1, -1))
    khall = nested_product_eval(((1, 1), 1), chi) == nested_product_eval((1, (1, 1)), chi) == khall_product_eval(
        (1, 1, 1), chi
    )

    roundtrip = True
    for Q, alphas, stabs in RANGE:
        for mu in stabs:
            ctx = HallContext(Q, mu)
            for a in alphas:
                ctx.fill(a)
            eps = epsilon_family(ctx.delta, ctx.delta.table)
            roundtrip &= delta_family_from_epsilon(eps, eps.table).table == ctx.delta.table
    report(12, assoc and khall and roundtrip, f"torus associativity {assoc}, K-Hall (1,1,1) {khall}, log/exp {roundtrip}")
