from fractions import Fraction

import pytest

from conftest import P
from polyseq import identities
from polyseq.exact import Poly
from polyseq.explicit import t_nk, t_value
from polyseq.identities import (
    ROUTES, check_congruences, check_explicit_formulas, check_modp, check_p_relations, check_routes,
    check_t_identities, identity_10_8, p_via_bisection, p_via_homogeneous, p_via_shift, rising_from,
)
from polyseq.listings import P_POWER
from polyseq.pseq import p_sequence
from polyseq.report import FAIL, PASS, IdentityCheck, Tally

X = Poly.x()


def _all_pass(results):
    bad = [r.record() for r in results if r.status != PASS]
    assert not bad, bad
    assert all(r.cases > 0 for r in results), [r.id for r in results if r.cases == 0]


def test_worked_t_identity_cases():
    assert t_nk(2, 1) - 2 * t_nk(1, 1) == 1                    # 6.1 at n=2, k=1
    assert t_nk(3, 1) - t_nk(1, 2) == 4                        # 7.1 at n=3, k=1
    assert t_nk(1, 2) == 4 * t_nk(1, 1) - 1                    # 8.2 at n=1, k=1


def test_t_identities_grid():
    results = check_t_identities(60, 30)
    assert {r.id for r in results} == {"5.1", "6.1", "6.2", "7.1", "8.2", "8.4", "8.9", "4.6"}
    _all_pass(results)


def test_explicit_formula_checks():
    _all_pass(check_explicit_formulas(60, 30))


def test_bisection_examples():
    seq = p_via_bisection(12)
    for n in (5, 6, 7):
        assert seq[n] == P(*P_POWER[n])


def test_shift_examples():
    assert 2 * (X + 2) * Poly.const(1) + X == P(3, 4)
    assert (X + 3) * Poly.const(1) + (X + 1) == P(2, 4)
    assert p_via_shift(9)[9] == P(*P_POWER[9])


def test_homogeneous_examples():
    p2, p3, p4 = (P(*P_POWER[n]) for n in (2, 3, 4))
    assert p3 - p3.shift(-1) == 3 * p2
    assert (2 * X + 3) * p4 - (2 * X + 2) * p4.shift(-1) == 2 * p3
    assert 2 * p4 == p3.shift(1) + (X + 1)
    assert p_via_homogeneous(12)[12] == P(*P_POWER[12])


def test_five_routes_agree_to_60():
    assert set(ROUTES) == {"recursion", "explicit", "bisection", "shift", "homogeneous"}
    _all_pass(check_routes(60))


def test_route_seeds_are_only_the_initial_conditions():
    # bisection and shift must not borrow P_3, P_4 from the defining recursion
    assert identities._seeds() == [Poly.const(1), Poly.const(1)]


def test_p_relations():
    results = check_p_relations(60)
    assert {"6.3", "6.4", "7.3", "7.4", "8.1", "8.3", "8.7", "8.8", "8.11", "8.12"} <= {r.id for r in results}
    _all_pass(results)


def test_even_branch_of_8_1_against_listings():
    # (2x+n-1) P_n = (x+n-1) P_{n-1} + x(x+1)...(x+n/2-1)
    for n in range(4, 13, 2):
        lhs = (2 * X + n - 1) * P(*P_POWER[n])
        rhs = (X + n - 1) * P(*P_POWER[n - 1]) + rising_from(0, n // 2 - 1)
        assert lhs == rhs, n


def test_congruence_examples():
    p5 = P(*P_POWER[5])
    assert p5(2) == 102 and (p5(2) - p5(0)) % 5 == 0
    p3 = P(*P_POWER[3])
    assert P(*P_POWER[2])(1) == (p3(1) - p3(0)) / 3


def test_congruences_default_grid():
    _all_pass(check_congruences(60))


def test_8_13_wide_grid():
    seq = p_sequence(99)
    for n in range(3, 100, 2):
        p = seq[n]
        p0 = p(0)
        for k in range(41):
            assert (p(k) - p0) % n == 0, (n, k)


def test_modp_examples():
    assert identity_10_8(1, 0) == (1, 1)
    lhs, _ = identity_10_8(3, 0)
    assert lhs == 4
    assert t_value(8, 3) % 13 == 0


def test_modp_grid():
    results = check_modp(60)
    assert {r.id for r in results} == {"10.6", "10.8"}
    _all_pass(results)


def test_failures_carry_first_counterexample():
    t = Tally("demo", (1, 3))
    t.eq(1, 1, n=1)
    t.eq(2, 3, n=2)
    t.eq(4, 5, n=3)
    r = t.result()
    assert r.status == FAIL and r.counterexample == {"lhs": 2, "rhs": 3, "n": 2} and r.cases == 3


def test_pass_cannot_carry_counterexample():
    with pytest.raises(ValueError):
        IdentityCheck("x", (1, 1), status=PASS, counterexample={"n": 1})
