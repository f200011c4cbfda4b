from fractions import Fraction
from math import comb, factorial

import pytest

from conftest import P
from polyseq.explicit import (
    IntegralityViolation, c_nk, p_at_one, p_at_zero, p_binomial_form, p_double_factorial_form,
    p_explicit, p_prefactor_form, r_anchor, r_closed, r_poly_rec, t_nk, t_nk_reindexed, t_value,
)
from polyseq.listings import P_POWER, R_POLYS
from polyseq.pseq import p_sequence


def test_t_kernel_examples():
    assert t_nk(1, 1) == 1
    assert t_nk(2, 1) == 3
    assert t_nk(3, 2) == 25
    assert t_value(0, 3) == 0 and t_value(4, 0) == 0
    with pytest.raises(ValueError):
        t_nk(0, 1)


def test_t_kernel_against_brute_sum():
    for n in range(1, 15):
        for k in range(1, 10):
            brute = sum(2 ** (i - 1) * comb(n + 2 * k - i - 1, k - 1) for i in range(1, n + 1))
            assert t_nk(n, k) == brute == t_nk_reindexed(n, k)


def test_prefactor_examples():
    assert c_nk(3, 1) == 1
    assert c_nk(3, 2) == Fraction(4, 5)
    assert c_nk(4, 1) == Fraction(2, 5)


def test_p_explicit_examples():
    assert p_explicit(3, 2) == 10
    assert p_explicit(2, 1) == 1
    # (2^12 - 1) * 6! / 13, also the coefficient sum of P_12
    assert p_explicit(12, 1) == 226800 == sum(P_POWER[12])


def test_explicit_values_match_listings():
    for n, desc in P_POWER.items():
        p = P(*desc)
        for k in range(0, 9):
            assert p_explicit(n, k) == p(k), (n, k)


def test_all_explicit_forms_agree():
    seq = p_sequence(40)
    for n in range(1, 41):
        for k in range(1, 12):
            want = seq[n](k)
            assert p_binomial_form(n, k) == p_double_factorial_form(n, k) == p_prefactor_form(n, k) == want


def test_integrality_violation_is_an_arithmetic_error():
    assert issubclass(IntegralityViolation, ArithmeticError)


def test_r_polys_match_listing():
    for k, desc in R_POLYS.items():
        assert r_poly_rec(k) == P(*desc)


def test_r_closed_examples_and_agreement():
    assert r_closed(2, 1) == 5
    assert all(r_closed(1, n) == 1 for n in range(20))
    assert r_closed(3, 2) == 58
    for k in range(1, 13):
        r = r_poly_rec(k)
        for n in range(0, 41):
            assert r_closed(k, n) == r(n)


def test_r_anchor():
    for k in range(1, 21):
        assert r_poly_rec(k)(1) == r_anchor(k) == factorial(k - 1) * (2 ** (2 * k - 1) - comb(2 * k - 1, k))


def test_values_at_zero_and_one():
    assert p_at_zero(5) == 32
    assert p_at_zero(12) == 122880
    assert p_at_one(6) == 54 == 3 + 19 + 32
    assert p_at_one(11) == 245640 == sum(P_POWER[11])
