from fractions import Fraction

import pytest

from conftest import P
from polyseq.coeffs import (
    BinomPoly, CoeffTable, InsufficientSamples, b_explicit, check_a_formulas, check_b_formulas,
    check_fits, check_q, denominator, fit_coeff_poly, q_denominator_formula, q_poly,
    q_poly_interpolated, to_binomial, to_binomial_differences, to_binomial_stirling,
)
from polyseq.exact import Poly, binomial, stirling2
from polyseq.listings import P_BINOMIAL, P_POWER, Q, U, V, Y, Z, p_binomial_corrected
from polyseq.pseq import expected_degree, p_sequence
from polyseq.report import PASS

N_CLOSED = 100


def _all_pass(results):
    bad = [r.record() for r in results if r.status != PASS]
    assert not bad, bad


def test_to_binomial_examples():
    assert to_binomial(P(*P_POWER[5]), 2) == BinomPoly(2, (10, 30, 32))
    assert str(to_binomial(P(*P_POWER[5]), 2)) == "10C(x,2)+30C(x,1)+32"
    assert to_binomial(Poly.const(1), 0).b == (1,)


def test_binomial_listings_with_erratum():
    for n in range(1, 13):
        m = expected_degree(n)
        assert to_binomial(P(*P_POWER[n]), m).b == p_binomial_corrected(n), n


def test_printed_p12_leading_binomial_coefficient_is_inconsistent():
    # 760 C(x,5) + ... would make P_12(5) and P_12(6) disagree with the power listing
    printed = BinomPoly(5, P_BINOMIAL[12]).to_poly()
    power = P(*P_POWER[12])
    assert all(printed(x) == power(x) for x in range(5))
    assert printed(5) - power(5) == 40 and printed(6) - power(6) == 240
    assert to_binomial(power, 5).b[0] == 720 == 6 * 5 * 4 * 3 * 2


def test_three_routes_to_b_agree():
    seq = p_sequence(60)
    for n, p in seq.items():
        m = expected_degree(n)
        fd = to_binomial(p, m)
        assert fd == to_binomial_stirling(p, m) == to_binomial_differences(p, m), n
        assert fd.to_poly() == p
        if n <= 30:
            assert list(fd.b) == [b_explicit(n, i) for i in range(m + 1)]


def test_coefficient_examples():
    tab = CoeffTable.build(12)
    assert (tab.a(7, 0), tab.a(7, 1)) == (7, 77)
    assert tab.a(12, 1) == 200
    assert 2 * tab.a(5, 0) == 5 * tab.a(4, 0)
    assert (tab.b(7, 0), tab.b(7, 1)) == (42, 196)
    assert tab.b(9, 1) == 9 * (tab.b(8, 1) + tab.b(8, 0)) == 1368
    assert 2 * tab.b(10, 1) == tab.b(9, 1) + tab.b(9, 0) + 24 * binomial(4, 1)


def test_table_invariants():
    tab = CoeffTable.build(40)
    for n in range(1, 41):
        m = expected_degree(n)
        assert tab.a(n, 0) == (n if n % 2 else n // 2)
        assert tab.b(n, m) == tab.seq[n](0)


def test_a_formulas_to_100():
    results = check_a_formulas(N_CLOSED)
    assert {r.id for r in results} == {"9.2", "9.3", "9.11", "9.12"}
    _all_pass(results)


def test_printed_sign_of_even_recursion_fails():
    # with the opposite sign (-1)^(i-j+1) the even-n recursion breaks already at n = 6
    tab = CoeffTable.build(12)
    n, m, i = 6, 2, 1
    rhs = Fraction(n, 2) * tab.a(n - 1, i) + 2 * sum(
        (-1) ** (i - j + 1) * (m * binomial(m - j, m - i) - binomial(m - j, m - i - 1)) * tab.a(n, j)
        for j in range(i))
    assert (n - 2 * i - 1) * tab.a(n, i) != rhs


def test_b_formulas_to_100():
    results = check_b_formulas(N_CLOSED)
    assert {"12.5", "12.6", "12.13", "12.14", "12.12", "12.4", "12.2", "n|b_j", "roundtrip"} <= {
        r.id for r in results}
    _all_pass(results)


@pytest.mark.parametrize("i", range(4))
def test_fits_match_listed_polynomials(i):
    assert fit_coeff_poly(i, "odd", "power", 40) == U[i]
    assert fit_coeff_poly(i, "even", "power", 40) == V[i]
    assert fit_coeff_poly(i, "odd", "binomial", 40) == Y[i]
    assert fit_coeff_poly(i, "even", "binomial", 40) == Z[i]


def test_fit_examples():
    n = Poly.x()
    assert fit_coeff_poly(0, "odd", "power", 20) == n
    assert fit_coeff_poly(1, "odd", "binomial", 20) == (n - 1) * n * (5 * n - 7) * Fraction(1, 12)


def test_fit_needs_enough_samples():
    with pytest.raises(InsufficientSamples):
        fit_coeff_poly(3, "odd", "power", 10)


def test_check_fits_suite():
    _all_pass(check_fits(40))


def test_q_polys():
    for k, q in Q.items():
        assert q_poly(k) == q
    assert q_poly(2)(3) == 25 == stirling2(5, 3)
    for k in range(9):
        q = q_poly(k)
        assert q.degree == 2 * k
        assert q == q_poly_interpolated(k)
        assert all(q(j) == stirling2(j + k, j) for j in range(2 * k + 4))
        assert denominator(q) == q_denominator_formula(k)
        if k:
            assert q(0) == 0


def test_q_denominators_start_of_a053657():
    assert [q_denominator_formula(k) for k in range(6)] == [1, 2, 24, 48, 5760, 11520]


def test_check_q_suite():
    _all_pass(check_q(8))
