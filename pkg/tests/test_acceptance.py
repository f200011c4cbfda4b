"""Acceptance criteria, one test each.  Every test prints a single
``ACCEPTANCE <n> PASS|FAIL <title>`` line, and the same lines are repeated
in the terminal summary at the end of the run."""
import random
import time
from contextlib import contextmanager
from fractions import Fraction
from math import comb, factorial

import pytest

from conftest import P
from polyseq import conjectures, explicit
from polyseq.coeffs import (
    check_a_formulas, check_b_formulas, denominator, fit_coeff_poly, q_denominator_formula, q_poly,
    to_binomial,
)
from polyseq.exact import Poly, stirling2
from polyseq.identities import (
    check_congruences, check_modp, check_routes, check_t_identities,
)
from polyseq.listings import P_BINOMIAL, P_POWER, Q, R_POLYS, U, V, Y, Z
from polyseq.pseq import clear_cache, expected_degree, p_sequence
from polyseq.report import PASS, REFUTED

RESULTS: dict[int, str] = {}


@contextmanager
def criterion(num: int, title: str, limit: float | None = None):
    start = time.perf_counter()
    ok = False
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None:
            assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        line = f"ACCEPTANCE {num} {'PASS' if ok else 'FAIL'} {title} ({elapsed:.2f}s)"
        RESULTS[num] = line
        print(line)


def _cold():
    clear_cache()
    explicit.t_value.cache_clear()


def _failures(results, ids=None):
    return [r.record() for r in results if (ids is None or r.id in ids) and r.status != PASS]


def test_1_golden_listings():
    _cold()
    with criterion(1, "P_1..P_12 and their binomial expansions match the printed listings", 1.0):
        seq = p_sequence(12)
        for n, desc in P_POWER.items():
            assert seq[n] == P(*desc), f"P_{n} power basis"
        mismatches = {}
        for n, printed in P_BINOMIAL.items():
            got = to_binomial(seq[n], expected_degree(n)).b
            if got != printed:
                mismatches[n] = {"computed": got, "printed": printed}
        assert not mismatches, f"binomial listing mismatch: {mismatches}"


def test_2_route_equivalence():
    _cold()
    with criterion(2, "five generation routes agree for 1 <= n <= 60", 30.0):
        results = check_routes(60)
        assert len(results) == 4 and all(r.cases == 60 for r in results)
        assert not _failures(results)


def test_3_verification_bound():
    _cold()
    with criterion(3, "integrality, degree and conjectures 1-7 for n <= 161", 600.0):
        seq = p_sequence(161)
        for n, p in seq.items():
            assert p.is_integral() and p.degree == expected_degree(n), n
        reports = conjectures.run_all(161)
        assert [r.conjecture_id for r in reports] == list(range(1, 8))
        assert not [r.record() for r in reports if r.status == REFUTED]
        assert all(r.status == "verified" for r in reports), [r.record() for r in reports]


def test_4_r_machinery():
    with criterion(4, "R_k list, closed form and anchor values"):
        for k, desc in R_POLYS.items():
            assert explicit.r_poly_rec(k) == P(*desc), k
        for k in range(1, 13):
            r = explicit.r_poly_rec(k)
            for n in range(41):
                assert explicit.r_closed(k, n) == r(n), (k, n)
        for k in range(1, 21):
            want = factorial(k - 1) * (2 ** (2 * k - 1) - comb(2 * k - 1, k))
            assert explicit.r_poly_rec(k)(1) == want, k


def test_5_identity_suites():
    with criterion(5, "kernel identities, check 10.8 and the congruences on their grids"):
        t = check_t_identities(60, 30)
        assert {"4.6", "6.1", "6.2", "7.1", "8.2", "8.4", "8.9"} <= {r.id for r in t}
        assert not _failures(t)
        assert not _failures(check_modp(60), {"10.6", "10.8"})
        assert not _failures(check_congruences(60), {"8.13", "9.10"})


def test_6_coefficient_closed_forms():
    with criterion(6, "a_0, a_1, b_0, b_1, coefficient recursions for n <= 100, fits for i <= 3"):
        a = check_a_formulas(100)
        b = check_b_formulas(100)
        assert {"9.2", "9.3", "9.11", "9.12"} <= {r.id for r in a}
        assert {"12.5", "12.6", "12.13", "12.14"} <= {r.id for r in b}
        assert not _failures(a) and not _failures(b, {"12.5", "12.6", "12.13", "12.14"})
        for i in range(4):
            assert fit_coeff_poly(i, "odd", "power", 40) == U[i], ("U", i)
            assert fit_coeff_poly(i, "even", "power", 40) == V[i], ("V", i)
            assert fit_coeff_poly(i, "odd", "binomial", 40) == Y[i], ("Y", i)
            assert fit_coeff_poly(i, "even", "binomial", 40) == Z[i], ("Z", i)


def test_7_stirling_polynomials():
    with criterion(7, "Q_0..Q_4 listing, Q_k(j) = S(j+k, j), denominators for k <= 8"):
        for k, q in Q.items():
            assert q_poly(k) == q, k
        for k in range(9):
            q = q_poly(k)
            assert all(q(j) == stirling2(j + k, j) for j in range(2 * k + 4)), k
            assert denominator(q) == q_denominator_formula(k), k


def _rand_poly(rng: random.Random) -> Poly:
    return Poly(Fraction(rng.randint(-40, 40), rng.randint(1, 9)) for _ in range(rng.randint(0, 6)))


def test_8_property_suite():
    with criterion(8, "1000 randomized ring, homomorphism and exact-division cases"):
        rng = random.Random(20240531)
        failures = []
        for case in range(1000):
            a, b, c = _rand_poly(rng), _rand_poly(rng), _rand_poly(rng)
            x = Fraction(rng.randint(-20, 20), rng.randint(1, 5))
            d = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            checks = [
                a + b == b + a, a * b == b * a,
                (a * b) * c == a * (b * c), a * (b + c) == a * b + a * c,
                (a * b)(x) == a(x) * b(x), (a + b)(x) == a(x) + b(x),
                a.shift(d)(x) == a(x + d), (a * b).shift(d) == a.shift(d) * b.shift(d),
            ]
            if not b.is_zero():
                checks.append((a * b).exact_div(b) == a)
            if not all(checks):
                failures.append(case)
        assert not failures, f"{len(failures)} failing cases, first {failures[0]}"
