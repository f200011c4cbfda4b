"""Machine checks of the seven conjectures about P_n, one n at a time.

Each ``check_cX(n)`` returns a :class:`ConjectureReport` for a single n;
:func:`run_conjecture` and :func:`run_all` fold them over a range.
Conjectures 2 and 3 are theorems, so a failure there means the sequence
itself was generated wrongly, and the report says so.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable

import sympy

from .exact import Poly, factorial, is_prime
from .pseq import expected_degree, p_sequence
from .report import INCONCLUSIVE, REFUTED, VERIFIED, ConjectureReport

DEFAULT_DIVISOR_CAP = 10**6


def rad(n: int) -> int:
    if n < 1:
        raise ValueError("rad needs n >= 1")
    return math.prod(p for p, _ in factorize(n))


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of |n| by trial division."""
    n = abs(n)
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def _report(cid: int, n: int, ok: bool, details: dict, counterexample: dict | None = None) -> ConjectureReport:
    if ok:
        return ConjectureReport(cid, (n, n), VERIFIED, details)
    details = dict(details, counterexample=counterexample or {"n": n})
    return ConjectureReport(cid, (n, n), REFUTED, details)


def _coeffs(n: int) -> list[int]:
    """a_0(n), ..., a_m(n)."""
    return [c.numerator for c in p_sequence(n)[n].descending()]


# ---------------------------------------------------------------------------
# conjectures 1-3
# ---------------------------------------------------------------------------

def check_c1(n: int) -> ConjectureReport:
    """Integer coefficients with content n / rad(n)."""
    p = p_sequence(n)[n]
    integral = p.is_integral()
    content = p.content() if integral else None
    want = n // rad(n)
    ok = integral and content == want
    return _report(1, n, ok, {"content": content, "expected": want},
                   {"n": n, "integral": integral, "content": content, "expected": want})


def check_c2(n: int) -> ConjectureReport:
    m = expected_degree(n)
    got, want = p_sequence(n)[n](0), 4**m * factorial(m)
    return _report(2, n, got == want, {"P_n(0)": got},
                   {"n": n, "P_n(0)": got, "expected": want, "diagnosis": "sequence-generation bug"})


def check_c3(n: int) -> ConjectureReport:
    if n % 2:
        want = Fraction((2**n - 1) * factorial((n - 1) // 2))
    else:
        want = Fraction((2**n - 1) * factorial(n // 2), n + 1)
    got = p_sequence(n)[n](1)
    return _report(3, n, got == want, {"P_n(1)": got},
                   {"n": n, "P_n(1)": got, "expected": want, "diagnosis": "sequence-generation bug"})


# ---------------------------------------------------------------------------
# conjecture 4: rational roots
# ---------------------------------------------------------------------------

def expected_rational_roots(n: int) -> list[Fraction]:
    if n == 3:
        return [Fraction(-4, 3)]
    if n % 4 == 0:
        return [Fraction(-n, 2)]
    return []


def primitive_part(p: Poly) -> list[int]:
    """Ascending integer coefficients divided by their content."""
    c = p.int_coeffs()
    g = math.gcd(*c)
    return [v // g for v in c]


def _candidates_by_divisors(coeffs: list[int], cap: int):
    """All ±p/q with p | constant, q | leading, or None if there would be more than ``cap``."""
    const, lead = coeffs[0], coeffs[-1]
    if const == 0:
        return {Fraction(0)}
    count = 2 * math.prod(e + 1 for _, e in factorize(const)) * math.prod(e + 1 for _, e in factorize(lead))
    if count > cap:
        return None
    qs = divisors(lead)
    return {Fraction(s * a, b) for a in divisors(const) for b in qs for s in (1, -1)}


def _candidates_by_isolation(coeffs: list[int], cap: int):
    """Rational-root-theorem candidates restricted to isolating intervals of the real roots.

    A rational root p/q in lowest terms has q | leading coefficient, so after
    refining each interval to width below 1/lead only O(1) numerators per q
    remain.  The isolation is exact (sympy works over ZZ/QQ throughout).
    """
    const, lead = coeffs[0], coeffs[-1]
    x = sympy.Symbol("x")
    poly = sympy.Poly(list(reversed(coeffs)), x, domain="ZZ")
    eps = sympy.Rational(1, 2 * abs(lead))
    qs = divisors(lead)
    out = set()
    for (lo, hi), _mult in poly.intervals(eps=eps):
        lo, hi = Fraction(int(lo.p), int(lo.q)), Fraction(int(hi.p), int(hi.q))
        for q in qs:
            for num in range(math.ceil(lo * q), math.floor(hi * q) + 1):
                cand = Fraction(num, q)
                if const == 0 or (cand.numerator != 0 and const % cand.numerator == 0):
                    out.add(cand)
                if len(out) > cap:
                    return None
    return out


def rational_roots(p: Poly, divisor_cap: int = DEFAULT_DIVISOR_CAP, method: str = "isolation"):
    """(sorted rational roots, number of candidates tested), or (None, cap) if over the cap."""
    if p.degree < 1:
        return [], 0
    coeffs = primitive_part(p)
    if method == "divisors":
        cands = _candidates_by_divisors(coeffs, divisor_cap)
    elif method == "isolation":
        cands = _candidates_by_isolation(coeffs, divisor_cap)
    else:
        raise ValueError(f"unknown method {method!r}")
    if cands is None:
        return None, divisor_cap
    prim = Poly(coeffs)
    return sorted(c for c in cands if prim(c) == 0), len(cands)


def check_c4(n: int, divisor_cap: int = DEFAULT_DIVISOR_CAP, method: str = "isolation") -> ConjectureReport:
    """Rational roots exist iff n = 3 or 4 | n, and then the only one is -n/2 (-4/3 for n = 3).

    Only rational roots are decidable here; the conjecture's wording about
    real roots is read as real *rational* roots.
    """
    p = p_sequence(n)[n]
    roots, tested = rational_roots(p, divisor_cap, method)
    want = expected_rational_roots(n)
    if roots is None:
        return ConjectureReport(4, (n, n), INCONCLUSIVE,
                                {"reason": "candidate count exceeds cap", "divisor_cap": divisor_cap,
                                 "method": method})
    details = {"roots": roots, "candidates": tested, "method": method}
    return _report(4, n, roots == want, details, {"n": n, "roots": roots, "expected": want})


# ---------------------------------------------------------------------------
# conjectures 5-7: coefficient patterns
# ---------------------------------------------------------------------------

def check_c5(n: int) -> ConjectureReport:
    """a_0(n) < a_1(n) < ... < a_m(n)."""
    a = _coeffs(n)
    bad = next((i for i in range(len(a) - 1) if not a[i] < a[i + 1]), None)
    return _report(5, n, bad is None, {"m": len(a) - 1},
                   {"n": n, "i": bad, "a_i": a[bad] if bad is not None else None,
                    "a_i+1": a[bad + 1] if bad is not None else None})


def check_c6(n: int) -> ConjectureReport:
    """Even n: a_i(n) <= a_i(n-1), equal only at i = m, and a_i(n-1)/a_i(n) strictly decreasing to 1.

    A non-strict step in the ratios is recorded under ``ties`` but does not refute.
    """
    if n % 2 or n < 2:
        raise ValueError("conjecture 6 concerns even n")
    cur, prev = _coeffs(n), _coeffs(n - 1)
    m = len(cur) - 1
    if len(prev) != len(cur):
        return _report(6, n, False, {}, {"n": n, "reason": "degree mismatch"})
    for i in range(m + 1):
        if cur[i] > prev[i] or (cur[i] == prev[i]) != (i == m):
            return _report(6, n, False, {}, {"n": n, "i": i, "a_i(n)": cur[i], "a_i(n-1)": prev[i]})
    ratios = [Fraction(prev[i], cur[i]) for i in range(m + 1)]
    ties = []
    for i in range(m):
        if ratios[i] < ratios[i + 1]:
            return _report(6, n, False, {}, {"n": n, "i": i, "ratio_i": ratios[i], "ratio_i+1": ratios[i + 1]})
        if ratios[i] == ratios[i + 1]:
            ties.append(i)
    details = {"ratios": ratios} if n <= 12 else {}
    if ties:
        details["ties"] = ties
    return _report(6, n, ratios[-1] == 1, details, {"n": n, "last_ratio": ratios[-1]})


def check_c7(n: int) -> ConjectureReport:
    """n divides every coefficient but the constant term iff n is prime (n >= 3)."""
    if n < 3:
        raise ValueError("conjecture 7 is checked for n >= 3 (P_1, P_2 are constants)")
    a = _coeffs(n)
    witness = next((i for i in range(len(a) - 1) if a[i] % n), None)
    divisible = witness is None
    prime = is_prime(n)
    details = {"prime": prime, "divisible": divisible}
    if witness is not None:
        details["witness_i"] = witness
    return _report(7, n, divisible == prime, details, dict(details, n=n))


CHECKS: dict[int, Callable[..., ConjectureReport]] = {
    1: check_c1, 2: check_c2, 3: check_c3, 4: check_c4, 5: check_c5, 6: check_c6, 7: check_c7,
}


def applicable(cid: int, n_max: int) -> list[int]:
    if cid == 6:
        return list(range(2, n_max + 1, 2))
    if cid == 7:
        return list(range(3, n_max + 1))
    return list(range(1, n_max + 1))


def run_conjecture(cid: int, n_max: int, **kw) -> list[ConjectureReport]:
    p_sequence(max(n_max, 1))
    check = CHECKS[cid]
    return [check(n, **kw) for n in applicable(cid, n_max)]


def fold(cid: int, n_max: int, reports: list[ConjectureReport]) -> ConjectureReport:
    """Collapse per-n reports into one: refuted beats inconclusive beats verified."""
    refuted = [r for r in reports if r.status == REFUTED]
    unsure = [r.n_range[0] for r in reports if r.status == INCONCLUSIVE]
    ns = [r.n_range[0] for r in reports]
    details = {"checked": len(reports)}
    if unsure:
        details["inconclusive_n"] = unsure
    if cid == 6:
        ties = [r.n_range[0] for r in reports if r.details.get("ties")]
        if ties:
            details["ties_at_n"] = ties
    rng = (min(ns), max(ns)) if ns else (1, n_max)
    if refuted:
        details["refuted"] = len(refuted)
        details["counterexample"] = refuted[0].details["counterexample"]
        return ConjectureReport(cid, rng, REFUTED, details)
    return ConjectureReport(cid, rng, INCONCLUSIVE if unsure else VERIFIED, details)


def run_all(n_max: int = 161, divisor_cap: int = DEFAULT_DIVISOR_CAP) -> list[ConjectureReport]:
    out = []
    for cid in CHECKS:
        kw = {"divisor_cap": divisor_cap} if cid == 4 else {}
        out.append(fold(cid, n_max, run_conjecture(cid, n_max, **kw)))
    return out
