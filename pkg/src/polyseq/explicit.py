"""Closed-form values of P_n at integer points, and the R_k(n) correction polynomials.

Independent of :mod:`polyseq.pseq`: nothing here steps the defining recursion.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .exact import Poly, binomial, double_factorial, factorial, linear_product


class IntegralityViolation(ArithmeticError):
    """A value that must be an integer came out fractional."""


def _check_nk(n: int, k: int, kmin: int = 1) -> None:
    if n < 1 or k < kmin:
        raise ValueError(f"need n >= 1 and k >= {kmin}, got n={n}, k={k}")


# ---------------------------------------------------------------------------
# T_n(k)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def t_value(n: int, k: int) -> int:
    """sum_{i=1}^{n} 2^(i-1) C(n+2k-i-1, k-1) on its natural domain n, k >= 0.

    T_0(k) = 0 (empty sum) and T_n(0) = 0 (C(., -1) = 0).  The identity
    checks rely on this extension at the edges of their ranges.
    """
    if n < 0 or k < 0:
        raise ValueError(f"T_n(k) needs n, k >= 0, got n={n}, k={k}")
    return sum((1 << (i - 1)) * binomial(n + 2 * k - i - 1, k - 1) for i in range(1, n + 1))


def t_nk(n: int, k: int) -> int:
    _check_nk(n, k)
    return t_value(n, k)


def t_nk_reindexed(n: int, k: int) -> int:
    """Same kernel summed from the other end: sum_j 2^(n-j) C(2k+j-2, k-1)."""
    _check_nk(n, k)
    return sum((1 << (n - j)) * binomial(2 * k + j - 2, k - 1) for j in range(1, n + 1))


# ---------------------------------------------------------------------------
# c_n(k) and P_n(k)
# ---------------------------------------------------------------------------

def c_nk(n: int, k: int) -> Fraction:
    _check_nk(n, k)
    if n % 2:
        out = Fraction(factorial((n - 1) // 2))
        for i in range(1, k):
            out *= Fraction(n + i, n + 2 * i)
        return out
    out = Fraction(factorial(n // 2 - 1), 2)
    for i in range(k):
        out *= Fraction(n + i, n + 2 * i + 1)
    return out


def p_binomial_form(n: int, k: int) -> Fraction:
    """P_n(k) as a ratio of binomials times a factorial times T_n(k)."""
    _check_nk(n, k)
    t = t_value(n, k)
    if n % 2:
        h = (n - 1) // 2
        return Fraction(binomial(h + k - 1, k - 1), binomial(n + 2 * k - 2, k - 1)) * factorial(h) * t
    h = n // 2
    return Fraction(binomial(h + k - 1, k), binomial(n + 2 * k - 1, k)) * factorial(h - 1) * t


def p_double_factorial_form(n: int, k: int) -> Fraction:
    """P_n(k) = 2^-(⌊n/2⌋+k-1) (n+k-1)! / (2⌊n/2⌋+2k-1)!! * T_n(k)."""
    _check_nk(n, k)
    h = n // 2
    den = (1 << (h + k - 1)) * double_factorial(2 * h + 2 * k - 1)
    return Fraction(factorial(n + k - 1) * t_value(n, k), den)


def p_prefactor_form(n: int, k: int) -> Fraction:
    """P_n(k) = 2^-(k-1) c_n(k) T_n(k)."""
    return c_nk(n, k) * t_value(n, k) / (1 << (k - 1))


def p_explicit(n: int, k: int) -> int:
    """Exact P_n(k) for integer k >= 0 without building any polynomial."""
    if k == 0:
        return p_at_zero(n)
    _check_nk(n, k)
    a = p_binomial_form(n, k)
    b = p_double_factorial_form(n, k)
    if a != b:
        raise ArithmeticError(f"closed forms disagree at n={n}, k={k}: {a} != {b}")
    if a.denominator != 1:
        raise IntegralityViolation(f"P_{n}({k}) = {a} is not an integer")
    return a.numerator


# ---------------------------------------------------------------------------
# R_k(n)
# ---------------------------------------------------------------------------

_r_polys: list[Poly] = [Poly.const(1)]


def r_poly_rec(k: int) -> Poly:
    """R_k as a polynomial in n, via R_{k+1}(n) = 4k(R_k(n+1) - R_k(n)) + (4k+n)(n+2k-1)_{k-1}."""
    if k < 1:
        raise ValueError("k must be >= 1")
    n = Poly.x()
    while len(_r_polys) < k:
        j = len(_r_polys)  # R_j is the last entry
        rj = _r_polys[-1]
        falling = linear_product(2 * j - 1 - i for i in range(j - 1))
        _r_polys.append(4 * j * (rj.shift(1) - rj) + (4 * j + n) * falling)
    return _r_polys[k - 1]


def r_closed(k: int, n: int) -> int:
    """R_k(n) = (k-1)! (2^(n+2k-2) - sum_{i=1}^n 2^(n-i) C(2k+i-2, k-1)).

    The 2^(-i) of the textbook form are cleared by the outer 2^n so the sum
    stays in integers.
    """
    if k < 1 or n < 0:
        raise ValueError(f"need k >= 1, n >= 0, got k={k}, n={n}")
    s = sum((1 << (n - i)) * binomial(2 * k + i - 2, k - 1) for i in range(1, n + 1))
    return factorial(k - 1) * ((1 << (n + 2 * k - 2)) - s)


def r_anchor(k: int) -> int:
    """R_k(1) = (k-1)! (2^(2k-1) - C(2k-1, k))."""
    return factorial(k - 1) * ((1 << (2 * k - 1)) - binomial(2 * k - 1, k))


def p_via_r(n: int, k: int) -> Fraction:
    """P_n(k) = c_n(k) (2^(n+k-1) - R_k(n) / (2k-2)!!)."""
    rk = r_poly_rec(k)(n)
    return c_nk(n, k) * (Fraction(1 << (n + k - 1)) - rk / double_factorial(2 * k - 2))


def identity_4_6(k: int, n: int) -> tuple[Fraction, Fraction]:
    """Both sides of 4 Σ 2^-i C(2k+i-2,k-1) - Σ 2^-i C(2k+i,k) = n/(k 2^n) C(2k+n-1,k-1)."""
    lhs = Fraction(0)
    for i in range(1, n + 1):
        lhs += Fraction(4 * binomial(2 * k + i - 2, k - 1) - binomial(2 * k + i, k), 1 << i)
    rhs = Fraction(n * binomial(2 * k + n - 1, k - 1), k * (1 << n))
    return lhs, rhs


# ---------------------------------------------------------------------------
# values at 0 and 1
# ---------------------------------------------------------------------------

def p_at_zero_closed(n: int) -> int:
    m = (n - 1) // 2
    return 4**m * factorial(m)


_zero_rec: list[Fraction] = [Fraction(1), Fraction(1)]  # P_1(0), P_2(0)


def p_at_zero_rec(n: int) -> Fraction:
    """P_n(0) from the first-order recursion in n seeded by P_1(0) = P_2(0) = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    while len(_zero_rec) < n:
        j = len(_zero_rec)  # computing P_{j+1}(0) from P_j(0)
        y = _zero_rec[-1]
        if j % 2:
            nxt = y / 2 + Fraction(2**j, 4) * factorial((j - 1) // 2)
        else:
            nxt = j * y + 2 ** (j - 1) * factorial(j // 2)
        _zero_rec.append(nxt)
    return _zero_rec[n - 1]


def p_at_zero(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    closed = p_at_zero_closed(n)
    if p_at_zero_rec(n) != closed:
        raise ArithmeticError(f"P_{n}(0): closed form {closed} != recursion {p_at_zero_rec(n)}")
    return closed


def p_at_one_closed(n: int) -> Fraction:
    if n % 2:
        return Fraction((2**n - 1) * factorial((n - 1) // 2))
    return Fraction((2**n - 1) * factorial(n // 2), n + 1)


def p_at_one(n: int) -> int:
    if n < 1:
        raise ValueError("n must be >= 1")
    closed = p_at_one_closed(n)
    via_c = c_nk(n, 1) * (2**n - 1)
    if closed != via_c:
        raise ArithmeticError(f"P_{n}(1): {closed} != c_n(1)(2^n-1) = {via_c}")
    if closed.denominator != 1:
        raise IntegralityViolation(f"P_{n}(1) = {closed} is not an integer")
    return closed.numerator
