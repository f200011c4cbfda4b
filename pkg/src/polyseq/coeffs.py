"""Coefficients of P_n in the power basis and in the binomial basis {C(x, i)}.

Indexing follows the usual printed form: with m = ⌊(n-1)/2⌋,

    P_n(x) = a_0(n) x^m + a_1(n) x^(m-1) + ... + a_m(n)
           = b_0(n) C(x, m) + b_1(n) C(x, m-1) + ... + b_m(n),

so both ``a`` and ``b`` run highest order first.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from . import explicit
from .exact import (
    Poly,
    binomial,
    binomial_basis_poly,
    factorial,
    forward_differences,
    format_terms,
    indefinite_sum,
    interpolate,
    is_prime,
    stirling2,
)
from .pseq import PSequence, expected_degree, p_sequence
from .report import IdentityCheck, Tally


class InsufficientSamples(ValueError):
    pass


# ---------------------------------------------------------------------------
# binomial basis
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinomPoly:
    """``b[i]`` multiplies C(x, m - i)."""

    m: int
    b: tuple

    def ascending(self) -> list:
        return list(reversed(self.b))

    def to_poly(self) -> Poly:
        out = Poly()
        for i, c in enumerate(self.b):
            if c:
                out = out + binomial_basis_poly(self.m - i) * c
        return out

    def __call__(self, x: int):
        return sum(c * binomial(x, self.m - i) for i, c in enumerate(self.b))

    def __str__(self):
        return format_terms(self.b, lambda i: f"C(x,{i})" if i else "", self.m)


def to_binomial(p: Poly, m: int | None = None) -> BinomPoly:
    """Newton forward differences of p at 0..m."""
    if m is None:
        m = max(p.degree, 0)
    if p.degree > m:
        raise ValueError(f"degree {p.degree} exceeds m={m}")
    diffs = forward_differences([p(k) for k in range(m + 1)])
    return BinomPoly(m, tuple(_intify(d) for d in reversed(diffs)))


def _intify(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else v


def padded_desc(p: Poly, m: int) -> list[Fraction]:
    """a_0..a_m of p, zero-padded if deg p < m."""
    c = list(p.coeffs) + [Fraction(0)] * (m + 1 - len(p.coeffs))
    return c[::-1]


def to_binomial_stirling(p: Poly, m: int) -> BinomPoly:
    """b_i = (m-i)! sum_{j<=i} a_j S(m-j, m-i)."""
    a = padded_desc(p, m)
    b = [factorial(m - i) * sum(a[j] * stirling2(m - j, m - i) for j in range(i + 1)) for i in range(m + 1)]
    return BinomPoly(m, tuple(_intify(v) for v in b))


def delta_power_at_zero(l: int, e: int) -> int:
    """Δ^l x^e at x = 0, by the alternating binomial sum."""
    return sum((-1) ** (l - k) * binomial(l, k) * k**e for k in range(l + 1))


def to_binomial_differences(p: Poly, m: int) -> BinomPoly:
    """b_i = sum_{j<=i} a_j Δ^(m-i) x^(m-j) |_{x=0}; terms with j > i vanish."""
    a = padded_desc(p, m)
    b = [sum(a[j] * delta_power_at_zero(m - i, m - j) for j in range(i + 1)) for i in range(m + 1)]
    return BinomPoly(m, tuple(_intify(v) for v in b))


def b_explicit(n: int, i: int) -> int:
    """b_i(n) straight from closed-form values P_n(0..m-i)."""
    m = expected_degree(n)
    t = m - i
    return sum((-1) ** (t - k) * binomial(t, k) * explicit.p_explicit(n, k) for k in range(t + 1))


# ---------------------------------------------------------------------------
# coefficient tables
# ---------------------------------------------------------------------------

class CoeffTable:
    """a(n, i) and b(n, i) for n = 1..N; out-of-range i reads as 0."""

    def __init__(self, seq: PSequence):
        self.seq = seq
        self.N = seq.max_n
        self._a = {n: [c.numerator for c in p.descending()] for n, p in seq.items()}
        self._b = {n: list(to_binomial(p, expected_degree(n)).b) for n, p in seq.items()}

    @classmethod
    def build(cls, N: int) -> "CoeffTable":
        return cls(p_sequence(N))

    def m(self, n: int) -> int:
        return expected_degree(n)

    def a(self, n: int, i: int) -> int:
        row = self._a[n]
        return row[i] if 0 <= i < len(row) else 0

    def b(self, n: int, i: int) -> int:
        row = self._b[n]
        return row[i] if 0 <= i < len(row) else 0

    def a_row(self, n: int) -> list[int]:
        return list(self._a[n])

    def b_row(self, n: int) -> list[int]:
        return list(self._b[n])


def a_closed(n: int, i: int) -> Fraction:
    """Closed forms of the two leading power-basis coefficients."""
    if i == 0:
        return Fraction(n) if n % 2 else Fraction(n, 2)
    if i == 1:
        if n % 2:
            return Fraction(n * (n - 1) * (7 * n - 5), 24)
        return Fraction(n * (n - 2) * (7 * n - 4), 48)
    raise ValueError("closed form only for i = 0, 1")


def b_closed(n: int, i: int) -> Fraction:
    if n % 2:
        f = factorial((n - 1) // 2)
        return Fraction(n * f) if i == 0 else Fraction(n * (5 * n - 7) * f, 6) if i == 1 else _no_closed()
    f = factorial(n // 2)
    return Fraction(f) if i == 0 else Fraction((5 * n - 8) * f, 6) if i == 1 else _no_closed()


def _no_closed():
    raise ValueError("closed form only for i = 0, 1")


def check_a_formulas(N: int = 100) -> list[IdentityCheck]:
    """Leading power-basis coefficients and the homogeneous coefficient recursions.

    The even-n recursion is checked with sign (-1)^(i-j) on the sum, which is
    what the difference relation actually yields.
    """
    tab = CoeffTable.build(N)
    t92 = Tally("9.2", (1, N), None, "a_0(n)")
    t93 = Tally("9.3", (3, N), None, "a_1(n)")
    t911 = Tally("9.11", (3, N), None, "odd n, i <= m-1")
    t912 = Tally("9.12", (4, N), None, "even n, i <= m")
    for n in range(1, N + 1):
        m = tab.m(n)
        t92.eq(Fraction(tab.a(n, 0)), a_closed(n, 0), n=n)
        if m >= 1:
            t93.eq(Fraction(tab.a(n, 1)), a_closed(n, 1), n=n)
        if n >= 3 and n % 2:
            for i in range(m):
                lhs = (m - i) * tab.a(n, i)
                rhs = n * tab.a(n - 1, i) + sum(
                    (-1) ** (i - j + 1) * binomial(m - j, m - i - 1) * tab.a(n, j) for j in range(i))
                t911.eq(lhs, rhs, n=n, i=i)
        elif n >= 4 and n % 2 == 0:
            for i in range(m + 1):
                lhs = (n - 2 * i - 1) * tab.a(n, i)
                rhs = Fraction(n, 2) * tab.a(n - 1, i) + 2 * sum(
                    (-1) ** (i - j) * (m * binomial(m - j, m - i) - binomial(m - j, m - i - 1)) * tab.a(n, j)
                    for j in range(i))
                t912.eq(lhs, rhs, n=n, i=i)
    return [t92.result(), t93.result(), t911.result(), t912.result()]


def check_b_formulas(N: int = 100, explicit_n_max: int = 60) -> list[IdentityCheck]:
    """Binomial-basis closed forms, recursions, the three alternative routes to b_i(n),
    and n | b_j(n) (j < m) for odd n."""
    tab = CoeffTable.build(N)
    out = {k: Tally(k, (1, N), None, note) for k, note in [
        ("12.5", "b_0(n)"), ("12.6", "b_1(n)"), ("12.13", "odd n >= 3, 1 <= i <= m-1"),
        ("12.14", "even n >= 4, 1 <= i <= m-1"), ("12.12", "Stirling route"),
        ("12.4", "finite-difference route"), ("n|b_j", "odd n, j <= m-1"),
        ("roundtrip", "binomial basis back to power basis"),
    ]}
    out["12.2"] = Tally("12.2", (1, min(N, explicit_n_max)), None, "from closed-form values")
    for n in range(1, N + 1):
        m = tab.m(n)
        p = tab.seq[n]
        row = tab.b_row(n)
        out["12.5"].eq(Fraction(row[0]), b_closed(n, 0), n=n)
        if m >= 1:
            out["12.6"].eq(Fraction(row[1]), b_closed(n, 1), n=n)
        if n % 2 and n >= 3:
            for i in range(1, m):
                out["12.13"].eq(row[i], n * (tab.b(n - 1, i) + tab.b(n - 1, i - 1)), n=n, i=i)
            for j in range(m):
                out["n|b_j"].check(row[j] % n == 0, n=n, j=j, b=row[j])
        elif n % 2 == 0 and n >= 4:
            for i in range(1, m):
                out["12.14"].eq(2 * row[i], tab.b(n - 1, i) + tab.b(n - 1, i - 1)
                                + factorial(m) * binomial(m, i), n=n, i=i)
        out["12.12"].eq(list(to_binomial_stirling(p, m).b), row, n=n)
        out["12.4"].eq(list(to_binomial_differences(p, m).b), row, n=n)
        out["roundtrip"].eq(BinomPoly(m, tuple(row)).to_poly(), p, n=n)
        if n <= explicit_n_max:
            out["12.2"].eq([b_explicit(n, i) for i in range(m + 1)], row, n=n)
    return [t.result() for t in out.values()]


# ---------------------------------------------------------------------------
# coefficient polynomials in n
# ---------------------------------------------------------------------------

def coeff_samples(i: int, parity: str, basis: str, N: int) -> list[tuple[int, Fraction]]:
    """(n, value) for every n <= N of the parity with deg P_n >= i."""
    if parity not in ("odd", "even") or basis not in ("power", "binomial"):
        raise ValueError(f"bad parity/basis: {parity!r}, {basis!r}")
    seq = p_sequence(N)
    start = 1 if parity == "odd" else 2
    out = []
    for n in range(start, N + 1, 2):
        m = expected_degree(n)
        if m < i:
            continue
        p = seq[n]
        if basis == "power":
            out.append((n, p.descending()[i]))
        else:
            b = to_binomial(p, m).b[i]
            out.append((n, Fraction(b, factorial(m - i))))
    return out


def fit_coeff_poly(i: int, parity: str, basis: str, N: int, holdout: int = 3) -> Poly:
    """Interpolate a_i(n) (or b_i(n)/(m-i)!) over n of one parity by a degree-(2i+1) polynomial.

    The fit uses the 2i+2 smallest admissible n; ``holdout`` further samples
    must lie exactly on it.
    """
    need = 2 * i + 2 + holdout
    samples = coeff_samples(i, parity, basis, N)
    if len(samples) < need:
        raise InsufficientSamples(f"{len(samples)} samples of {parity} n <= {N}, need {need}")
    fit_pts, check_pts = samples[: 2 * i + 2], samples[2 * i + 2: need]
    poly = interpolate([n for n, _ in fit_pts], [v for _, v in fit_pts])
    for n, v in check_pts:
        if poly(n) != v:
            raise ArithmeticError(f"fit for i={i} ({parity}, {basis}) misses n={n}: {poly(n)} != {v}")
    return poly


# ---------------------------------------------------------------------------
# Q_k(n) = S(n+k, n)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def q_poly(k: int) -> Poly:
    """Q_0 = 1, Q_k(n) = sum_{i=1}^n i Q_{k-1}(i), summed symbolically with power sums."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Poly.const(1)
    return indefinite_sum(Poly.x() * q_poly(k - 1))


def q_poly_interpolated(k: int) -> Poly:
    """Independent construction: interpolate S(j+k, j) at j = 0..2k."""
    return interpolate(list(range(2 * k + 1)), [stirling2(j + k, j) for j in range(2 * k + 1)])


def denominator(p: Poly) -> int:
    """lcm of the coefficient denominators."""
    return math.lcm(*(c.denominator for c in p.coeffs)) if p.coeffs else 1


def q_denominator_formula(k: int) -> int:
    """prod_p p^(sum_{j>=0} ⌊k / ((p-1) p^j)⌋) over primes p."""
    out = 1
    for p in range(2, k + 2):
        if not is_prime(p):
            continue
        e, d = 0, p - 1
        while d <= k:
            e += k // d
            d *= p
        out *= p**e
    return out


def check_q(k_max: int = 8) -> list[IdentityCheck]:
    tq = Tally("12.9", (0, 0), (0, k_max), "Q_k(j) = S(j+k, j), j <= 2k+3; degree 2k; Q_k(0) = 0")
    ti = Tally("12.11", (0, 0), (0, k_max), "power-sum Q_k equals interpolated Q_k")
    td = Tally("A053657", (0, 0), (0, k_max), "denominator of Q_k")
    for k in range(k_max + 1):
        q = q_poly(k)
        tq.eq(q.degree, 2 * k, k=k, what="degree")
        if k:
            tq.eq(q(0), 0, k=k, what="Q_k(0)")
        for j in range(2 * k + 4):
            tq.eq(q(j), stirling2(j + k, j), k=k, j=j)
        ti.eq(q, q_poly_interpolated(k), k=k)
        td.eq(denominator(q), q_denominator_formula(k), k=k)
    return [tq.result(), ti.result(), td.result()]


def check_fits(N: int = 40, i_max: int = 3) -> list[IdentityCheck]:
    """Interpolated coefficient polynomials against the printed U, V, Y, Z tables."""
    from . import listings

    tables = {("odd", "power"): ("U", listings.U), ("even", "power"): ("V", listings.V),
              ("odd", "binomial"): ("Y", listings.Y), ("even", "binomial"): ("Z", listings.Z)}
    out = []
    for (parity, basis), (name, table) in tables.items():
        t = Tally(f"fit:{name}", (1, N), None, f"{parity} n, {basis} basis")
        for i in range(min(i_max, max(table)) + 1):
            t.eq(fit_coeff_poly(i, parity, basis, N), table[i], i=i)
        out.append(t.result())
    return out


def run_all(N: int = 100) -> list[IdentityCheck]:
    return check_a_formulas(N) + check_b_formulas(N) + check_q() + check_fits()


__all__: Sequence[str] = [
    "BinomPoly", "CoeffTable", "InsufficientSamples", "a_closed", "b_closed", "b_explicit",
    "check_a_formulas", "check_b_formulas", "check_fits", "check_q", "coeff_samples",
    "denominator", "fit_coeff_poly", "q_denominator_formula", "q_poly", "q_poly_interpolated",
    "to_binomial", "to_binomial_differences", "to_binomial_stirling",
]
