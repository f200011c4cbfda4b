"""Alternative generators of P_n and exhaustive checks of the identities behind them.

Besides the defining recursion there are four more ways to build the
sequence: from closed-form values at 0..m through Newton's forward-difference
formula, from the two-step (bisection) relations, from the division-free
shift relations, and by solving the homogeneous difference relations.  All of
them should reproduce :func:`polyseq.pseq.p_sequence` exactly.

Every ``check_*`` function returns a list of :class:`IdentityCheck`; failing
identities are data, not exceptions.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import explicit
from .exact import (
    Poly,
    binomial,
    forward_differences,
    from_binomial_ascending,
    indefinite_sum,
    is_prime,
    linear_product,
)
from .pseq import PSequence, expected_degree, l_poly, p_sequence
from .report import IdentityCheck, Tally

X = Poly.x()
HALF = Fraction(1, 2)


def rising_from(lo: int, hi: int) -> Poly:
    """(x + lo)(x + lo + 1)...(x + hi); 1 when hi < lo."""
    return linear_product(range(lo, hi + 1))


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def _seeds() -> list[Poly]:
    return [Poly.const(1), Poly.const(1)]


def p_via_bisection(N: int) -> PSequence:
    """Two-step relation within each parity class; every step is an exact division."""
    polys = _seeds()[:N]
    for n in range(3, N + 1):
        prev = polys[n - 3]
        base = 2 * (X + n - 1) * (X + n - 2) * prev
        if n % 2:
            rhs = base + (4 * X + 3 * n - 4) * rising_from(0, (n - 1) // 2 - 1)
            polys.append(rhs.exact_div(2 * X + n - 2))
        else:
            rhs = base + HALF * (4 * X + 3 * n - 4) * rising_from(0, (n - 2) // 2 - 1)
            polys.append(rhs.exact_div(2 * X + n - 1))
    return PSequence(polys)


def p_via_shift(N: int) -> PSequence:
    """Division-free relations: P_n from P_{n-2}(x+1) (even n) or P_{n-1} (odd n)."""
    polys = _seeds()[:N]
    for n in range(3, N + 1):
        if n % 2:
            p = 2 * (X + n - 1) * polys[n - 2] + rising_from(0, (n - 1) // 2 - 1)
        else:
            p = (X + n - 1) * polys[n - 3].shift(1) + rising_from(1, n // 2 - 1)
        polys.append(p)
    return PSequence(polys)


def _solve_triangular(op: Callable[[Poly], Poly], rhs: Poly, top: int) -> Poly:
    """Solve op(P) = rhs where op maps x^j to a polynomial of exact degree j."""
    sol = Poly()
    residual = rhs
    for j in range(top, -1, -1):
        img = op(Poly([0] * j + [1]))
        c = residual.coeffs[j] / img.coeffs[j] if residual.degree >= j else Fraction(0)
        if c:
            sol = sol + Poly([0] * j + [c])
            residual = residual - img * c
    if not residual.is_zero():
        raise ArithmeticError(f"no polynomial solution; residual {residual}")
    return sol


def p_via_homogeneous(N: int) -> PSequence:
    """Solve P_n(x) - P_n(x-1) = n P_{n-1}(x) (odd n) or
    (2x+n-1) P_n(x) - (2x+n-2) P_n(x-1) = (n/2) P_{n-1}(x) (even n).

    The odd-n relation fixes P_n only up to a constant, which is supplied by
    the closed form for P_n(0).
    """
    polys = _seeds()[:N]
    for n in range(3, N + 1):
        prev = polys[n - 2]
        if n % 2:
            p = indefinite_sum(n * prev) + explicit.p_at_zero(n)
        else:
            def op(q, n=n):
                return (2 * X + n - 1) * q - (2 * X + n - 2) * q.shift(-1)

            p = _solve_triangular(op, Fraction(n, 2) * prev, expected_degree(n))
        polys.append(p)
    return PSequence(polys)


def p_via_explicit(N: int) -> PSequence:
    """Closed-form values P_n(0..m) turned into a polynomial by Newton's formula."""
    polys = []
    for n in range(1, N + 1):
        m = expected_degree(n)
        diffs = forward_differences([explicit.p_explicit(n, k) for k in range(m + 1)])
        polys.append(from_binomial_ascending(diffs))
    return PSequence(polys)


ROUTES = {
    "recursion": p_sequence,
    "explicit": p_via_explicit,
    "bisection": p_via_bisection,
    "shift": p_via_shift,
    "homogeneous": p_via_homogeneous,
}


def check_routes(N: int) -> list[IdentityCheck]:
    """Compare every generator against the defining recursion, n = 1..N."""
    ref = p_sequence(N)
    out = []
    for name, route in ROUTES.items():
        if name == "recursion":
            continue
        t = Tally(f"route:{name}", (1, N))
        seq = route(N)
        for n in range(1, N + 1):
            t.eq(seq[n], ref[n], n=n)
        out.append(t.result())
    return out


# ---------------------------------------------------------------------------
# T_n(k) identities
# ---------------------------------------------------------------------------

def check_t_identities(n_max: int = 60, k_max: int = 30) -> list[IdentityCheck]:
    """Recurrences of the kernel T_n(k), each over its own domain.

    Every T argument stays inside n >= 1, k >= 1, so e.g. the k-lowering
    relation starts at k = 2.
    """
    T = explicit.t_value
    C = binomial
    out = []

    t = Tally("5.1", (1, n_max), (1, k_max), "two summation orders of T_n(k)")
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            t.eq(explicit.t_nk(n, k), explicit.t_nk_reindexed(n, k), n=n, k=k)
    out.append(t.result())

    t = Tally("6.1", (2, n_max), (1, k_max))
    for n in range(2, n_max + 1):
        for k in range(1, k_max + 1):
            t.eq(T(n, k) - 2 * T(n - 1, k), C(n + 2 * k - 2, k - 1), n=n, k=k)
    out.append(t.result())

    t = Tally("6.2", (3, n_max), (2, k_max))
    for n in range(3, n_max + 1):
        for k in range(2, k_max + 1):
            t.eq(T(n, k) - 4 * T(n - 2, k), C(n + 2 * k - 2, k - 1) + 2 * C(n + 2 * k - 3, k - 1), n=n, k=k)
    out.append(t.result())

    t = Tally("7.1", (3, n_max), (1, k_max))
    for n in range(3, n_max + 1):
        for k in range(1, k_max + 1):
            t.eq(T(n, k) - T(n - 2, k + 1), C(n + 2 * k - 1, k), n=n, k=k)
    out.append(t.result())

    t = Tally("8.2", (1, n_max), (1, k_max))
    for n in range(1, n_max + 1):
        for k in range(1, k_max + 1):
            t.eq(T(n, k + 1), 4 * T(n, k) - Fraction(n, k) * C(n + 2 * k - 1, k - 1), n=n, k=k)
    out.append(t.result())

    t = Tally("8.4", (2, n_max), (2, k_max))
    for n in range(2, n_max + 1):
        for k in range(2, k_max + 1):
            t.eq((n + k - 1) * (T(n, k) - 4 * T(n, k - 1)), n * (T(n - 1, k) - 2 * T(n, k - 1)), n=n, k=k)
    out.append(t.result())

    t = Tally("8.9", (2, n_max), (2, k_max))
    for n in range(2, n_max + 1):
        for k in range(2, k_max + 1):
            t.eq(2 * T(n, k) - T(n - 1, k + 1), C(n + 2 * k - 1, k), n=n, k=k)
    out.append(t.result())

    t = Tally("4.6", (0, n_max), (1, k_max), "exact rationals on both sides")
    for k in range(1, k_max + 1):
        for n in range(0, n_max + 1):
            lhs, rhs = explicit.identity_4_6(k, n)
            t.eq(lhs, rhs, n=n, k=k)
    out.append(t.result())
    return out


def check_explicit_formulas(n_max: int = 60, k_max: int = 30, r_k_max: int = 12,
                            r_n_max: int = 40, anchor_k_max: int = 20) -> list[IdentityCheck]:
    """Closed forms against each other and against the recursion oracle."""
    seq = p_sequence(n_max)
    out = []

    t = Tally("1.6=1.7", (1, n_max), (1, k_max), "binomial and double-factorial forms")
    t_or = Tally("oracle", (1, n_max), (0, k_max), "closed-form P_n(k) vs recursion")
    t_r = Tally("2.1", (1, n_max), (1, k_max), "P_n(k) through R_k(n)")
    t_53 = Tally("5.3", (1, n_max), (1, k_max), "P_n(k) = 2^-(k-1) c_n(k) T_n(k)")
    for n in range(1, n_max + 1):
        for k in range(0, k_max + 1):
            v = explicit.p_explicit(n, k)
            t_or.eq(Fraction(v), seq[n](k), n=n, k=k)
            if k:
                t.eq(explicit.p_binomial_form(n, k), explicit.p_double_factorial_form(n, k), n=n, k=k)
                t_r.eq(explicit.p_via_r(n, k), v, n=n, k=k)
                t_53.eq(explicit.p_prefactor_form(n, k), v, n=n, k=k)
    out += [t.result(), t_53.result(), t_or.result(), t_r.result()]

    t = Tally("4.4", (1, r_n_max), (1, r_k_max), "closed R_k(n) vs recursion in k")
    for k in range(1, r_k_max + 1):
        rk = explicit.r_poly_rec(k)
        for n in range(1, r_n_max + 1):
            t.eq(explicit.r_closed(k, n), rk(n), n=n, k=k)
    out.append(t.result())

    t = Tally("2.7", (1, 1), (1, anchor_k_max), "R_k(1) anchor")
    for k in range(1, anchor_k_max + 1):
        t.eq(Fraction(explicit.r_anchor(k)), explicit.r_poly_rec(k)(1), k=k)
    out.append(t.result())

    t = Tally("3.3", (1, n_max), None, "P_n(0), P_n(1) closed forms")
    for n in range(1, n_max + 1):
        t.eq(explicit.p_at_zero_rec(n), explicit.p_at_zero_closed(n), n=n, at=0)
        t.eq(seq[n](0), explicit.p_at_zero_closed(n), n=n, at=0)
        t.eq(seq[n](1), explicit.p_at_one_closed(n), n=n, at=1)
    out.append(t.result())
    return out


# ---------------------------------------------------------------------------
# polynomial relations between consecutive P_n
# ---------------------------------------------------------------------------

def check_p_relations(N: int = 60) -> list[IdentityCheck]:
    """Each relation compared coefficient-by-coefficient as a polynomial identity."""
    P = p_sequence(N)
    tallies = {key: Tally(key, rng) for key, rng in [
        ("6.3", (3, N)), ("6.4", (4, N)), ("7.3", (4, N)), ("7.4", (3, N)),
        ("8.1", (3, N)), ("8.3", (3, N)), ("8.7", (3, N)), ("8.8", (4, N)),
        ("8.11", (4, N)), ("8.12", (3, N)),
    ]}
    for n in range(3, N + 1):
        p, p1 = P[n], P[n - 1]
        if n % 2:
            h = (n - 1) // 2
            tallies["6.3"].eq((2 * X + n - 2) * p,
                              2 * (X + n - 1) * (X + n - 2) * P[n - 2]
                              + (4 * X + 3 * n - 4) * rising_from(0, h - 1), n=n)
            shift_rel = 2 * (X + n - 1) * p1 + rising_from(0, h - 1)
            tallies["7.4"].eq(p, shift_rel, n=n)
            tallies["8.1"].eq(p, shift_rel, n=n)
            tallies["8.3"].eq((2 * X + n) * p.shift(1), 2 * (X + n) * p - n * l_poly(n), n=n)
            tallies["8.7"].eq(p - p.shift(-1), n * p1, n=n)
            tallies["8.12"].eq(p, (2 * X + n) * p1.shift(1) + rising_from(1, h), n=n)
            continue
        h = n // 2
        tallies["6.4"].eq((2 * X + n - 1) * p,
                          2 * (X + n - 1) * (X + n - 2) * P[n - 2]
                          + HALF * (4 * X + 3 * n - 4) * rising_from(0, (n - 2) // 2 - 1), n=n)
        tallies["7.3"].eq(p, (X + n - 1) * P[n - 2].shift(1) + rising_from(1, h - 1), n=n)
        tallies["8.1"].eq((2 * X + n - 1) * p, (X + n - 1) * p1 + rising_from(0, h - 1), n=n)
        tallies["8.3"].eq((2 * X + n + 1) * p.shift(1),
                          2 * (X + n) * p - Fraction(n, 2) * rising_from(1, h - 1), n=n)
        tallies["8.8"].eq((2 * X + n - 1) * p, (2 * X + n - 2) * p.shift(-1) + Fraction(n, 2) * p1, n=n)
        tallies["8.11"].eq(2 * p, p1.shift(1) + rising_from(1, h - 1), n=n)
    return [t.result() for t in tallies.values()]


# ---------------------------------------------------------------------------
# congruences
# ---------------------------------------------------------------------------

def parity_companion(n: int, i: int) -> Fraction:
    """The coefficient polynomial that a_i(n) agrees with mod 2.

    Even n: half the coefficient of x^(m-i) in (4x+3n-4)(x+(n-4)/2)...(x+1)x;
    odd n: the coefficient of x^(m-i) in (4x+3n-4)(x+(n-3)/2)...(x+1)x.
    """
    m = expected_degree(n)
    return _companion_product(n).coeffs[m - i] / (1 if n % 2 else 2)


@lru_cache(maxsize=None)
def _companion_product(n: int) -> Poly:
    top = (n - 3) // 2 if n % 2 else (n - 4) // 2
    return (4 * X + 3 * n - 4) * rising_from(0, top)


def check_congruences(N: int = 60, k_max: int | None = None) -> list[IdentityCheck]:
    """n | P_n(k) - P_n(0) for odd n, its partial-sum form, and the mod-2 companions.

    ``k_max`` defaults to deg P_n + 2 for each n.
    """
    P = p_sequence(N)
    t13 = Tally("8.13", (3, N), (0, k_max) if k_max is not None else None,
                "n | P_n(k) - P_n(0), odd n")
    t14 = Tally("8.14", (3, N), (0, k_max) if k_max is not None else None,
                "sum_{i<=k} P_{n-1}(i) = (P_n(k) - P_n(0))/n")
    t10 = Tally("9.10", (3, N), None, "a_i(n) parity")
    for n in range(3, N + 1):
        p = P[n]
        m = expected_degree(n)
        if n % 2:
            top = k_max if k_max is not None else m + 2
            p0 = p(0)
            partial = Fraction(0)
            for k in range(0, top + 1):
                pk = p(k)
                if k:
                    partial += P[n - 1](k)
                t13.check((pk - p0) % n == 0, n=n, k=k, value=pk - p0)
                t14.eq(partial, (pk - p0) / n, n=n, k=k)
        if n >= 4 or n % 2:
            desc = p.descending()
            for i in range(m + 1):
                comp = parity_companion(n, i)
                ok = comp.denominator == 1 and (desc[i] - comp) % 2 == 0
                t10.check(ok, n=n, i=i, a=desc[i], companion=comp)
    return [t13.result(), t14.result(), t10.result()]


def identity_10_8(k: int, r: int) -> tuple[Fraction, Fraction]:
    lhs = sum((Fraction(binomial(k + j - 1, j), 1 << j) for j in range(k)), Fraction(0))
    inner = sum((Fraction((-1) ** j * binomial(k - 2 * r - 1, j), 1 << j) for j in range(k)), Fraction(0))
    return lhs, 2 ** (2 * k - 2 * r - 2) * inner


def modp_primes(n: int, k: int) -> list[tuple[int, int]]:
    """(r, p) with p = n + 2k - 1 - 2r prime and r in the admissible range for k's parity."""
    r_max = (k - 2) // 2 if k % 2 == 0 else (k - 1) // 2
    return [(r, n + 2 * k - 1 - 2 * r) for r in range(r_max + 1) if is_prime(n + 2 * k - 1 - 2 * r)]


def check_modp(n_max: int = 60, k_max_108: int = 12) -> list[IdentityCheck]:
    """T_n(k) ≡ 0 (mod p) for the large primes p dividing the binomial denominator (even n),
    plus the rational identity that closes the argument."""
    t = Tally("10.6", (4, n_max), None, "T_n(k) ≡ 0 mod p, p = n+2k-1-2r prime, even n")
    for n in range(4, n_max + 1, 2):
        for k in range(2, (n - 1) // 2 + 1):
            for r, p in modp_primes(n, k):
                t.check(explicit.t_value(n, k) % p == 0, n=n, k=k, r=r, p=p)
    t8 = Tally("10.8", (0, 0), (1, k_max_108), "left side also equals 2^(k-1)")
    for k in range(1, k_max_108 + 1):
        for r in range((k - 1) // 2 + 1):
            lhs, rhs = identity_10_8(k, r)
            t8.eq(lhs, rhs, k=k, r=r)
            t8.eq(lhs, Fraction(2 ** (k - 1)), k=k, r=r, side="lhs")
    return [t.result(), t8.result()]


def run_all(n_max: int = 60, k_max: int = 30) -> list[IdentityCheck]:
    return (check_routes(n_max) + check_t_identities(n_max, k_max)
            + check_explicit_formulas(n_max, k_max) + check_p_relations(n_max)
            + check_congruences(n_max) + check_modp(n_max))
