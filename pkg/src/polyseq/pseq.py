"""The polynomial sequence P_1, P_2, ... built by its defining recursion.

This module is the reference oracle; every other generator in the package is
compared against it, so it uses nothing but the recursion itself.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import Sequence

from .exact import NonZeroRemainder, Poly, linear_product

_QUARTER = Fraction(1, 4)


def l_poly(n: int) -> Poly:
    """(x + (n-1)/2)(x + (n-3)/2)...(x + 1) for odd n; 1 when n = 1."""
    if n < 1 or n % 2 == 0:
        raise ValueError(f"l_poly needs an odd positive index, got {n}")
    return linear_product(range((n - 1) // 2, 0, -1))


def expected_degree(n: int) -> int:
    return (n - 1) // 2


def p_step(n: int, pn: Poly) -> Poly:
    """P_{n+1} from P_n, for n >= 2."""
    if n < 2:
        raise ValueError("the recursion starts at n = 2")
    x = Poly.x()
    shifted = pn.shift(1)
    if n % 2:
        rhs = 2 * (x + n) * pn + (2 * x + n) * shifted + (4 * x + n) * l_poly(n)
        return rhs.exact_div(4 * (2 * x + n))
    rhs = 4 * (x + n) * pn + 2 * (2 * x + n + 1) * shifted + (4 * x + n) * l_poly(n - 1)
    return rhs * _QUARTER


def validate(n: int, p: Poly) -> None:
    """Integrality and degree ⌊(n-1)/2⌋, or ArithmeticError."""
    if not p.is_integral():
        raise ArithmeticError(f"P_{n} has a non-integral coefficient: {p}")
    if p.degree != expected_degree(n):
        raise ArithmeticError(f"P_{n} has degree {p.degree}, expected {expected_degree(n)}")


class PSequence:
    """P_1..P_max_n, indexed from 1."""

    __slots__ = ("polys", "max_n")

    def __init__(self, polys: Sequence[Poly]):
        self.polys = tuple(polys)
        self.max_n = len(self.polys)

    def __getitem__(self, n: int) -> Poly:
        if not 1 <= n <= self.max_n:
            raise IndexError(f"P_{n} outside 1..{self.max_n}")
        return self.polys[n - 1]

    def __len__(self):
        return self.max_n

    def __iter__(self):
        return iter(self.polys)

    def __eq__(self, other):
        if not isinstance(other, PSequence):
            return NotImplemented
        return self.polys == other.polys

    def items(self):
        return enumerate(self.polys, start=1)


_cache: list[Poly] = []
_lock = threading.Lock()


def p_sequence(N: int) -> PSequence:
    """P_1..P_N, each checked for integrality and degree as it is produced."""
    if N < 1:
        raise ValueError("N must be at least 1")
    with _lock:
        if not _cache:
            _cache.extend([Poly.const(1), Poly.const(1)])
        while len(_cache) < N:
            n = len(_cache)
            try:
                nxt = p_step(n, _cache[-1])
                validate(n + 1, nxt)
            except (NonZeroRemainder, ArithmeticError) as exc:
                raise type(exc)(f"step n={n} -> P_{n + 1}: {exc}") from exc
            _cache.append(nxt)
        return PSequence(_cache[:N])


def clear_cache() -> None:
    """Forget every memoized P_n (used to time cold runs)."""
    with _lock:
        _cache.clear()
