"""Exact integer/rational kernel: dense univariate polynomials and combinatorics.

Integers are Python ints and rationals are :class:`fractions.Fraction`, so
nothing here can overflow or round.  A :class:`Poly` stores its coefficients
in ascending order (``coeffs[i]`` multiplies ``x**i``) with no trailing zeros.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction]

NEG_INF = -math.inf


class NonZeroRemainder(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Poly:
    """Immutable dense polynomial over the rationals."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def linear(cls, a: Number, b: Number = 1) -> "Poly":
        """The polynomial ``b*x + a``."""
        return cls((a, b))

    @classmethod
    def from_descending(cls, coeffs: Sequence[Number]) -> "Poly":
        return cls(reversed(list(coeffs)))

    # -- basic properties ---------------------------------------------------
    @property
    def degree(self):
        """Degree, or ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> list[int]:
        """Ascending integer coefficients; raises if any is fractional."""
        if not self.is_integral():
            raise ValueError(f"non-integral coefficients in {self}")
        return [c.numerator for c in self.coeffs]

    def descending(self) -> list[Fraction]:
        return list(reversed(self.coeffs))

    def content(self) -> int:
        """gcd of the (integer) coefficients; 0 for the zero polynomial."""
        return math.gcd(*self.int_coeffs()) if self.coeffs else 0

    # -- arithmetic ---------------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Poly | None":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(c * other for c in self.coeffs)
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = Poly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x: Number) -> Fraction:
        """Horner evaluation."""
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, delta: Number) -> "Poly":
        """Return ``q`` with ``q(x) = self(x + delta)`` (Taylor shift)."""
        c = list(self.coeffs)
        if delta == 0 or len(c) < 2:
            return self
        d = _frac(delta)
        n = len(c)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                c[j] += d * c[j + 1]
        return Poly(c)

    def divmod(self, den: "Poly") -> tuple["Poly", "Poly"]:
        if den.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dc = den.coeffs
        dd = len(dc) - 1
        if len(rem) - 1 < dd:
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - dd)
        lead = dc[-1]
        for i in range(len(rem) - 1, dd - 1, -1):
            q = rem[i] / lead
            if q:
                quot[i - dd] = q
                for j in range(dd + 1):
                    rem[i - dd + j] -= q * dc[j]
        return Poly(quot), Poly(rem[:dd])

    def exact_div(self, den: "Poly | Number") -> "Poly":
        """Quotient ``q`` with ``self == q * den``; NonZeroRemainder otherwise."""
        den = self._coerce(den)
        q, r = self.divmod(den)
        if not r.is_zero():
            raise NonZeroRemainder(f"({self}) / ({den}) leaves remainder {r}")
        return q

    # -- display ------------------------------------------------------------
    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_terms(self.descending(), lambda i: _xpow(i), len(self.coeffs) - 1)


def _xpow(i: int) -> str:
    return "" if i == 0 else ("x" if i == 1 else f"x^{i}")


def format_terms(desc_coeffs: Sequence[Number], basis_name, top: int) -> str:
    """Render ``sum c_j * basis(top - j)`` the way the sequence listings read.

    ``basis_name(i)`` gives the symbol for the i-th basis element (empty for
    the constant one).
    """
    parts = []
    for j, c in enumerate(desc_coeffs):
        if c == 0:
            continue
        sym = basis_name(top - j)
        mag = abs(c)
        if mag == 1 and sym:
            body = sym
        elif sym and getattr(mag, "denominator", 1) != 1:
            body = f"({mag}){sym}"
        else:
            body = f"{mag}{sym}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("-" if c < 0 else "+") + body)
    return "".join(parts) or "0"


def linear_product(offsets: Iterable[Number]) -> Poly:
    """``prod (x + a)`` over the given offsets; the empty product is 1."""
    out = Poly.const(1)
    for a in offsets:
        out = out * Poly.linear(a)
    return out


# ---------------------------------------------------------------------------
# combinatorics
# ---------------------------------------------------------------------------

def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial undefined for n={n}")
    return math.factorial(n)


def double_factorial(n: int) -> int:
    """n!! with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n}")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def falling_factorial(x: Number, k: int):
    """x(x-1)...(x-k+1); 1 for k = 0."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = 1
    for j in range(k):
        out *= x - j
    return out


def binomial(n: int, k: int) -> int:
    """Binomial coefficient, with C(n, k) = 0 for k < 0 and any integer n."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k)
    return falling_factorial(n, k) // math.factorial(k)


_stirling_rows: list[list[int]] = [[1]]


def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind S(n, m)."""
    if n < 0 or m < 0:
        raise ValueError("stirling2 needs n, m >= 0")
    if m > n:
        return 0
    rows = _stirling_rows
    while len(rows) <= n:
        prev = rows[-1]
        r = len(rows)
        row = [0] * (r + 1)
        for j in range(1, r + 1):
            row[j] = (j * prev[j] if j < r else 0) + prev[j - 1]
        rows.append(row)
    return rows[n][m]


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the B_1 = -1/2 convention."""
    if n == 0:
        return Fraction(1)
    return -sum((math.comb(n + 1, j) * bernoulli(j) for j in range(n)), Fraction(0)) / (n + 1)


@lru_cache(maxsize=None)
def power_sum(p: int) -> Poly:
    """Faulhaber polynomial F with F(n) = 1^p + 2^p + ... + n^p."""
    coeffs = [Fraction(0)] * (p + 2)
    for j in range(p + 1):
        b = bernoulli(j)
        if j == 1:
            b = -b  # the sum up to n needs B_1 = +1/2
        coeffs[p + 1 - j] += math.comb(p + 1, j) * b / (p + 1)
    return Poly(coeffs)


def indefinite_sum(f: Poly) -> Poly:
    """Polynomial S with S(n) = f(1) + ... + f(n), so S(0) = 0."""
    out = Poly()
    for p, c in enumerate(f.coeffs):
        if c:
            out = out + power_sum(p) * c
    return out


# ---------------------------------------------------------------------------
# interpolation and the binomial basis
# ---------------------------------------------------------------------------

def interpolate(xs: Sequence[Number], ys: Sequence[Number]) -> Poly:
    """Newton divided-difference interpolation through (xs[i], ys[i])."""
    if len(xs) != len(ys):
        raise ValueError("xs and ys differ in length")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    xs = [_frac(x) for x in xs]
    dd = [_frac(y) for y in ys]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    out = Poly()
    for i in range(n - 1, -1, -1):
        out = out * Poly.linear(-xs[i]) + dd[i]
    return out


def forward_differences(values: Sequence[Number]) -> list:
    """[f(0), Δf(0), Δ²f(0), ...] from the samples f(0), f(1), ..."""
    row = list(values)
    out = []
    while row:
        out.append(row[0])
        row = [b - a for a, b in zip(row, row[1:])]
    return out


@lru_cache(maxsize=None)
def binomial_basis_poly(i: int) -> Poly:
    """C(x, i) = (x)_i / i! as a power-basis polynomial."""
    return linear_product(-j for j in range(i)) * Fraction(1, math.factorial(i))


def from_binomial_ascending(coeffs: Sequence[Number]) -> Poly:
    """Power-basis form of ``sum coeffs[i] * C(x, i)``."""
    out = Poly()
    for i, c in enumerate(coeffs):
        if c:
            out = out + binomial_basis_poly(i) * c
    return out


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine for the few-thousand range used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True
