"""Published tables for the sequence, kept verbatim for regression checks.

Everything is written in the factored or descending form in which it is
usually printed and expanded here with exact arithmetic.
"""
from __future__ import annotations

from fractions import Fraction

from .exact import Poly, linear_product


def _desc(*coeffs) -> Poly:
    return Poly.from_descending(coeffs)


def _factored(scale: Fraction, roots, *tail_desc) -> Poly:
    """scale * prod (n - r) * (tail polynomial, descending coefficients)."""
    return linear_product(-r for r in roots) * _desc(*tail_desc) * scale


# P_1..P_12, descending powers of x
P_POWER = {
    1: (1,), 2: (1,),
    3: (3, 4), 4: (2, 4),
    5: (5, 25, 32), 6: (3, 19, 32),
    7: (7, 77, 294, 384), 8: (4, 52, 240, 384),
    9: (9, 174, 1323, 4614, 6144), 10: (5, 110, 967, 3934, 6144),
    11: (11, 330, 4169, 27258, 90992, 122880),
    12: (6, 200, 2842, 21040, 79832, 122880),
}

# same polynomials over C(x, m), C(x, m-1), ..., C(x, 0)
P_BINOMIAL = {
    1: (1,), 2: (1,),
    3: (3, 4), 4: (2, 4),
    5: (10, 30, 32), 6: (6, 22, 32),
    7: (42, 196, 378, 384), 8: (24, 128, 296, 384),
    9: (216, 1368, 3816, 6120, 6144), 10: (120, 840, 2664, 5016, 6144),
    11: (1320, 10560, 38544, 84480, 122760, 122880),
    12: (760, 6240, 25152, 62112, 103920, 122880),
}

# (n, index) -> value consistent with P_POWER and with b_0(n) = (n/2)! for even n;
# the printed 760 disagrees with P_12 itself at x = 5 and x = 6.
P_BINOMIAL_ERRATA = {(12, 0): 720}


def p_binomial_corrected(n: int) -> tuple:
    row = list(P_BINOMIAL[n])
    for (m, i), v in P_BINOMIAL_ERRATA.items():
        if m == n:
            row[i] = v
    return tuple(row)


# R_1..R_6 in the variable n, descending
R_POLYS = {
    1: (1,), 2: (1, 4), 3: (1, 11, 32), 4: (1, 21, 152, 384),
    5: (1, 34, 443, 2642, 6144),
    6: (1, 50, 1015, 10510, 55864, 122880),
}

F = Fraction

# a_i(n) for odd n (U) and even n (V)
U = {
    0: _desc(1, 0),
    1: _factored(F(1, 24), (1, 0), 7, -5),
    2: _factored(F(1, 640), (3, 1, 0), 29, -44, 7),
    3: _factored(F(1, 322560), (5, 3, 1, 0), 1581, -3775, 1587, 223),
}
V = {
    0: _desc(F(1, 2), 0),
    1: _factored(F(1, 48), (2, 0), 7, -4),
    2: _factored(F(1, 3840), (4, 2, 0), 87, -98, 16),
    3: _factored(F(1, 645120), (6, 4, 2, 0), 1581, -2686, 936, 64),
}

# b_i(n) / (m-i)! for odd n (Y) and even n (Z)
Y = {
    0: _desc(1, 0),
    1: _factored(F(1, 12), (1, 0), 5, -7),
    2: _factored(F(1, 480), (3, 1, 0), 43, -168, 149),
    3: _factored(F(1, 13440), (5, 3, 1, 0), 177, -1319, 3063, -2161),
}
Z = {
    0: _desc(F(1, 2), 0),
    1: _factored(F(1, 24), (2, 0), 5, -8),
    2: _factored(F(1, 960), (4, 2, 0), 43, -182, 184),
    3: _factored(F(1, 26880), (6, 4, 2, 0), 3, -8) * _desc(59, -306, 352),
}

# Q_k(n) = S(n+k, n)
Q = {
    0: Poly.const(1),
    1: _factored(F(1, 2), (0, -1), 1),
    2: _factored(F(1, 24), (0, -1, -2), 3, 1),
    3: _factored(F(1, 48), (0, 0, -1, -1, -2, -3), 1),
    4: _factored(F(1, 5760), (0, -1, -2, -3, -4), 15, 30, 5, -2),
}

del F
