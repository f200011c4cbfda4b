"""
The first polynomials
=====================

Build P_1..P_12 from the defining recursion, print them in both bases and
look at the values at 0 and 1.
"""

# ## The recursion
# Odd steps divide by 4(2x+n), which must be exact; even steps only divide by 4.
from polyseq import p_sequence
from polyseq.coeffs import to_binomial
from polyseq.pseq import expected_degree

seq = p_sequence(12)
for n, p in seq.items():
    print(f"P_{n:<2} = {p}")

# ## Binomial basis
# Integer coefficients over C(x, i) come straight from Newton's forward differences.
for n, p in seq.items():
    print(f"P_{n:<2} = {to_binomial(p, expected_degree(n))}")

# ## Values at 0 and 1
# P_n(0) = 4^m m! and P_n(1) has a parity-split closed form.
from polyseq.explicit import p_at_one, p_at_zero

for n in range(1, 13):
    print(n, p_at_zero(n), p_at_one(n), int(seq[n](0)), int(seq[n](1)))

# ## Explicit values at other integers
from polyseq.explicit import p_explicit

print([p_explicit(12, k) for k in range(6)])
print([int(seq[12](k)) for k in range(6)])
