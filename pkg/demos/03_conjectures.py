"""
Checking the conjectures
========================

Run the seven conjecture checks up to n = 161 and look at some of the data
behind them.
"""

from fractions import Fraction

from polyseq import conjectures
from polyseq.pseq import p_sequence

reports = conjectures.run_all(161)
for r in reports:
    print(r.conjecture_id, r.status, r.n_range, r.details)

# ## Content against n/rad(n)
seq = p_sequence(161)
for n in (12, 36, 81, 128, 160):
    print(n, seq[n].content(), n // conjectures.rad(n))

# ## Rational roots
# Only n = 3 and multiples of 4 have one, and it is -n/2 (or -4/3).
for n in range(3, 25):
    roots, tested = conjectures.rational_roots(seq[n])
    print(n, roots, tested)

# ## Ratios of coefficients for even n
r = conjectures.check_c6(12)
print([str(Fraction(v)) for v in r.details["ratios"]])
