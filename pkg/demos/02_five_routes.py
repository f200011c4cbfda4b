"""
Five ways to the same sequence
==============================

The defining recursion, explicit values pushed through Newton's formula, the
two-step relation within a parity class, the division-free shift relation and
the homogeneous difference relation all build P_n independently.
"""

import time

from polyseq.identities import ROUTES

N = 60
built = {}
for name, route in ROUTES.items():
    t0 = time.perf_counter()
    built[name] = route(N)
    print(f"{name:12s} {time.perf_counter() - t0:6.2f}s")

# ## Compare
ref = built["recursion"]
for name, seq in built.items():
    print(name, seq == ref)

# ## The largest one
print(ref[N])
