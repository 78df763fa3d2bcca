"""
Four ways to expand an iterated first-order operator
====================================================

Take Psi = r(x) d/dx + s(x).  Applying it n times to y produces a linear
expression in y, y', ..., y^(n), and the coefficient of y^(n-j) is written
K[n, j].  This script computes those coefficients along every route the
library offers and shows that they coincide term by term.
"""
from math import comb

import iterode
from iterode.core import closed_form_frames

# The recurrence is the workhorse.  It fills a triangular table row by row,
# and every entry is an exact differential polynomial in r, s and their
# derivatives.
table = iterode.coeffs_recurrence(3)
for j in range(4):
    print(f"K[3,{j}] =", table[3, j])

# The same numbers can be reached without the table.  The algorithmic sum
# reuses lower-order coefficients, the closed multi-sum enumerates integer
# frames, and the simplified sum runs over increasing tuples k1 < ... < kj.
n = 5
print()
for j in range(1, n + 1):
    routes = {
        "recurrence": iterode.coeffs_recurrence(n)[n, j],
        "algorithmic": iterode.coeffs_algorithmic(n, j),
        "closed": iterode.coeffs_closed_form(n, j),
        "simplified": iterode.coeffs_simplified(n, j),
    }
    values = set(str(v) for v in routes.values())
    print(f"n={n} j={j}: {len(values)} distinct result(s) across {len(routes)} routes")

# Each closed-form frame contributes one nested term.  The number of frames
# is a binomial coefficient, which is easy to check by counting.
print()
for j in range(4):
    count = iterode.term_count(6, j)
    print(f"term_count(6, {j}) = {count}   C(6,{j}) = {comb(6, j)}")
print("first frame for (6, 3):", next(iter(closed_form_frames(6, 3))).ks)

# When r is the constant 1 the expansion collapses to a binomial pattern:
# K[n, j] = C(n, j) * Psi^(j-1) s.
print()
for j, k in enumerate(iterode.coeffs_unit_r(4)):
    print(f"r = 1: K[4,{j}] =", k)
