"""
The normal form and the invariant A(r)
======================================

Choosing s = -(n-1)/2 * r' kills the y^(n-1) term of Psi^n y.  After
dividing by r^n, the remaining coefficients A[n, j] depend on r alone.
"""
from fractions import Fraction
from math import comb

from iterode import RationalFunction, a_invariant, generate_normal_concrete, normal_coeffs

a = a_invariant()
print("A(r) =", a)

# The leading surviving coefficient is always a binomial multiple of A(r).
for n in range(2, 7):
    a2 = normal_coeffs(n)[0]
    print(f"A[{n},2] = {comb(n + 1, 3)} * A(r):", a2 == a * comb(n + 1, 3))

# Orders three and four follow fixed templates in terms of A[n,2].
a2, a3 = normal_coeffs(3)
print("\norder 3: A[3,3] == A[3,2]'/2 ->", a3 == a2.derivative() * Fraction(1, 2))
a2, a3, a4 = normal_coeffs(4)
print("order 4: A[4,3] == A[4,2]' ->", a3 == a2.derivative())
rhs = a2.derivative().derivative() * Fraction(3, 10) + a2 * a2 * Fraction(9, 100)
print("order 4: A[4,4] == 3/10 A'' + 9/100 A^2 ->", a4 == rhs)

# Plugging in a concrete r gives an actual equation.
x = RationalFunction.x()
print()
print(generate_normal_concrete(3, x * x + 1))
# r = x^2 makes A vanish, so the normal form degenerates to y^(4) = 0.
print(generate_normal_concrete(4, x * x))
