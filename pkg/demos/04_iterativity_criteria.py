"""
Is a given equation an iterated first-order operator?
=====================================================

For orders three and four there are explicit differential conditions on the
coefficients.  Two independent tests are available.  One evaluates the
coefficient conditions directly, the other gauge-reduces first and checks the
normal-form pattern.  They must always agree.
"""
from iterode import (
    LinearODE,
    RationalFunction,
    criteria4,
    generate_concrete,
    is_iterative,
    laguerre3,
    normal_pattern_check,
    standard_from_normal3,
)

x = RationalFunction.x()

ode = generate_concrete(3, x, x * x - 1)
print(ode)
report = is_iterative(ode)
print("verdict:", report.verdict, "residuals:", [str(r) for r in report.residuals])

# Nudging the constant coefficient by one shifts the order-3 residual by
# exactly 54, and the order-4 constant-term residual by exactly 1600.
bumped = ode.with_coeff(0, ode.coeffs[0] + 1)
print("after c0 + 1:", [str(r) for r in laguerre3(bumped).residuals])
ode4 = generate_concrete(4, x, x * x - 1)
print("order 4 after c0 + 1:",
      [str(r) for r in criteria4(ode4.with_coeff(0, ode4.coeffs[0] + 1)).residuals])

# Both methods on a random-looking equation that is not iterative.
other = LinearODE(3, (x, 1 / (x + 1), x * x))
print("\ncoefficient condition:", laguerre3(other).verdict)
print("normal pattern:       ", normal_pattern_check(other).verdict)

# Going the other way: pick A(x) and c2(x) freely and rebuild an iterative
# third-order equation from them.
built = standard_from_normal3(1 / (x * x), x)
print("\nrebuilt:", built)
print("iterative:", is_iterative(built).verdict)
