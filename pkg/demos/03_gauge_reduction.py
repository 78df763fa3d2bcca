"""
Removing the subleading term without integrating
================================================

Any monic linear ODE can be brought to normal form by y = w * E(x).  The
library never computes E.  It only needs g' = E'/E = -c_{n-1}/n, which is
rational whenever the coefficients are.
"""
from iterode import LinearODE, RationalFunction, gauge_reduce, generate_concrete, generate_normal_concrete
from iterode.normal_form import gauge_sequence

x = RationalFunction.x()

# A small second-order case: y'' + 2x y' + (x^2 + 1) y = 0 has nothing left
# after the gauge change: the reduced equation is just w'' = 0.
ode = LinearODE(2, (x * x + 1, x * 2))
print(ode, "  ->  ", gauge_reduce(ode))

# The helper sequence h_m satisfies h_{m+1} = h_m' + g' h_m; it encodes
# the derivatives of E divided by E.
print("h_0..h_4 for g' = -x:", [str(h) for h in gauge_sequence(-x, 4)])

# Reducing an iterative equation lands exactly on the normal-form generator
# for the same r, whatever s was used.
r, s = x + 2, 1 / x
for n in (2, 3, 4):
    reduced = gauge_reduce(generate_concrete(n, r, s))
    print(f"order {n}:", reduced == generate_normal_concrete(n, r), "|", reduced)

# A second pass changes nothing.
print("idempotent:", gauge_reduce(reduced) == reduced)
