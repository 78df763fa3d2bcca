"""Random inputs and brute-force oracles shared by the test modules."""
from __future__ import annotations

import random
from fractions import Fraction

from hypothesis import strategies as st

from iterode.exact import Poly, RationalFunction, rf_normalize

small_ints = st.integers(min_value=-4, max_value=4)
small_fracs = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@st.composite
def polys(draw, max_degree=3):
    return Poly(draw(st.lists(small_fracs, max_size=max_degree + 1)))


@st.composite
def nonzero_polys(draw, max_degree=2):
    p = draw(polys(max_degree))
    if p.is_zero():
        p = Poly.const(draw(st.integers(1, 3)))
    return p


@st.composite
def rational_functions(draw, max_degree=2):
    return rf_normalize(draw(polys(max_degree)), draw(nonzero_polys(max_degree)))


@st.composite
def nonzero_rational_functions(draw, max_degree=2):
    return rf_normalize(draw(nonzero_polys(max_degree)), draw(nonzero_polys(max_degree)))


def random_poly(rng: random.Random, max_degree: int = 2, nonzero: bool = False) -> Poly:
    while True:
        deg = rng.randint(0, max_degree)
        p = Poly(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(deg + 1))
        if not (nonzero and p.is_zero()):
            return p


def random_rf(rng: random.Random, max_degree: int = 2, nonzero: bool = False) -> RationalFunction:
    num = random_poly(rng, max_degree, nonzero)
    den = random_poly(rng, 1, nonzero=True)
    return rf_normalize(num, den)


def compose_psi_oracle(n: int, r: RationalFunction, s: RationalFunction) -> list[RationalFunction]:
    """Apply ``r d/dx + s`` n times to a generic ``y`` tracked as ``{k: coeff of y^(k)}``.

    Returns the monic coefficients ``[c_0, ..., c_{n-1}]``.
    """
    op = {0: RationalFunction.const(1)}
    for _ in range(n):
        new: dict[int, RationalFunction] = {}
        for k, a in op.items():
            new[k] = new.get(k, RationalFunction.const(0)) + r * a.derivative() + s * a
            new[k + 1] = new.get(k + 1, RationalFunction.const(0)) + r * a
        op = new
    lead = op[n]
    return [op[k] / lead for k in range(n)]
