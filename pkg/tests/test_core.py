import itertools
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, strategies as st

from helpers import compose_psi_oracle, random_rf
from iterode.core import (
    CoefficientTable,
    MultiSumFrame,
    a_invariant,
    closed_form_frames,
    coeffs_algorithmic,
    coeffs_closed_form,
    coeffs_recurrence,
    coeffs_simplified,
    coeffs_unit_r,
    generate_concrete,
    generate_normal_concrete,
    normal_coeffs,
    psi_apply,
    term_count,
)
from iterode.exact import RationalFunction
from iterode.jet import JetPoly, jet_eliminate_s, jet_substitute, jet_var, specialize_constant
from iterode.normal_form import LinearODE

X = RationalFunction.x()
ONE = JetPoly.const(1)
r, r1, r2 = (jet_var("r", k) for k in range(3))
s, s1, s2 = (jet_var("s", k) for k in range(3))
PSI_S = r * s1 + s * s


def rp(k):
    return JetPoly.var("r", 0, k)


# -- psi ------------------------------------------------------------------------

def test_psi_examples():
    assert psi_apply(ONE) == s
    assert psi_apply(s) == r * s1 + s * s
    assert psi_apply(r) == r * r1 + s * r


def test_psi_concrete():
    assert psi_apply(X * X, r=X, s=RationalFunction.const(1)) == X * X * 3


# -- recurrence -----------------------------------------------------------------

def test_recurrence_n1():
    t = coeffs_recurrence(1)
    assert t[1, 0] == r and t[1, 1] == s


def test_recurrence_n2():
    t = coeffs_recurrence(2)
    assert t[2, 0] == r * r
    assert t[2, 1] == r * (s * 2 + r1)
    assert t[2, 2] == r * s1 + s * s


def test_recurrence_n3_j1():
    assert coeffs_recurrence(3)[3, 1] == r * r * (s * 3 + r1 * 3)


def test_table_conventions():
    t = coeffs_recurrence(5)
    assert isinstance(t, CoefficientTable)
    assert t[0, 0] == ONE
    for m in range(6):
        assert t[m, -1].is_zero() and t[m, m + 1].is_zero()
    for m in range(1, 6):
        assert t[m, 0] == rp(m)
    # K[m,m] = Psi^(m-1) s
    power = s
    for m in range(1, 6):
        assert t[m, m] == power
        power = psi_apply(power)
    with pytest.raises(IndexError):
        t[6, 0]


@pytest.mark.parametrize("n", range(1, 9))
def test_first_coefficient_formula(n):
    expected = rp(n - 1) * (s * n + r1 * comb(n, 2))
    assert coeffs_recurrence(n)[n, 1] == expected


@pytest.mark.parametrize("n", range(2, 9))
def test_second_coefficient_formula(n):
    inner = PSI_S * comb(n, 2) + (s * r1 * 3 + r * r2 + (r1 * r1).scale(Fraction(3 * n - 5, 4))) * comb(n, 3)
    assert coeffs_recurrence(n)[n, 2] == rp(n - 2) * inner


# -- algorithmic / closed / simplified ---------------------------------------

def test_algorithmic_examples():
    assert coeffs_algorithmic(4, 0) == rp(4)
    assert coeffs_algorithmic(2, 1) == r * (s * 2 + r1)
    assert coeffs_algorithmic(3, 2) == r * (PSI_S * 3 + (s * r1 * 3 + r * r2 + r1 * r1))


@pytest.mark.parametrize("n", range(1, 7))
def test_closed_form_j1_is_single_sum(n):
    expected = sum((rp(k - 1) * psi_apply(rp(n - k)) for k in range(1, n + 1)), JetPoly())
    assert coeffs_closed_form(n, 1) == expected


def test_closed_form_examples():
    assert coeffs_closed_form(2, 1) == r * (s * 2 + r1)
    assert coeffs_closed_form(2, 2) == r * s1 + s * s


def test_simplified_examples():
    assert coeffs_simplified(2, 1) == r * s + psi_apply(r)
    assert coeffs_simplified(2, 1) == r * (s * 2 + r1)
    assert coeffs_simplified(3, 2) == coeffs_algorithmic(3, 2)
    power = s
    for n in range(1, 6):
        assert coeffs_simplified(n, n) == power
        power = psi_apply(power)


@pytest.mark.parametrize("fn", [coeffs_closed_form, coeffs_simplified])
def test_out_of_range_j(fn):
    with pytest.raises(ValueError):
        fn(3, 0)
    with pytest.raises(ValueError):
        fn(3, 4)
    with pytest.raises(ValueError):
        coeffs_algorithmic(3, 4)
    with pytest.raises(ValueError):
        coeffs_algorithmic(3, -1)


@pytest.mark.parametrize("n", range(1, 8))
def test_four_paths_agree(n):
    table = coeffs_recurrence(n)
    for j in range(1, n + 1):
        k = table[n, j]
        assert k == coeffs_algorithmic(n, j)
        assert k == coeffs_closed_form(n, j)
        assert k == coeffs_simplified(n, j)


# -- multi-sum frame ----------------------------------------------------------

def test_frame_quantities():
    f = MultiSumFrame(5, 3, (1, 3, 4))
    assert f.beta(0) == 8 and f.beta(1) == 7 and f.beta(3) == 0
    assert f.upper(3) == 5  # M_j = n always
    assert f.upper(2) == 5 + 3 - 1 - 4
    assert f.alpha == 5 + 3 - 8


@given(st.integers(1, 8).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_frames_respect_bounds(nj):
    n, j = nj
    for f in closed_form_frames(n, j):
        assert f.upper(j) == n
        for i in range(1, j + 1):
            assert i <= f.k(i) <= f.upper(i)
        assert f.alpha >= 0


def test_term_count_examples():
    assert term_count(7, 1) == 7
    assert term_count(3, 2) == 3
    assert term_count(12, 5) == 792


def _brute_count(n, j):
    # Enumerate all tuples in the box [1, n+C(j,2)]^j and keep those inside the frame.
    top = n + comb(j, 2)
    count = 0
    for ks in itertools.product(range(1, top + 1), repeat=j):
        if all(ks[i - 1] >= i for i in range(1, j + 1)) and all(
            ks[i - 1] <= n + comb(j, 2) - comb(i, 2) - sum(ks[i:]) for i in range(1, j + 1)
        ):
            count += 1
    return count


@pytest.mark.parametrize("n, j", [(n, j) for n in range(1, 6) for j in range(0, n + 1)])
def test_term_count_brute_force(n, j):
    assert term_count(n, j) == _brute_count(n, j) == comb(n, j)


def test_term_count_binomial_up_to_12():
    for n in range(1, 13):
        for j in range(n + 1):
            assert term_count(n, j) == comb(n, j)


# -- r = 1 ------------------------------------------------------------------

def test_unit_r_examples():
    assert coeffs_unit_r(2) == [ONE, s * 2, s1 + s * s]
    assert coeffs_unit_r(3)[3] == s2 + s * s1 * 3 + s ** 3
    assert coeffs_unit_r(4)[2] == (s1 + s * s) * 6


@pytest.mark.parametrize("n", range(1, 11))
def test_unit_r_matches_specialised_recurrence(n):
    row = coeffs_recurrence(n).row(n)
    assert [specialize_constant(k, "r") for k in row] == coeffs_unit_r(n)


# -- normal form ----------------------------------------------------------------

def test_normal_coeffs_n2():
    (a22,) = normal_coeffs(2)
    assert a22 == a_invariant()
    assert str(a22) == "1/4*(r'^2 - 2*r*r'')/r^2"


@pytest.mark.parametrize("n", range(2, 9))
def test_normal_a2_and_vanishing_k1(n):
    assert jet_eliminate_s(coeffs_recurrence(n)[n, 1], n).is_zero()
    assert normal_coeffs(n)[0] == a_invariant() * comb(n + 1, 3)


def test_normal_order3_template():
    a2, a3 = normal_coeffs(3)
    assert a3 == a2.derivative() * Fraction(1, 2)


def test_normal_order4_template():
    a2, a3, a4 = normal_coeffs(4)
    assert a3 == a2.derivative()
    assert a4 == a2.derivative().derivative() * Fraction(3, 10) + a2 * a2 * Fraction(9, 100)


def test_normal_coeffs_rejects_small_order():
    with pytest.raises(ValueError):
        normal_coeffs(1)


# -- concrete generation --------------------------------------------------------

def test_generate_concrete_order3():
    ode = generate_concrete(3, 1, X)
    assert ode == LinearODE(3, (X ** 3 + X * 3, X * X * 3 + 3, X * 3))


def test_generate_concrete_order1_trivial():
    assert generate_concrete(1, 1, 0) == LinearODE(1, (RationalFunction.const(0),))


def test_generate_concrete_order4():
    ode = generate_concrete(4, 1, X)
    assert ode.coeffs == (
        X ** 4 + X * X * 6 + 3,
        X ** 3 * 4 + X * 12,
        X * X * 6 + 6,
        X * 4,
    )


def test_generate_rejects_zero_r():
    with pytest.raises(ValueError):
        generate_concrete(3, 0, X)
    with pytest.raises(ValueError):
        generate_normal_concrete(3, 0)


@pytest.mark.parametrize("seed", range(6))
@pytest.mark.parametrize("n", range(1, 6))
def test_generate_matches_operator_composition(seed, n):
    rng = random.Random(1000 * n + seed)
    fr, fs = random_rf(rng, nonzero=True), random_rf(rng)
    ode = generate_concrete(n, fr, fs)
    assert list(ode.coeffs) == compose_psi_oracle(n, fr, fs)


@pytest.mark.parametrize("seed", range(3))
@pytest.mark.parametrize("n", range(1, 6))
def test_generate_matches_symbolic_substitution(seed, n):
    rng = random.Random(77 + 10 * n + seed)
    fr, fs = random_rf(rng, nonzero=True), random_rf(rng)
    b = {"r": fr, "s": fs}
    row = coeffs_recurrence(n).row(n)
    lead = jet_substitute(row[0], b)
    expected = tuple(jet_substitute(row[n - i], b) / lead for i in range(n))
    assert generate_concrete(n, fr, fs).coeffs == expected


def test_generate_normal_examples():
    assert generate_normal_concrete(2, 1) == LinearODE(2, (0, 0))
    ode = generate_normal_concrete(3, X * X + 1)
    c0, c1, c2 = ode.coeffs
    assert c2.is_zero()
    assert c0 == c1.derivative() * Fraction(1, 2)


def test_generate_normal_order4_r_squared():
    # A(x^2) = (4x^2 - 2*x^2*2)/(4x^4) = 0, so every coefficient vanishes.
    assert generate_normal_concrete(4, X * X) == LinearODE(4, (0, 0, 0, 0))
    ode = generate_normal_concrete(4, X ** 3 + 1)
    c0, c1, c2, c3 = ode.coeffs
    assert c3.is_zero() and c1 == c2.derivative()
    assert c0 == c2.derivative().derivative() * Fraction(3, 10) + c2 * c2 * Fraction(9, 100)
