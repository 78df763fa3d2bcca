"""Coefficients of iterated first-order operators ``Psi = r d/dx + s``.

``Psi^n y = sum_j K[n, j] * y^(n-j)``.  The coefficients ``K[n, j]`` are
differential polynomials in ``r`` and ``s``; this module computes them along
four independent routes (row recurrence, single-index sum, the nested
multi-sum and its re-indexed form) plus the ``r = 1`` closed form, and builds
the normal-form coefficients ``A[n, j]`` obtained by choosing
``s = -(n-1)/2 * r'``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, TypeVar

from iterode.errors import ConsistencyError
from iterode.exact import RationalFunction, as_rf
from iterode.jet import (
    DiffRational,
    JetPoly,
    diffrat_reduce,
    jet_eliminate_s,
    jet_sum,
    jet_var,
)
from iterode.normal_form import LinearODE

R = jet_var("r")
S = jet_var("s")
ONE = JetPoly.const(1)
ZERO = JetPoly()

F = TypeVar("F", JetPoly, RationalFunction)


def psi_apply(f: F, r=None, s=None) -> F:
    """``r*f' + s*f``; defaults to the symbolic jets ``r`` and ``s``.

    Works for any ``f`` with a ``derivative()`` method, so the same code acts
    on jet polynomials and on concrete rational functions.
    """
    if r is None:
        r = R
    if s is None:
        s = S
    return r * f.derivative() + s * f


@lru_cache(maxsize=None)
def _psi(f: JetPoly) -> JetPoly:
    return psi_apply(f)


def _rpow(k: int) -> JetPoly:
    return JetPoly.var("r", 0, k)


def _check_j(n: int, j: int, lo: int) -> None:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if not lo <= j <= n:
        raise ValueError(f"j must satisfy {lo} <= j <= n = {n}, got {j}")


# -- route 1: row recurrence K[n,j] = r K[n-1,j] + Psi K[n-1,j-1] ------------

@lru_cache(maxsize=None)
def _recurrence_row(m: int) -> tuple[JetPoly, ...]:
    if m == 0:
        return (ONE,)
    prev = _recurrence_row(m - 1)
    row = []
    for j in range(m + 1):
        left = R * prev[j] if j < m else ZERO
        right = _psi(prev[j - 1]) if j >= 1 else ZERO
        row.append(left + right)
    return tuple(row)


@dataclass(frozen=True)
class CoefficientTable:
    """All ``K[m, j]`` for ``0 <= m <= order``; out-of-range entries read as 0."""

    order: int
    entries: dict = field(repr=False)

    def __getitem__(self, key: tuple[int, int]) -> JetPoly:
        m, j = key
        if m < 0 or m > self.order:
            raise IndexError(f"row {m} not stored (order {self.order})")
        return self.entries.get((m, j), ZERO)

    def row(self, m: int) -> list[JetPoly]:
        return [self[m, j] for j in range(m + 1)]


def coeffs_recurrence(n: int) -> CoefficientTable:
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    entries = {}
    for m in range(n + 1):
        for j, k in enumerate(_recurrence_row(m)):
            entries[m, j] = k
    return CoefficientTable(n, entries)


# -- route 2: K[n,j] = sum_{k=j}^{n} r^(n-k) Psi K[k-1, j-1] -----------------

@lru_cache(maxsize=None)
def _algorithmic(n: int, j: int) -> JetPoly:
    if j == 0:
        return _rpow(n)
    return jet_sum(_rpow(n - k) * _psi(_algorithmic(k - 1, j - 1)) for k in range(j, n + 1))


def coeffs_algorithmic(n: int, j: int) -> JetPoly:
    _check_j(n, j, 0)
    return _algorithmic(n, j)


# -- route 3: nested multi-sum over the (k_1..k_j) frame ---------------------

@dataclass(frozen=True)
class MultiSumFrame:
    """One index tuple ``ks = (k_1, ..., k_j)`` of the nested multi-sum."""

    n: int
    j: int
    ks: tuple[int, ...]

    def k(self, u: int) -> int:
        return self.ks[u - 1]

    def beta(self, i: int) -> int:
        """``k_{i+1} + ... + k_j``."""
        return sum(self.ks[i:])

    def upper(self, i: int) -> int:
        """Upper bound ``M_i = n + C(j,2) - C(i,2) - beta_i`` for ``k_i``."""
        return self.n + comb(self.j, 2) - comb(i, 2) - self.beta(i)

    @property
    def alpha(self) -> int:
        return self.upper(0)

    def term(self) -> JetPoly:
        """``r^(k_j-j) Psi[ ... r^(k_1-1) Psi[r^alpha] ... ]``."""
        e = _rpow(self.alpha)
        for i in range(1, self.j + 1):
            e = _rpow(self.k(i) - i) * _psi(e)
        return e


def closed_form_frames(n: int, j: int) -> Iterator[MultiSumFrame]:
    """Enumerate the frame outermost index first; empty ranges yield nothing."""
    base = n + comb(j, 2)

    def walk(i: int, suffix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if i == 0:
            yield suffix
            return
        upper = base - comb(i, 2) - sum(suffix)
        for k in range(i, upper + 1):
            yield from walk(i - 1, (k,) + suffix)

    for ks in walk(j, ()):
        yield MultiSumFrame(n, j, ks)


def coeffs_closed_form(n: int, j: int) -> JetPoly:
    _check_j(n, j, 1)
    return jet_sum(frame.term() for frame in closed_form_frames(n, j))


def term_count(n: int, j: int) -> int:
    """Number of index tuples in the multi-sum frame for ``(n, j)``."""
    _check_j(n, j, 0)
    return sum(1 for _ in closed_form_frames(n, j))


# -- route 4: strictly increasing indices 1 <= k_1 < ... < k_j <= n ----------

def _simplified_term(n: int, ks: tuple[int, ...]) -> JetPoly:
    e = _rpow(ks[0] - 1)
    bounds = ks[1:] + (n + 1,)
    for k_lo, k_hi in zip(ks, bounds):
        e = _rpow(k_hi - k_lo - 1) * _psi(e)
    return e


def coeffs_simplified(n: int, j: int) -> JetPoly:
    _check_j(n, j, 1)
    return jet_sum(
        _simplified_term(n, ks) for ks in itertools.combinations(range(1, n + 1), j)
    )


# -- r = 1 ----------------------------------------------------------------

def coeffs_unit_r(n: int) -> list[JetPoly]:
    """``[C(n,j) * Psi^(j-1) s for j = 0..n]`` with ``Psi = d/dx + s``.

    The ``j = 0`` entry uses the convention ``Psi^(-1) s = 1``.
    """
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    out = [ONE]
    power = S
    for j in range(1, n + 1):
        out.append(power.scale(comb(n, j)))
        power = psi_apply(power, r=ONE)
    return out


# -- normal form ------------------------------------------------------------

@lru_cache(maxsize=None)
def _normal_coeffs(n: int) -> tuple[DiffRational, ...]:
    row = _recurrence_row(n)
    k1 = jet_eliminate_s(row[1], n)
    if not k1.is_zero():
        raise ConsistencyError(f"K[{n},1] does not vanish after s-elimination: {k1}")
    return tuple(diffrat_reduce(jet_eliminate_s(row[j], n), n) for j in range(2, n + 1))


def normal_coeffs(n: int) -> list[DiffRational]:
    """``[A[n,2], ..., A[n,n]]``: coefficients of ``y^(n-2), ..., y`` in normal form."""
    if n < 2:
        raise ValueError(f"normal form needs n >= 2, got {n}")
    return list(_normal_coeffs(n))


def a_invariant() -> DiffRational:
    """``(r'^2 - 2 r r'') / (4 r^2)``."""
    r1, r2 = jet_var("r", 1), jet_var("r", 2)
    return diffrat_reduce((r1 * r1 - R * r2 * 2).scale(Fraction(1, 4)), 2)


# -- concrete equations -----------------------------------------------------

def _concrete_rows(n: int, r: RationalFunction, s: RationalFunction) -> list[RationalFunction]:
    row = [RationalFunction.const(1)]
    zero = RationalFunction.const(0)
    for m in range(1, n + 1):
        new = []
        for j in range(m + 1):
            left = r * row[j] if j < m else zero
            right = psi_apply(row[j - 1], r, s) if j >= 1 else zero
            new.append(left + right)
        row = new
    return row


def generate_concrete(n: int, r, s) -> LinearODE:
    """Monic form of ``Psi^n y = 0`` for concrete ``r(x)``, ``s(x)``."""
    r, s = as_rf(r), as_rf(s)
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if r.is_zero():
        raise ValueError("degenerate source equation: r is identically zero")
    row = _concrete_rows(n, r, s)
    lead = row[0]
    return LinearODE(n, tuple(row[n - i] / lead for i in range(n)))


def generate_normal_concrete(n: int, r) -> LinearODE:
    """Iterative equation of order ``n`` in normal form for a concrete ``r(x)``."""
    r = as_rf(r)
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    if r.is_zero():
        raise ValueError("degenerate source equation: r is identically zero")
    coeffs = [RationalFunction.const(0)] * n
    if n >= 2:
        for j, a in enumerate(normal_coeffs(n), start=2):
            coeffs[n - j] = a.substitute({"r": r})
    return LinearODE(n, tuple(coeffs))
