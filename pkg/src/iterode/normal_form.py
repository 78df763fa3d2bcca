"""Monic linear ODEs and their integration-free reduction to normal form.

The gauge change ``y = w*E`` is parametrised by the logarithmic derivative
``g' = E'/E`` only.  With ``h_0 = 1`` and ``h_{m+1} = h_m' + g'*h_m`` one has
``(w*E)^(k) = E * sum_i C(k, i) * w^(i) * h_{k-i}``, so ``E`` cancels and no
antiderivative is ever needed.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from iterode.errors import ConsistencyError
from iterode.exact import RationalFunction, as_rf


@dataclass(frozen=True)
class LinearODE:
    """``y^(n) + c_{n-1} y^(n-1) + ... + c_0 y = 0``; ``coeffs[i]`` multiplies ``y^(i)``."""

    order: int
    coeffs: tuple[RationalFunction, ...]

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("order must be at least 1")
        coeffs = tuple(as_rf(c) for c in self.coeffs)
        if len(coeffs) != self.order:
            raise ValueError(
                f"order {self.order} equation needs {self.order} coefficients, "
                f"got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "LinearODE":
        return cls(len(coeffs), tuple(coeffs))

    def __getitem__(self, i: int) -> RationalFunction:
        return self.coeffs[i]

    def with_coeff(self, i: int, value) -> "LinearODE":
        cs = list(self.coeffs)
        cs[i] = as_rf(value)
        return LinearODE(self.order, tuple(cs))

    def __str__(self):
        return render_ode(self)


def _dvar(name: str, k: int) -> str:
    if k == 0:
        return name
    if k <= 3:
        return name + "'" * k
    return f"{name}^({k})"


def render_ode(ode: LinearODE, var: str = "y") -> str:
    """E.g. ``y''' + 3*x*y'' + (3*x^2 + 3)*y' + (x^3 + 3*x)*y = 0``."""
    parts = [_dvar(var, ode.order)]
    for i in range(ode.order - 1, -1, -1):
        c = ode.coeffs[i]
        if c.is_zero():
            continue
        text = str(c)
        if c == 1:
            parts.append(f"+ {_dvar(var, i)}")
        elif c == -1:
            parts.append(f"- {_dvar(var, i)}")
        elif " " in text or "/" in text:
            parts.append(f"+ ({text})*{_dvar(var, i)}")
        elif text.startswith("-"):
            parts.append(f"- {text[1:]}*{_dvar(var, i)}")
        else:
            parts.append(f"+ {text}*{_dvar(var, i)}")
    return " ".join(parts) + " = 0"


def gauge_sequence(gp: RationalFunction, count: int) -> list[RationalFunction]:
    """``[h_0, ..., h_count]`` with ``h_0 = 1``, ``h_{m+1} = h_m' + gp*h_m``.

    ``h_m`` equals ``E^(m)/E`` for any ``E`` with ``E'/E = gp``.
    """
    h = [RationalFunction.const(1)]
    for _ in range(count):
        h.append(h[-1].derivative() + gp * h[-1])
    return h


def gauge_transform(ode: LinearODE, gp) -> LinearODE:
    """Coefficients of the equation satisfied by ``w`` where ``y = w*E``, ``E'/E = gp``."""
    n = ode.order
    gp = as_rf(gp)
    h = gauge_sequence(gp, n)
    full = list(ode.coeffs) + [RationalFunction.const(1)]
    new = []
    for i in range(n):
        acc = RationalFunction.const(0)
        for k in range(i, n + 1):
            if not full[k].is_zero():
                acc = acc + full[k] * h[k - i] * comb(k, i)
        new.append(acc)
    return LinearODE(n, tuple(new))


def gauge_reduce(ode: LinearODE) -> LinearODE:
    """Remove the ``y^(n-1)`` term with ``g' = -c_{n-1}/n``."""
    n = ode.order
    sub = ode.coeffs[n - 1]
    if sub.is_zero():
        return ode
    out = gauge_transform(ode, sub * Fraction(-1, n))
    if not out.coeffs[n - 1].is_zero():
        raise ConsistencyError(f"gauge reduction left y^({n - 1}) coefficient {out.coeffs[n - 1]}")
    return out


def standard_from_normal3(a, c2) -> LinearODE:
    """Standard third-order iterative equation with normal datum ``a`` and ``y''`` coefficient ``c2``."""
    a, c2 = as_rf(a), as_rf(c2)
    da, dc2 = a.derivative(), c2.derivative()
    ddc2 = dc2.derivative()
    c1 = a + dc2 + c2 * c2 * Fraction(1, 3)
    c0 = (da * 27 + ddc2 * 18 + a * c2 * 18 + dc2 * c2 * 18 + c2 ** 3 * 2) * Fraction(1, 54)
    return LinearODE(3, (c0, c1, c2))


def standard_from_normal4(a, c3) -> LinearODE:
    """Fourth-order analogue of :func:`standard_from_normal3`, ``c3`` multiplying ``y'''``."""
    a, c3 = as_rf(a), as_rf(c3)
    da = a.derivative()
    dda = da.derivative()
    d1 = c3.derivative()
    d2 = d1.derivative()
    d3 = d2.derivative()
    c2 = (a * 8 + c3 * c3 * 3 + d1 * 12) * Fraction(1, 8)
    c1 = a * c3 * Fraction(1, 2) + c3 ** 3 * Fraction(1, 16) + da + c3 * d1 * Fraction(3, 4) + d2
    c0 = (
        a * a * 576
        + a * (d1 * 4 + c3 * c3) * 400
        + (d1 * d1 * 15 + dda * 24 + d3 * 20) * 80
        + (da + d2) * c3 * 1600
        + d1 * c3 * c3 * 600
        + c3 ** 4 * 25
    ) * Fraction(1, 6400)
    return LinearODE(4, (c0, c1, c2, c3))
