"""Decide from coefficients alone whether an order 3 or 4 equation is iterative.

Two independent methods are provided: explicit polynomial conditions on the
standard-form coefficients, and reduction to normal form followed by a check
of the normal-form template.  :func:`is_iterative` runs both and insists they
agree.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from iterode.errors import ConsistencyError, UnsupportedOrderError
from iterode.exact import RationalFunction
from iterode.normal_form import LinearODE, gauge_reduce

COEFFICIENT_CONDITION = "coefficient-condition"
NORMAL_PATTERN = "normal-pattern"


@dataclass(frozen=True)
class IterativityReport:
    order: int
    residuals: tuple[RationalFunction, ...]
    verdict: bool
    method: str

    @classmethod
    def from_residuals(cls, order: int, residuals, method: str) -> "IterativityReport":
        residuals = tuple(residuals)
        return cls(order, residuals, all(r.is_zero() for r in residuals), method)


def _require_order(ode: LinearODE, allowed: tuple[int, ...]) -> None:
    if ode.order not in allowed:
        raise UnsupportedOrderError(
            f"iterativity is characterized only for orders 3 and 4; "
            f"got an order-{ode.order} equation"
        )


def laguerre3(ode: LinearODE) -> IterativityReport:
    """Residual ``54c0 - 18c1c2 + 4c2^3 - 27c1' + 18c2c2' + 9c2''``."""
    _require_order(ode, (3,))
    c0, c1, c2 = ode.coeffs
    d_c1 = c1.derivative()
    d_c2 = c2.derivative()
    res = (c0 * 54 - c1 * c2 * 18 + c2 ** 3 * 4 - d_c1 * 27
           + c2 * d_c2 * 18 + d_c2.derivative() * 9)
    return IterativityReport.from_residuals(3, [res], COEFFICIENT_CONDITION)


def criteria4(ode: LinearODE) -> IterativityReport:
    """The two polynomial conditions characterizing iterative fourth-order equations."""
    _require_order(ode, (4,))
    c0, c1, c2, c3 = ode.coeffs
    c2_1 = c2.derivative()
    c2_2 = c2_1.derivative()
    c3_1 = c3.derivative()
    c3_2 = c3_1.derivative()
    c3_3 = c3_2.derivative()
    first = c2 * c3 * 4 - c3 ** 3 + c2_1 * 8 - c3 * c3_1 * 6 - c3_2 * 4 - c1 * 8
    second = (
        c0 * 1600
        - c2 * c2 * 144
        + c3 ** 4 * 11
        - c3 * c2_1 * 400
        + c3 * c3 * c3_1 * 288
        + c3_1 * c3_1 * 336
        + c2 * (c3 * c3 + c3_1 * 4) * 8
        - c2_2 * 480
        + c3 * c3_2 * 560
        + c3_3 * 320
    )
    return IterativityReport.from_residuals(4, [first, second], COEFFICIENT_CONDITION)


def normal_pattern_check(ode: LinearODE) -> IterativityReport:
    """Reduce to normal form and test ``Q0 = Q1'/2`` (order 3) or
    ``Q1 = Q2'`` and ``Q0 = 3/10 Q2'' + 9/100 Q2^2`` (order 4)."""
    _require_order(ode, (3, 4))
    q = gauge_reduce(ode).coeffs
    if ode.order == 3:
        residuals = [q[0] - q[1].derivative() * Fraction(1, 2)]
    else:
        q2_1 = q[2].derivative()
        residuals = [
            q[1] - q2_1,
            q[0] - q2_1.derivative() * Fraction(3, 10) - q[2] * q[2] * Fraction(9, 100),
        ]
    return IterativityReport.from_residuals(ode.order, residuals, NORMAL_PATTERN)


def is_iterative(ode: LinearODE) -> IterativityReport:
    """Coefficient-condition report, cross-checked against the normal pattern."""
    _require_order(ode, (3, 4))
    primary = laguerre3(ode) if ode.order == 3 else criteria4(ode)
    check = normal_pattern_check(ode)
    if primary.verdict != check.verdict:
        raise ConsistencyError(
            f"methods disagree on order-{ode.order} equation {ode}: "
            f"{COEFFICIENT_CONDITION}={primary.verdict}, {NORMAL_PATTERN}={check.verdict}"
        )
    return primary
