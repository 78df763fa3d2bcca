"""Exact univariate rational-function arithmetic in the variable ``x``.

Scalars are :class:`fractions.Fraction`.  :class:`Poly` stores coefficients
lowest degree first; :class:`RationalFunction` keeps a coprime numerator and
a monic denominator so that equal functions compare equal structurally.
"""
from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Union

Rational = Fraction

#: Degree of the zero polynomial.
ZERO_DEGREE = -math.inf

#: Intermediate polynomials above this degree raise :class:`ResourceLimitError`.
DEFAULT_DEGREE_CAP = 512
_degree_cap = DEFAULT_DEGREE_CAP


class ResourceLimitError(ArithmeticError):
    """Raised when an intermediate polynomial exceeds the degree cap."""


def set_degree_cap(cap: int) -> int:
    """Set the global degree cap and return the previous one."""
    global _degree_cap
    if cap < 1:
        raise ValueError("degree cap must be positive")
    old, _degree_cap = _degree_cap, cap
    return old


def get_degree_cap() -> int:
    return _degree_cap


Scalar = Union[int, Fraction]


def _strip(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    if len(cs) - 1 > _degree_cap:
        raise ResourceLimitError(
            f"polynomial degree {len(cs) - 1} exceeds cap {_degree_cap}"
        )
    return tuple(cs)


class Poly:
    """Dense univariate polynomial over the rationals."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _strip(coeffs)
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @property
    def degree(self):
        """Degree as an int, or :data:`ZERO_DEGREE` for the zero polynomial."""
        if not self.coeffs:
            return ZERO_DEGREE
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, _RationalABC)):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([a[i] + b[i] for i in range(len(b))] + list(a[len(b):]))

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial exponent must be a non-negative int")
        result, base = Poly.const(1), self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c: Scalar) -> "Poly":
        return Poly(c * a for a in self.coeffs)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(1 / self.lc())

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv = 1 / other.lc()
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1 - db, -1, -1):
            q = rem[i + db] * inv
            if q:
                quot[i] = q
                for j, bj in enumerate(other.coeffs):
                    rem[i + j] -= q * bj
        return Poly(quot), Poly(rem[:db])

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i)

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __str__(self):
        return render_poly(self)


def _as_poly(obj):
    if isinstance(obj, Poly):
        return obj
    if isinstance(obj, (int, _RationalABC)):
        return Poly.const(obj)
    return NotImplemented


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; ``poly_gcd(0, 0)`` is the zero polynomial."""
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RationalFunction:
    """Canonical quotient ``num/den`` of polynomials in ``x``.

    Build instances through :func:`rf_normalize` (or the arithmetic
    operators); the constructor assumes its arguments are already canonical.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Poly, den: Poly, _canonical: bool = False):
        if not _canonical:
            num, den = _normalize_pair(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> "RationalFunction":
        return cls(Poly.const(c), Poly.const(1), True)

    @classmethod
    def x(cls) -> "RationalFunction":
        return cls(Poly.x(), Poly.const(1), True)

    @classmethod
    def from_poly(cls, p: Poly) -> "RationalFunction":
        return cls(p, Poly.const(1), True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.den.degree == 0 and self.num.degree in (0, ZERO_DEGREE)

    def __eq__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("RF", self.num.coeffs, self.den.coeffs))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({render_rf(self)!r})"

    def __str__(self):
        return render_rf(self)

    def __neg__(self):
        return RationalFunction(-self.num, self.den, True)

    def __add__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return rf_normalize(self.num + other.num, self.den)
        return rf_normalize(self.num * other.den + other.num * self.den,
                            self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return rf_normalize(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return rf_normalize(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ValueError("exponent must be an int")
        if k < 0:
            return RationalFunction.const(1) / (self ** -k)
        return RationalFunction(self.num ** k, self.den ** k, True)

    def derivative(self) -> "RationalFunction":
        return rf_derivative(self)

    def __call__(self, value):
        d = self.den(value)
        if d == 0:
            raise ZeroDivisionError(f"pole at x = {value}")
        return self.num(value) / d


def _as_rf(obj):
    if isinstance(obj, RationalFunction):
        return obj
    if isinstance(obj, Poly):
        return RationalFunction.from_poly(obj)
    if isinstance(obj, (int, _RationalABC)):
        return RationalFunction.const(obj)
    return NotImplemented


def _normalize_pair(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if den.is_zero():
        raise ZeroDivisionError("rational function with zero denominator")
    if num.is_zero():
        return Poly(), Poly.const(1)
    g = poly_gcd(num, den)
    if g.degree > 0:
        num = num.divmod(g)[0]
        den = den.divmod(g)[0]
    lc = den.lc()
    if lc != 1:
        num, den = num.scale(1 / lc), den.scale(1 / lc)
    return num, den


def rf_normalize(num: Poly, den: Poly) -> RationalFunction:
    """Canonical representative of ``num/den`` (coprime, monic denominator)."""
    return RationalFunction(*_normalize_pair(num, den), _canonical=True)


def rf_derivative(f: RationalFunction) -> RationalFunction:
    if f.den.degree == 0:
        return RationalFunction(f.num.derivative(), f.den, True)
    return rf_normalize(f.num.derivative() * f.den - f.num * f.den.derivative(),
                        f.den * f.den)


def rf_is_zero(f: RationalFunction) -> bool:
    return f.num.is_zero()


def as_rf(obj) -> RationalFunction:
    """Coerce ints, fractions and polynomials to :class:`RationalFunction`."""
    out = _as_rf(obj)
    if out is NotImplemented:
        raise TypeError(f"cannot interpret {obj!r} as a rational function")
    return out


# -- rendering -------------------------------------------------------------

def _render_scalar(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def render_poly(p: Poly) -> str:
    """Render highest degree first, e.g. ``3/4*x^3 - x + 1/2``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for deg in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[deg]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if deg == 0:
            body = _render_scalar(mag)
        else:
            xs = "x" if deg == 1 else f"x^{deg}"
            body = xs if mag == 1 else f"{_render_scalar(mag)}*{xs}"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def _is_compound(p: Poly) -> bool:
    return sum(1 for c in p.coeffs if c) > 1


def render_rf(f: RationalFunction) -> str:
    """Canonical text form, parseable by :func:`iterode.parser.parse_expression`."""
    num = render_poly(f.num)
    if f.den == 1:
        return num
    den = render_poly(f.den)
    if _is_compound(f.num):
        num = f"({num})"
    if _is_compound(f.den) or "*" in den or "/" in den:
        den = f"({den})"
    return f"{num}/{den}"
