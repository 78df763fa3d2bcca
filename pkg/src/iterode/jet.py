"""Differential polynomials in jet variables such as ``r, r', s''``.

A :class:`JetPoly` is a polynomial with rational coefficients in symbols
``JetVar(sym, k)`` standing for the k-th derivative of a named function of
``x``.  :meth:`JetPoly.derivative` is the total derivative.  Quotients whose
denominator is a power of ``r`` live in :class:`DiffRational`.
"""
from __future__ import annotations

import math
import re
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Union

from iterode.exact import RationalFunction, as_rf

_ALPHABET: set[str] = {"r", "s", "g", "a", "y", "w"} | {f"c{i}" for i in range(16)}
_SYMBOL_RE = re.compile(r"[a-z][a-z0-9_]*\Z")


class UnboundSymbolError(LookupError):
    """A jet symbol has no binding during substitution."""

    def __init__(self, symbol: str):
        super().__init__(f"no binding for jet symbol {symbol!r}")
        self.symbol = symbol


def register_symbol(name: str) -> None:
    """Add ``name`` to the registered jet alphabet."""
    if not _SYMBOL_RE.match(name):
        raise ValueError(f"invalid jet symbol name {name!r}")
    _ALPHABET.add(name)


def registered_symbols() -> frozenset[str]:
    return frozenset(_ALPHABET)


class JetVar(namedtuple("_JetVar", "symbol order")):
    """The ``order``-th derivative of the function named ``symbol``.

    Ordered lexicographically by ``(symbol, order)``.
    """

    __slots__ = ()

    def __new__(cls, symbol: str, order: int = 0):
        if symbol not in _ALPHABET:
            raise ValueError(f"unregistered jet symbol {symbol!r}")
        if order < 0:
            raise ValueError("jet order must be non-negative")
        return super().__new__(cls, symbol, order)

    def prime(self, k: int = 1) -> "JetVar":
        return JetVar(self.symbol, self.order + k)

    def __str__(self):
        return self.symbol + "'" * self.order


# A monomial is a sorted tuple of (JetVar, exponent) with positive exponents.
Monomial = tuple
ONE_MONOMIAL: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for v, e in b:
        exps[v] = exps.get(v, 0) + e
    return tuple(sorted(exps.items()))


def _mono_sort_key(m: Monomial):
    return tuple((v.symbol, v.order, e) for v, e in m)


Coeff = Union[int, Fraction]


class JetPoly:
    """Immutable polynomial over jet variables with rational coefficients."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff] | None = None):
        self.terms: dict[Monomial, Fraction] = {
            m: Fraction(c) for m, c in (terms or {}).items() if c != 0
        }
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "JetPoly":
        p = cls.__new__(cls)
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Coeff) -> "JetPoly":
        return cls({ONE_MONOMIAL: c})

    @classmethod
    def var(cls, symbol: str, order: int = 0, power: int = 1) -> "JetPoly":
        if power == 0:
            return cls.const(1)
        return cls._raw({((JetVar(symbol, order), power),): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == ONE_MONOMIAL for m in self.terms)

    def variables(self) -> set[JetVar]:
        return {v for m in self.terms for v, _ in m}

    def symbols(self) -> set[str]:
        return {v.symbol for v in self.variables()}

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = JetPoly.const(other)
        if not isinstance(other, JetPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"JetPoly({render_jet(self)!r})"

    def __str__(self):
        return render_jet(self)

    # -- arithmetic --

    def __neg__(self):
        return JetPoly._raw({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = _as_jet(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return JetPoly._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_jet(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, JetPoly):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return JetPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = JetPoly.const(1)
        for _ in range(k):
            result = result * self
        return result

    def scale(self, c: Coeff) -> "JetPoly":
        if c == 0:
            return JetPoly()
        c = Fraction(c)
        return JetPoly._raw({m: c * v for m, v in self.terms.items()})

    def derivative(self) -> "JetPoly":
        return jet_derive(self)

    def max_order(self, symbol: str) -> int:
        """Highest derivative order of ``symbol`` present, or -1 if absent."""
        return max((v.order for v in self.variables() if v.symbol == symbol), default=-1)

    def subs(self, mapping: Callable[[JetVar], "JetPoly | None"]) -> "JetPoly":
        """Replace each jet variable ``v`` by ``mapping(v)`` (None keeps ``v``)."""
        cache: dict[JetVar, JetPoly | None] = {}
        pieces: list[JetPoly] = []
        for m, c in self.terms.items():
            term = JetPoly.const(c)
            kept: list = []
            for v, e in m:
                if v not in cache:
                    cache[v] = mapping(v)
                img = cache[v]
                if img is None:
                    kept.append((v, e))
                else:
                    term = term * img ** e
                    if term.is_zero():
                        break
            if term.is_zero():
                continue
            pieces.append(term * JetPoly._raw({tuple(kept): Fraction(1)}))
        return jet_sum(pieces)

    def divides_by(self, v: JetVar) -> bool:
        """True if every monomial contains ``v`` (and the poly is nonzero)."""
        return bool(self.terms) and all(any(u == v for u, _ in m) for m in self.terms)

    def divide_by_var(self, v: JetVar) -> "JetPoly":
        out = {}
        for m, c in self.terms.items():
            exps = dict(m)
            if v not in exps:
                raise ArithmeticError(f"{v} does not divide {self}")
            exps[v] -= 1
            if not exps[v]:
                del exps[v]
            out[tuple(sorted(exps.items()))] = c
        return JetPoly._raw(out)


def _as_jet(obj):
    if isinstance(obj, JetPoly):
        return obj
    if isinstance(obj, (int, Fraction)):
        return JetPoly.const(obj)
    return NotImplemented


def jet_var(symbol: str, order: int = 0) -> JetPoly:
    return JetPoly.var(symbol, order)


def jet_derive(p: JetPoly) -> JetPoly:
    """Total derivative d/dx, sending ``JetVar(sym, k)`` to ``JetVar(sym, k+1)``."""
    out: dict = {}
    for m, c in p.terms.items():
        for i, (v, e) in enumerate(m):
            rest = m[:i] + ((v, e - 1),) + m[i + 1:] if e > 1 else m[:i] + m[i + 1:]
            nm = _mono_mul(rest, ((v.prime(), 1),))
            val = out.get(nm, 0) + c * e
            if val:
                out[nm] = val
            else:
                out.pop(nm, None)
    return JetPoly._raw(out)


def jet_substitute(p: JetPoly, bindings: Mapping[str, object]) -> RationalFunction:
    """Evaluate ``p`` with each symbol bound to a concrete rational function.

    ``JetVar(sym, k)`` evaluates to the k-th derivative of ``bindings[sym]``.
    """
    derivs: dict[str, list[RationalFunction]] = {}

    def value(v: JetVar) -> RationalFunction:
        if v.symbol not in bindings:
            raise UnboundSymbolError(v.symbol)
        seq = derivs.setdefault(v.symbol, [as_rf(bindings[v.symbol])])
        while len(seq) <= v.order:
            seq.append(seq[-1].derivative())
        return seq[v.order]

    total = RationalFunction.const(0)
    for m, c in p.terms.items():
        term = RationalFunction.const(c)
        for v, e in m:
            term = term * value(v) ** e
        total = total + term
    return total


def jet_eliminate_s(p: JetPoly, n: int) -> JetPoly:
    """Replace every ``s^(k)`` by ``-(n-1)/2 * r^(k+1)``.

    This is the choice of ``s`` that makes the order-``n`` iterate normal.
    """
    if n < 2:
        raise ValueError("s-elimination needs n >= 2")
    foreign = p.symbols() - {"r", "s"}
    if foreign:
        raise ValueError(f"jet_eliminate_s: unexpected symbols {sorted(foreign)}")
    factor = Fraction(-(n - 1), 2)

    def repl(v: JetVar):
        if v.symbol == "s":
            return JetPoly.var("r", v.order + 1).scale(factor)
        return None

    return p.subs(repl)


def specialize_constant(p: JetPoly, symbol: str, value: Coeff = 1) -> JetPoly:
    """Set ``symbol`` to a constant: order 0 becomes ``value``, higher orders 0."""

    def repl(v: JetVar):
        if v.symbol != symbol:
            return None
        return JetPoly.const(value) if v.order == 0 else JetPoly()

    return p.subs(repl)


R0 = JetVar("r", 0)


@dataclass(frozen=True)
class DiffRational:
    """``num / r**rpow`` with ``num`` not divisible by ``r`` when ``rpow > 0``."""

    num: JetPoly
    rpow: int = 0

    def __post_init__(self):
        if self.rpow < 0:
            raise ValueError("rpow must be non-negative")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _lift(self, k: int) -> JetPoly:
        return self.num * JetPoly.var("r", 0, k - self.rpow)

    def __add__(self, other):
        other = _as_dr(other)
        if other is NotImplemented:
            return other
        k = max(self.rpow, other.rpow)
        return diffrat_reduce(self._lift(k) + other._lift(k), k)

    __radd__ = __add__

    def __neg__(self):
        return DiffRational(-self.num, self.rpow)

    def __sub__(self, other):
        other = _as_dr(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_dr(other)
        if other is NotImplemented:
            return other
        return diffrat_reduce(self.num * other.num, self.rpow + other.rpow)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        return diffrat_reduce(self.num ** k, self.rpow * k)

    def derivative(self) -> "DiffRational":
        # d(P/r^k) = (P' r - k P r') / r^(k+1)
        k = self.rpow
        if k == 0:
            return DiffRational(jet_derive(self.num), 0)
        r, r1 = JetPoly.var("r"), JetPoly.var("r", 1)
        return diffrat_reduce(jet_derive(self.num) * r - self.num * r1 * k, k + 1)

    def substitute(self, bindings: Mapping[str, object]) -> RationalFunction:
        val = jet_substitute(self.num, bindings)
        if self.rpow:
            val = val / jet_substitute(JetPoly.var("r", 0, self.rpow), bindings)
        return val

    def __str__(self):
        return render_diffrat(self)


def _as_dr(obj):
    if isinstance(obj, DiffRational):
        return obj
    if isinstance(obj, (int, Fraction, JetPoly)):
        return DiffRational(_as_jet(obj), 0)
    return NotImplemented


def diffrat_reduce(num: JetPoly, rpow: int) -> DiffRational:
    """Cancel common factors of ``r`` between ``num`` and ``r**rpow``."""
    if rpow < 0:
        raise ValueError("rpow must be non-negative")
    if num.is_zero():
        return DiffRational(num, 0)
    while rpow > 0 and num.divides_by(R0):
        num = num.divide_by_var(R0)
        rpow -= 1
    return DiffRational(num, rpow)


# -- rendering -------------------------------------------------------------

def _render_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _render_monomial(m: Monomial) -> str:
    return "*".join(str(v) if e == 1 else f"{v}^{e}" for v, e in m)


def _render_terms(terms: dict) -> str:
    parts: list[str] = []
    for m in sorted(terms, key=_mono_sort_key, reverse=True):
        c = terms[m]
        mag = abs(c)
        if not m:
            body = _render_coeff(mag)
        elif mag == 1:
            body = _render_monomial(m)
        else:
            body = f"{_render_coeff(mag)}*{_render_monomial(m)}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{'+' if c > 0 else '-'} {body}")
    return " ".join(parts)


def common_monomial(p: JetPoly) -> Monomial:
    """Largest monomial dividing every term of ``p``."""
    monos = list(p.terms)
    if not monos:
        return ONE_MONOMIAL
    common = dict(monos[0])
    for m in monos[1:]:
        exps = dict(m)
        common = {v: min(e, exps[v]) for v, e in common.items() if v in exps}
    return tuple(sorted(common.items()))


def _fraction_content(p: JetPoly) -> Fraction:
    """Positive rational content when some coefficient is non-integral, else 1."""
    coeffs = list(p.terms.values())
    if all(c.denominator == 1 for c in coeffs):
        return Fraction(1)
    num = den = 0
    for c in coeffs:
        num = math.gcd(num, c.numerator)
        den = den * c.denominator // math.gcd(den, c.denominator) if den else c.denominator
    return Fraction(num, den)


def render_jet(p: JetPoly) -> str:
    """Canonical text: descending monomial order, common factor pulled out.

    ``2*r*s + r*r'`` renders as ``r*(2*s + r')`` and
    ``1/4*r'^2 - 1/2*r*r''`` as ``1/4*(r'^2 - 2*r*r'')``.
    """
    if p.is_zero():
        return "0"
    if len(p.terms) == 1:
        return _render_terms(p.terms)
    content = _fraction_content(p)
    common = common_monomial(p)
    if not common and content == 1:
        return _render_terms(p.terms)
    exps = dict(common)
    rest = {}
    for m, c in p.terms.items():
        left = {v: e - exps.get(v, 0) for v, e in m}
        rest[tuple(sorted((v, e) for v, e in left.items() if e))] = c / content
    prefix = [_render_coeff(content)] if content != 1 else []
    if common:
        prefix.append(_render_monomial(common))
    return f"{'*'.join(prefix)}*({_render_terms(rest)})"


def render_diffrat(d: DiffRational) -> str:
    num = render_jet(d.num)
    if d.rpow == 0:
        return num
    if len(d.num.terms) > 1 and not num.endswith(")"):
        num = f"({num})"
    den = "r" if d.rpow == 1 else f"r^{d.rpow}"
    return f"{num}/{den}"


def jet_sum(items: Iterable[JetPoly]) -> JetPoly:
    out: dict = {}
    for p in items:
        for m, c in p.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return JetPoly._raw(out)
