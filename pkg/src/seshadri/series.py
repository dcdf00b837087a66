"""Truncated power series over exact rationals, with explicit precision.

A series of precision T stores exactly the monomials of total degree < T;
anything of degree >= T is unknown. Polynomials carry infinite precision
(INF). Operations propagate precision pessimistically: a coefficient is kept
only when it is provably correct, and computations that cannot certify a
coefficient lower the precision instead of storing a guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping

__all__ = [
    "INF",
    "AtLeast",
    "PrecisionError",
    "order_meets",
    "XSeries",
    "BiSeries",
    "series_mul",
    "series_substitute_y",
    "ord_x",
]

INF = float("inf")

Precision = "int | float"


class PrecisionError(ArithmeticError):
    """A result needs more tracked terms than the inputs carry."""


@dataclass(frozen=True)
class AtLeast:
    """An order known only as a lower bound: every tracked coefficient vanished.

    Returned instead of an integer when a series is zero to its precision;
    callers that need ">= T" semantics test the bound.
    """

    bound: int | float

    def __str__(self) -> str:
        return f">= {self.bound}"


def order_meets(value: "int | AtLeast", threshold: int | float) -> bool:
    """Whether an exact-or-lower-bounded order is certified >= threshold."""
    bound = value.bound if isinstance(value, AtLeast) else value
    return bound >= threshold


def _validate_precision(precision: int | float) -> int | float:
    if precision == INF:
        return INF
    if isinstance(precision, int) and precision >= 0:
        return precision
    raise ValueError(f"precision must be a non-negative integer or INF, got {precision!r}")


def _xmul(a: dict[int, Fraction], b: dict[int, Fraction], cap: int | float) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            if e >= cap:
                continue
            c = out.get(e, Fraction(0)) + ca * cb
            if c:
                out[e] = c
            elif e in out:
                del out[e]
    return out


class XSeries:
    """Univariate truncated series in x over exact rationals."""

    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs: Mapping[int, Fraction | int] | None = None,
                 precision: int | float = INF):
        precision = _validate_precision(precision)
        data: dict[int, Fraction] = {}
        for e, c in (coeffs or {}).items():
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"bad exponent {e!r}")
            c = Fraction(c)
            if c and e < precision:
                data[e] = c
        self.coeffs = data
        self.precision = precision

    @classmethod
    def from_coefficients(cls, coefficients, precision: int | float = INF) -> "XSeries":
        """Series from a dense coefficient list starting at x^0."""
        return cls({e: c for e, c in enumerate(coefficients)}, precision)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def ord(self) -> "int | AtLeast":
        """Least exponent with a nonzero coefficient, or AtLeast(precision)."""
        if self.coeffs:
            return min(self.coeffs)
        return AtLeast(self.precision)

    def coefficient(self, e: int) -> Fraction:
        if e >= self.precision:
            raise PrecisionError(f"coefficient of x^{e} is beyond precision {self.precision}")
        return self.coeffs.get(e, Fraction(0))

    def truncate(self, precision: int | float) -> "XSeries":
        return XSeries(self.coeffs, min(self.precision, precision))

    def __add__(self, other: "XSeries") -> "XSeries":
        prec = min(self.precision, other.precision)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, Fraction(0)) + c
        return XSeries(out, prec)

    def __sub__(self, other: "XSeries") -> "XSeries":
        return self + (-other)

    def __neg__(self) -> "XSeries":
        return XSeries({e: -c for e, c in self.coeffs.items()}, self.precision)

    def __mul__(self, other: "XSeries | Fraction | int"):
        if isinstance(other, XSeries):
            prec = min(self.precision, other.precision)
            return XSeries(_xmul(self.coeffs, other.coeffs, prec), prec)
        factor = Fraction(other)
        return XSeries({e: c * factor for e, c in self.coeffs.items()}, self.precision)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "XSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError("series powers need a non-negative integer exponent")
        result = XSeries({0: Fraction(1)}, self.precision)
        for _ in range(k):
            result = result * self
        return result

    def compose(self, inner: "XSeries") -> "XSeries":
        """Substitution x -> inner(x); inner must vanish at the origin."""
        if not order_meets(inner.ord(), 1):
            raise ValueError("composition requires inner(0) = 0")
        if inner.is_zero and inner.precision == INF:
            return XSeries({0: self.coeffs.get(0, Fraction(0))}, INF)
        inner_ord = min(inner.coeffs) if inner.coeffs else inner.precision
        prec = INF
        if self.precision != INF:
            prec = self.precision * inner_ord
        if inner.precision != INF:
            positive = [e for e in self.coeffs if e >= 1]
            if positive:
                e1 = min(positive)
                extra = (e1 - 1) * inner_ord if e1 > 1 else 0
                prec = min(prec, extra + inner.precision)
        out: dict[int, Fraction] = {}
        power = {0: Fraction(1)}
        last = 0
        for e in sorted(self.coeffs):
            for _ in range(e - last):
                power = _xmul(power, inner.coeffs, prec)
            last = e
            c = self.coeffs[e]
            for pe, pc in power.items():
                v = out.get(pe, Fraction(0)) + c * pc
                if v:
                    out[pe] = v
                elif pe in out:
                    del out[pe]
        return XSeries(out, prec)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, XSeries):
            return NotImplemented
        return self.coeffs == other.coeffs and self.precision == other.precision

    def __hash__(self) -> int:
        return hash((frozenset(self.coeffs.items()), self.precision))

    def __str__(self) -> str:
        return _format_terms(sorted(self.coeffs.items()),
                             lambda e: _power_str("x", e))

    def __repr__(self) -> str:
        return f"XSeries({self}, precision={self.precision})"


class BiSeries:
    """Bivariate truncated series in x and y over exact rationals.

    Keys are exponent pairs (p, q) for x^p y^q; precision bounds the total
    degree of tracked monomials.
    """

    __slots__ = ("coeffs", "precision")

    def __init__(self, coeffs: Mapping[tuple[int, int], Fraction | int] | None = None,
                 precision: int | float = INF):
        precision = _validate_precision(precision)
        data: dict[tuple[int, int], Fraction] = {}
        for key, c in (coeffs or {}).items():
            p, q = key
            if p < 0 or q < 0:
                raise ValueError(f"bad exponent pair {key!r}")
            c = Fraction(c)
            if c and p + q < precision:
                data[(p, q)] = c
        self.coeffs = data
        self.precision = precision

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def multiplicity(self) -> "int | AtLeast":
        """Least total degree with a nonzero coefficient (order at the origin)."""
        if self.coeffs:
            return min(p + q for p, q in self.coeffs)
        return AtLeast(self.precision)

    def coefficient(self, key: tuple[int, int]) -> Fraction:
        p, q = key
        if p + q >= self.precision:
            raise PrecisionError(f"coefficient of x^{p} y^{q} is beyond precision {self.precision}")
        return self.coeffs.get((p, q), Fraction(0))

    def truncate(self, precision: int | float) -> "BiSeries":
        return BiSeries(self.coeffs, min(self.precision, precision))

    def __add__(self, other: "BiSeries") -> "BiSeries":
        prec = min(self.precision, other.precision)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BiSeries(out, prec)

    def __sub__(self, other: "BiSeries") -> "BiSeries":
        return self + (-other)

    def __neg__(self) -> "BiSeries":
        return BiSeries({k: -c for k, c in self.coeffs.items()}, self.precision)

    def __mul__(self, other: "BiSeries | Fraction | int"):
        if isinstance(other, BiSeries):
            prec = min(self.precision, other.precision)
            out: dict[tuple[int, int], Fraction] = {}
            for (pa, qa), ca in self.coeffs.items():
                for (pb, qb), cb in other.coeffs.items():
                    p, q = pa + pb, qa + qb
                    if p + q >= prec:
                        continue
                    c = out.get((p, q), Fraction(0)) + ca * cb
                    if c:
                        out[(p, q)] = c
                    elif (p, q) in out:
                        del out[(p, q)]
            return BiSeries(out, prec)
        factor = Fraction(other)
        return BiSeries({k: c * factor for k, c in self.coeffs.items()}, self.precision)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiSeries":
        if not isinstance(k, int) or k < 0:
            raise ValueError("series powers need a non-negative integer exponent")
        result = BiSeries({(0, 0): Fraction(1)}, self.precision)
        for _ in range(k):
            result = result * self
        return result

    def substitute_y(self, g: XSeries) -> XSeries:
        """Evaluate along y = g(x); result precision is the tightest provable.

        Unknown terms of self only disturb degrees >= self.precision (g has
        no constant term), and the unknown tail of g enters a term x^p y^q
        at order p + (q-1)*ord(g) + g.precision.
        """
        if not order_meets(g.ord(), 1):
            raise ValueError("substitution requires g(0) = 0")
        g_ord = min(g.coeffs) if g.coeffs else g.precision
        prec = self.precision
        if g.precision != INF:
            for (p, q) in self.coeffs:
                if q >= 1:
                    extra = (q - 1) * g_ord if q > 1 else 0
                    prec = min(prec, p + extra + g.precision)
        rows: dict[int, dict[int, Fraction]] = {}
        for (p, q), c in self.coeffs.items():
            rows.setdefault(q, {})[p] = c
        acc: dict[int, Fraction] = {}
        for q in range(max(rows, default=0), -1, -1):
            acc = _xmul(acc, g.coeffs, prec)
            for p, c in rows.get(q, {}).items():
                v = acc.get(p, Fraction(0)) + c
                if v:
                    acc[p] = v
                elif p in acc:
                    del acc[p]
        return XSeries(acc, prec)

    def translate_y(self, g: XSeries) -> "BiSeries":
        """Coordinate shift y -> y + g(x); afterwards {y = g(x)} is {y = 0}."""
        if not order_meets(g.ord(), 1):
            raise ValueError("translation requires g(0) = 0")
        prec = self.precision
        if g.precision != INF:
            shifts = [p for (p, q) in self.coeffs if q >= 1]
            if shifts:
                prec = min(prec, g.precision + min(shifts))
        max_q = max((q for (_, q) in self.coeffs), default=0)
        powers: list[dict[int, Fraction]] = [{0: Fraction(1)}]
        for _ in range(max_q):
            powers.append(_xmul(powers[-1], g.coeffs, prec))
        out: dict[tuple[int, int], Fraction] = {}
        for (p, q), c in self.coeffs.items():
            for j in range(q + 1):
                w = c * comb(q, j)
                for e, ge in powers[q - j].items():
                    key = (p + e, j)
                    v = out.get(key, Fraction(0)) + w * ge
                    if v:
                        out[key] = v
                    elif key in out:
                        del out[key]
        return BiSeries(out, prec)

    def substitute_x(self, h: XSeries) -> "BiSeries":
        """Reparameterize x -> h(x); h must vanish at the origin."""
        if not order_meets(h.ord(), 1):
            raise ValueError("substitution requires h(0) = 0")
        h_ord = min(h.coeffs) if h.coeffs else h.precision
        prec = self.precision
        if h.precision != INF:
            for (p, q) in self.coeffs:
                if p >= 1:
                    extra = (p - 1) * h_ord if p > 1 else 0
                    prec = min(prec, extra + q + h.precision)
        out: dict[tuple[int, int], Fraction] = {}
        power = {0: Fraction(1)}
        last = 0
        for (p, q), c in sorted(self.coeffs.items()):  # keys ascend in p
            for _ in range(p - last):
                power = _xmul(power, h.coeffs, prec)
            last = p
            for e, hc in power.items():
                key = (e, q)
                v = out.get(key, Fraction(0)) + c * hc
                if v:
                    out[key] = v
                elif key in out:
                    del out[key]
        return BiSeries(out, prec)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.coeffs == other.coeffs and self.precision == other.precision

    def __hash__(self) -> int:
        return hash((frozenset(self.coeffs.items()), self.precision))

    def __str__(self) -> str:
        ordered = sorted(self.coeffs.items(), key=lambda kv: (kv[0][0] + kv[0][1], kv[0][1], kv[0][0]))
        return _format_terms(ordered, lambda key: _monomial_str(*key))

    def __repr__(self) -> str:
        return f"BiSeries({self}, precision={self.precision})"


def _power_str(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _monomial_str(p: int, q: int) -> str:
    parts = [s for s in (_power_str("x", p), _power_str("y", q)) if s]
    return "*".join(parts)


def _format_terms(items, monomial) -> str:
    if not items:
        return "0"
    pieces: list[str] = []
    for key, c in items:
        mono = monomial(key)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if not pieces:
            pieces.append(body if c > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(pieces)


def series_mul(f: BiSeries, g: BiSeries) -> BiSeries:
    """Product truncated to the shared precision min(f.precision, g.precision)."""
    return f * g


def series_substitute_y(f: BiSeries, g: XSeries) -> XSeries:
    """f(x, g(x)) as a univariate series; g must have zero constant term."""
    return f.substitute_y(g)


def ord_x(s: XSeries) -> "int | AtLeast":
    """Least exponent with nonzero coefficient, or AtLeast(precision)."""
    return s.ord()
