"""Exact scalar arithmetic: rationals, quadratic surds, integer square roots,
and rational matrices with kernel computation.

Everything in this module is exact. Rationals are arbitrary precision, surd
comparison works by sign-aware squaring, and linear algebra runs rational
Gaussian elimination. No floating point is used anywhere in the library;
decimal renderings for display live in the command line layer only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "Rat",
    "int_sqrt_floor",
    "is_perfect_square",
    "square_free_split",
    "SurdValue",
    "surd_compare",
    "RatMatrix",
    "kernel_dimension",
]

# The universal scalar. fractions.Fraction already guarantees the normal
# form this package relies on: lowest terms, positive denominator, exact
# arithmetic with arbitrary-precision integers.
Rat = Fraction


def int_sqrt_floor(n: int) -> int:
    """Floor of the square root of a non-negative integer.

    Pure integer Newton iteration; exact for arbitrarily large inputs.
    """
    if n < 0:
        raise ValueError("square root of a negative integer")
    if n == 0:
        return 0
    x = 1 << ((n.bit_length() + 1) // 2)  # x >= sqrt(n)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            return x
        x = y


def is_perfect_square(n: int) -> bool:
    if n < 0:
        return False
    s = int_sqrt_floor(n)
    return s * s == n


def square_free_split(n: int) -> tuple[int, int]:
    """Write n = outer**2 * core with core square-free; return (outer, core).

    Requires n >= 1. Trial division; fine for the radicand sizes that occur
    in bound arithmetic (products of small covering invariants).
    """
    if n < 1:
        raise ValueError("square_free_split needs a positive integer")
    outer, core, d, m = 1, 1, 2, n
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            outer *= d ** (e // 2)
            if e % 2:
                core *= d
        d += 1 if d == 2 else 2
    core *= m  # leftover factor is prime, exponent 1
    return outer, core


@dataclass(frozen=True)
class SurdValue:
    """Exact real number of the form coeff * sqrt(radicand).

    Normal form: radicand is square-free and >= 1, square factors are
    absorbed into coeff, and the value is rational exactly when radicand
    is 1 (a zero coefficient forces radicand 1 as well).
    """

    coeff: Fraction
    radicand: int = 1

    def __post_init__(self) -> None:
        coeff = Fraction(self.coeff)
        rad = self.radicand
        if rad < 0:
            raise ValueError("radicand must be non-negative")
        if coeff == 0 or rad == 0:
            coeff, rad = Fraction(0), 1
        else:
            outer, core = square_free_split(rad)
            coeff, rad = coeff * outer, core
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "radicand", rad)

    @classmethod
    def from_rational(cls, value: Fraction | int) -> "SurdValue":
        return cls(Fraction(value), 1)

    @property
    def is_rational(self) -> bool:
        return self.radicand == 1

    def as_rational(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"{self} is irrational")
        return self.coeff

    def sign(self) -> int:
        if self.coeff > 0:
            return 1
        if self.coeff < 0:
            return -1
        return 0

    def squared(self) -> Fraction:
        """The exact rational value of the square (sign discarded)."""
        return self.coeff * self.coeff * self.radicand

    def __neg__(self) -> "SurdValue":
        return SurdValue(-self.coeff, self.radicand)

    def __mul__(self, other: "SurdValue | Fraction | int") -> "SurdValue":
        if isinstance(other, SurdValue):
            return SurdValue(self.coeff * other.coeff, self.radicand * other.radicand)
        return SurdValue(self.coeff * Fraction(other), self.radicand)

    __rmul__ = __mul__

    def __lt__(self, other: "SurdValue") -> bool:
        return surd_compare(self, other) < 0

    def __le__(self, other: "SurdValue") -> bool:
        return surd_compare(self, other) <= 0

    def __gt__(self, other: "SurdValue") -> bool:
        return surd_compare(self, other) > 0

    def __ge__(self, other: "SurdValue") -> bool:
        return surd_compare(self, other) >= 0

    def __str__(self) -> str:
        if self.radicand == 1:
            return str(self.coeff)
        root = f"sqrt({self.radicand})"
        if self.coeff == 1:
            return root
        if self.coeff == -1:
            return f"-{root}"
        if self.coeff.denominator == 1:
            return f"{self.coeff}*{root}"
        return f"({self.coeff})*{root}"

    def __repr__(self) -> str:
        return f"SurdValue({self.coeff!r}, {self.radicand})"


def _as_surd(value: "SurdValue | Fraction | int") -> SurdValue:
    if isinstance(value, SurdValue):
        return value
    return SurdValue(Fraction(value), 1)


def surd_compare(a: "SurdValue | Fraction | int", b: "SurdValue | Fraction | int") -> int:
    """Exact ordering of two surd values: -1, 0 or 1.

    Signs first, then squares with sign-aware orientation. Never touches
    floating point.
    """
    a, b = _as_surd(a), _as_surd(b)
    sa, sb = a.sign(), b.sign()
    if sa != sb:
        return -1 if sa < sb else 1
    if sa == 0:
        return 0
    qa, qb = a.squared(), b.squared()
    if qa == qb:
        return 0
    less = qa < qb
    if sa < 0:
        less = not less
    return -1 if less else 1


class RatMatrix:
    """Dense matrix of exact rationals.

    Sized for witness systems (at most a few hundred entries); no sparse
    machinery on purpose.
    """

    def __init__(self, entries: Iterable[Iterable[Fraction | int]], cols: int | None = None):
        rows = [[Fraction(v) for v in row] for row in entries]
        if rows:
            width = len(rows[0])
            if any(len(row) != width for row in rows):
                raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError("cols does not match row width")
        else:
            if cols is None:
                raise ValueError("empty matrix needs an explicit column count")
            width = cols
        self.entries = rows
        self.rows = len(rows)
        self.cols = width

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[Fraction(0)] * cols for _ in range(rows)], cols=cols)

    def apply(self, vector: Sequence[Fraction | int]) -> list[Fraction]:
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        vec = [Fraction(v) for v in vector]
        return [sum((a * x for a, x in zip(row, vec)), Fraction(0)) for row in self.entries]

    def rref(self) -> tuple[list[list[Fraction]], list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        m = [row[:] for row in self.entries]
        pivots: list[int] = []
        r = 0
        for c in range(self.cols):
            pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = Fraction(1) / m[r][c]
            m[r] = [v * inv for v in m[r]]
            for i in range(len(m)):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == len(m):
                break
        return m, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> list[list[Fraction]]:
        """Basis of the right kernel; every vector satisfies self * v = 0 exactly."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        basis: list[list[Fraction]] = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = [Fraction(0)] * self.cols
            v[free] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -reduced[i][free]
            basis.append(v)
        return basis

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"


def kernel_dimension(m: RatMatrix) -> tuple[int, list[list[Fraction]]]:
    """Exact nullity of m together with a kernel basis."""
    basis = m.kernel()
    return len(basis), basis
