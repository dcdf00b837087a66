"""Dimension counting for invariant linear systems on cyclic coverings of the
plane, and the search that produces the candidate exceptional divisors.

An invariant divisor D ~ d*pi*L corresponds to a plane curve of degree d, so
the available dimension is h^0(O(d)) = C(d+2, 2). Passing through a
ramification point with multiplicity m imposes fewer conditions than for an
arbitrary divisor because invariance kills every monomial whose y-exponent
is not a multiple of n: writing m = n*k + r the count is (k+1)(n*k/2 + r).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import SurdValue, int_sqrt_floor, surd_compare

__all__ = [
    "MultDecomp",
    "Candidate",
    "condition_count",
    "h0_plane",
    "candidate_search",
    "feasibility_bound",
    "discard_search",
    "constants_table",
    "submaximality",
    "REFERENCE_TABLE",
    "REFERENCE_CONSTANTS",
]


@dataclass(frozen=True)
class MultDecomp:
    """Euclidean decomposition m = n*k + r with 0 <= r < n."""

    m: int
    k: int
    r: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 2 or self.m < 0:
            raise ValueError("need n >= 2 and m >= 0")
        if self.m != self.n * self.k + self.r or not 0 <= self.r < self.n:
            raise ValueError("inconsistent decomposition")

    @classmethod
    def of(cls, n: int, m: int) -> "MultDecomp":
        k, r = divmod(m, n)
        return cls(m=m, k=k, r=r, n=n)


def condition_count(n: int, m: int) -> int:
    """Conditions for an invariant divisor to vanish to order m at a
    ramification point: (k+1)(n*k/2 + r) with m = n*k + r.

    Counts the lattice points (i, n*j) with i + n*j < m; always an integer
    even though the formula has a half in it.
    """
    d = MultDecomp.of(n, m)
    count = Fraction(d.k + 1) * (Fraction(n * d.k, 2) + d.r)
    assert count.denominator == 1, f"condition count came out non-integral for n={n}, m={m}"
    return int(count)


def h0_plane(d: int) -> int:
    """Dimension of the space of plane curves of degree d: C(d+2, 2)."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    return (d + 2) * (d + 1) // 2


@dataclass(frozen=True)
class Candidate:
    """A candidate exceptional divisor: degree d, multiplicity m at the
    ramification point, and the resulting constant n*d/m."""

    n: int
    d: int
    m: int
    h0: int
    conditions: int
    epsilon: Fraction

    def __post_init__(self) -> None:
        if self.d * self.d * self.n > self.m * self.m:
            raise ValueError("candidate violates d^2 n <= m^2")
        if self.h0 <= self.conditions:
            raise ValueError("candidate system has no section to spare")
        if self.epsilon != Fraction(self.n * self.d, self.m):
            raise ValueError("epsilon is not n*d/m")


def _minimal_mult(n: int, d: int) -> int:
    """Smallest m with m^2 >= d^2 * n (exact integer ceiling of d*sqrt(n))."""
    s = int_sqrt_floor(d * d * n)
    return s if s * s == d * d * n else s + 1


def candidate_search(n: int, d_max: int) -> Candidate | None:
    """First (d, m) with room for an invariant divisor of degree d and
    multiplicity m at a ramification point.

    For each degree only the minimal m with m^2 >= d^2 n is tested: larger m
    costs strictly more conditions and lowers the ratio n*d/m, so the minimal
    choice maximizes both the chance of existence and the resulting constant.
    Degrees increase from 1, which pins the table deterministically.
    """
    if n < 2 or d_max < 1:
        raise ValueError("need n >= 2 and d_max >= 1")
    for d in range(1, d_max + 1):
        m = _minimal_mult(n, d)
        h0 = h0_plane(d)
        cond = condition_count(n, m)
        if h0 > cond:
            return Candidate(n=n, d=d, m=m, h0=h0, conditions=cond,
                             epsilon=Fraction(n * d, m))
    return None


def feasibility_bound(n: int) -> bool:
    """Whether the invariant-divisor method can work at all.

    Combining h^0 > conditions with d^2 n <= m^2 forces 9 d^2 >= m^2 >= n d^2,
    so nothing is found beyond n = 9.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    return n <= 9


def discard_search(n: int) -> list[tuple[int, int]]:
    """Candidate (degree, multiplicity) pairs not excluded by pure numerics.

    A competing exceptional divisor of degree j and multiplicity m must
    satisfy m^2 >= n j^2 >= m (m-1) and, at a generic branch point,
    m < h^0(O(j)). Pairs surviving both sieves are returned; everything else
    is numerically impossible.
    """
    if not 2 <= n <= 9:
        raise ValueError("discard search applies to degrees 2..9")
    top = candidate_search(n, d_max=10)
    assert top is not None  # guaranteed for n <= 9
    survivors: list[tuple[int, int]] = []
    for j in range(1, top.d + 1):
        m = _minimal_mult(n, j)
        while m * (m - 1) <= n * j * j:
            if m < h0_plane(j):
                survivors.append((j, m))
            m += 1
    return survivors


def constants_table(d_max: int = 10) -> list[tuple[int, Candidate]]:
    """The full table of candidates and constants for coverings of the plane,
    n = 2..9. Raises if some degree fails to produce a candidate within d_max."""
    table: list[tuple[int, Candidate]] = []
    for n in range(2, 10):
        cand = candidate_search(n, d_max)
        if cand is None:
            raise ValueError(f"no candidate for n={n} up to degree {d_max}")
        table.append((n, cand))
    return table


# Built-in expected values; the CLI table command self-checks against these
# and exits nonzero on any deviation.
REFERENCE_TABLE: dict[int, tuple[int, int, int, int]] = {
    2: (1, 2, 3, 2),
    3: (1, 2, 3, 2),
    4: (1, 2, 3, 2),
    5: (2, 5, 6, 5),
    6: (2, 5, 6, 5),
    7: (3, 8, 10, 9),
    8: (6, 17, 28, 27),
    9: (3, 9, 10, 9),
}

REFERENCE_CONSTANTS: dict[int, Fraction] = {
    2: Fraction(1),
    3: Fraction(3, 2),
    4: Fraction(2),
    5: Fraction(2),
    6: Fraction(12, 5),
    7: Fraction(21, 8),
    8: Fraction(48, 17),
    9: Fraction(3),
}


def submaximality(candidate: Candidate) -> int:
    """Compare the candidate's constant with the unconditional bound sqrt(n):
    -1 below, 0 equal (perfect squares), never +1."""
    return surd_compare(SurdValue(candidate.epsilon), SurdValue(Fraction(1), candidate.n))
