"""Branched cyclic coverings and multi-point Seshadri bounds.

The covering pi: X -> Y has degree n, branch divisor B ~ n*M downstairs and
reduced ramification divisor R upstairs with pi*B = n*R. For an ample
generator L on a surface with Picard number 1 the pullback satisfies
(pi*L)^2 = n*L^2, which is all the intersection theory these bounds need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import SurdValue, int_sqrt_floor, is_perfect_square, surd_compare

__all__ = [
    "CoveringSpec",
    "SeshadriBounds",
    "steffens_bounds",
    "numeric_inequality_check",
    "nagata_upper",
    "nagata_conjectural",
    "KnownConstant",
    "KNOWN_PLANE_CONSTANTS",
]


@dataclass(frozen=True)
class CoveringSpec:
    """Covering data: degree n, self-intersection of the ample generator,
    and (for coverings of the plane) the branch degree parameter b, meaning
    the branch divisor is a plane curve of degree n*b."""

    n: int
    L2: int = 1
    b: int | None = None

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("covering degree must be at least 2")
        if self.L2 < 1:
            raise ValueError("L^2 must be positive")
        if self.b is not None and self.b < 1:
            raise ValueError("branch parameter b must be positive")

    @property
    def pullback_self_intersection(self) -> int:
        """(pi*L)^2 = n * L^2."""
        return self.n * self.L2


@dataclass(frozen=True)
class SeshadriBounds:
    """Exact lower and upper bounds, with maximality when they coincide."""

    lower: Fraction
    upper: SurdValue
    maximal: bool

    def __post_init__(self) -> None:
        cmp = surd_compare(SurdValue(self.lower), self.upper)
        if cmp > 0:
            raise ValueError("lower bound exceeds upper bound")
        if self.maximal != (cmp == 0):
            raise ValueError("maximal flag inconsistent with the bounds")


def steffens_bounds(spec: CoveringSpec, r: int) -> SeshadriBounds:
    """Bounds for the Seshadri constant of pi*L at r very general points.

    Lower bound floor(sqrt(r*n*L^2))/r, upper bound sqrt(n*L^2/r); they
    coincide exactly when r*n*L^2 is a perfect square.
    """
    if r < 1:
        raise ValueError("number of points must be positive")
    s = r * spec.pullback_self_intersection
    lower = Fraction(int_sqrt_floor(s), r)
    upper = SurdValue(Fraction(1, r), s)  # sqrt(n*L^2/r) = sqrt(r*n*L^2)/r
    return SeshadriBounds(lower, upper, is_perfect_square(s))


def numeric_inequality_check(mults: Sequence[int], index: int) -> bool:
    """Whether r*(sum of squares - mults[index]) >= M*(M-1), M = sum(mults).

    Holds for every vector of non-negative integers; it is wired up as an
    executable check so the property suite can hammer it with random data.
    The index is 0-based.
    """
    if not mults:
        raise ValueError("empty multiplicity vector")
    if any(m < 0 for m in mults):
        raise ValueError("multiplicities must be non-negative")
    if not 0 <= index < len(mults):
        raise ValueError("index out of range")
    r = len(mults)
    total = sum(mults)
    return r * (sum(m * m for m in mults) - mults[index]) >= total * (total - 1)


def nagata_upper(spec: CoveringSpec, r: int, eps_downstairs: SurdValue | Fraction | int) -> SurdValue:
    """Upper bound n * eps for the constant of pi*L at r branch points.

    eps_downstairs must be the (known or conjectural) Seshadri constant of L
    at n*r very general points of the base surface; the caller owns that
    claim and this function only scales it by the covering degree.
    """
    if r < 1:
        raise ValueError("number of points must be positive")
    if not isinstance(eps_downstairs, SurdValue):
        eps_downstairs = SurdValue(Fraction(eps_downstairs))
    return spec.n * eps_downstairs


def nagata_conjectural(points: int) -> SurdValue:
    """Conjectural maximal value 1/sqrt(points) for points >= 9.

    For perfect squares this value is an established theorem; for other
    counts it is the Nagata conjecture and callers should flag it as such.
    Counts below 9 are rejected; use the bundled table of known constants.
    """
    if points < 9:
        raise ValueError("conjectural value is stated for at least 9 points")
    return SurdValue(Fraction(1, points), points)


@dataclass(frozen=True)
class KnownConstant:
    """A classical multi-point Seshadri constant of O(1) on the plane."""

    points: int
    value: Fraction
    exceptional_curve: str


# Known values of the Seshadri constant of O(1) at 1..9 very general plane
# points, each with the classical curve realizing it. Reference data for
# callers; nothing in this package derives them.
KNOWN_PLANE_CONSTANTS: dict[int, KnownConstant] = {
    c.points: c
    for c in (
        KnownConstant(1, Fraction(1), "a line through the point"),
        KnownConstant(2, Fraction(1, 2), "the line through both points"),
        KnownConstant(3, Fraction(1, 2), "a line through two of the points"),
        KnownConstant(4, Fraction(1, 2), "a line through two of the points"),
        KnownConstant(5, Fraction(2, 5), "the conic through all five points"),
        KnownConstant(6, Fraction(2, 5), "a conic through five of the points"),
        KnownConstant(7, Fraction(3, 8), "a cubic double at one point, through the other six"),
        KnownConstant(8, Fraction(6, 17), "a sextic triple at one point, double at the other seven"),
        KnownConstant(9, Fraction(1, 3), "the cubic through all nine points"),
    )
}
