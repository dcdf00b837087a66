"""Blow-up clusters along a smooth branch curve.

Everything here happens in local coordinates (x, y) where the branch curve
is the graph y = g(x); after normalization the branch is y = 0. Blowing up
the origin with the chart x = x1, y = x1*y1 keeps the strict transform of
the branch equal to {y1 = 0}, so the next cluster point (the intersection of
the exceptional line with the branch transform) is again the chart origin.
Only this chart is ever needed; no gluing.

The walk certifies each multiplicity it reports: a truncated input whose
tracked terms all die during the transforms yields determinate=False rather
than a guess.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import INF, AtLeast, BiSeries, PrecisionError, XSeries

__all__ = [
    "LocalCurve",
    "BranchJet",
    "ClusterResult",
    "normalize_branch",
    "cluster_multiplicities",
    "pullback_mult",
    "verify_cluster_sum",
    "branch_from_implicit",
]


@dataclass(frozen=True)
class LocalCurve:
    """A curve germ at the origin, given by a truncated or polynomial series."""

    series: BiSeries
    label: str = ""

    @property
    def passes_through_origin(self) -> bool:
        return (0, 0) not in self.series.coeffs


@dataclass(frozen=True)
class BranchJet:
    """The branch curve as a graph y = g(x) with g(0) = 0 (smooth by type)."""

    g: XSeries

    def __post_init__(self) -> None:
        if 0 in self.g.coeffs:
            raise ValueError("branch must pass through the origin: g(0) = 0")

    @property
    def precision(self) -> int | float:
        return self.g.precision

    @classmethod
    def from_coefficients(cls, coefficients, precision: int | float = INF) -> "BranchJet":
        """Branch from a dense coefficient list starting at x^0 (first entry 0)."""
        return cls(XSeries.from_coefficients(coefficients, precision))


@dataclass(frozen=True)
class ClusterResult:
    """Multiplicities (m_1, ..., m_n) at the infinitely near branch points.

    determinate is False when the input precision ran out before every entry
    could be certified; the reported prefix is still correct.
    """

    mults: tuple[int, ...]
    total: int
    determinate: bool


def normalize_branch(curve: LocalCurve, branch: BranchJet) -> LocalCurve:
    """Rewrite the curve in coordinates where the branch is {y = 0}."""
    return LocalCurve(curve.series.translate_y(branch.g), curve.label)


def _strict_transform(series: BiSeries, mult: int) -> BiSeries:
    """One blow-up step in the chart x = x1, y = x1*y1, divided by x1^mult.

    A term x^p y^q becomes x1^(p+q-mult) y1^q. Precision drops by mult: an
    unknown term of total degree >= T lands in total degree >= T - mult.
    """
    out = {}
    for (p, q), c in series.coeffs.items():
        assert p + q >= mult, "strict transform called with mult above the order"
        out[(p + q - mult, q)] = c
    prec = series.precision if series.precision == INF else max(series.precision - mult, 0)
    return BiSeries(out, prec)


def cluster_multiplicities(curve: LocalCurve, n: int) -> ClusterResult:
    """Multiplicity sequence of a branch-normalized curve along the first n
    infinitely near points of the branch.

    The curve must already be in coordinates where the branch is {y = 0}.
    A unit factor (nonzero constant term) has multiplicity 0 and ends the
    walk; all later entries are 0.
    """
    if n < 1:
        raise ValueError("need at least one cluster point")
    s = curve.series
    if s.is_zero and s.precision == INF:
        raise ValueError("the zero curve has no multiplicity sequence")
    mults: list[int] = []
    determinate = True
    for _ in range(n):
        m = s.multiplicity()
        if isinstance(m, AtLeast):
            determinate = False
            break
        if m == 0:
            break
        mults.append(m)
        s = _strict_transform(s, m)
    while len(mults) < n:
        mults.append(0)
    return ClusterResult(tuple(mults), sum(mults), determinate)


def pullback_mult(curve: LocalCurve, n: int) -> "int | AtLeast":
    """Multiplicity of the pullback divisor at the ramification point.

    For the curve sum a_pq x^p y^q downstairs, the pullback under the degree
    n covering has local equation sum a_pq u^p v^(n q), so its order is
    min(p + n*q) over the support.
    """
    if n < 1:
        raise ValueError("covering degree must be positive")
    s = curve.series
    if not s.coeffs:
        return AtLeast(s.precision)
    return min(p + n * q for p, q in s.coeffs)


def verify_cluster_sum(curve: LocalCurve, n: int) -> bool:
    """Whether the pullback multiplicity equals the sum of the n cluster
    multiplicities (true for every curve; exposed for verification).

    Raises PrecisionError when the input precision cannot certify either side.
    """
    result = cluster_multiplicities(curve, n)
    if not result.determinate:
        raise PrecisionError("cluster walk ran out of precision; re-run with more tracked terms")
    pm = pullback_mult(curve, n)
    if isinstance(pm, AtLeast):
        raise PrecisionError("curve is zero to its precision; pullback multiplicity unknown")
    return pm == result.total


def branch_from_implicit(f: BiSeries, precision: int) -> BranchJet:
    """Solve f(x, g(x)) = 0 for the branch graph g by undetermined coefficients.

    Needs f(0,0) = 0 and a nonzero coefficient on y, the implicit function
    theorem hypothesis at the origin. Solves up to the requested precision;
    each coefficient comes from one linear equation, so the result is exact.
    """
    if precision < 1:
        raise ValueError("precision must be at least 1")
    if f.coeffs.get((0, 0)):
        raise ValueError("implicit branch must pass through the origin")
    slope = f.coeffs.get((0, 1), Fraction(0))
    if slope == 0:
        raise ValueError("implicit branch needs a nonzero y-coefficient at the origin")
    g: dict[int, Fraction] = {}
    for k in range(1, precision):
        partial = XSeries(g, precision=k + 1)
        residual = f.substitute_y(partial)
        c = residual.coeffs.get(k, Fraction(0))
        if c:
            g[k] = -c / slope
    return BranchJet(XSeries(g, precision=precision))
