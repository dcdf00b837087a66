"""Exact-arithmetic toolkit for Seshadri constants of cyclic coverings.

Computes and verifies bounds for multi-point Seshadri constants of pulled
back line bundles on branched n-cyclic coverings: condition counts for
invariant linear systems, the candidate table and explicit constants for
coverings of the projective plane, multiplicity sequences along blow-up
clusters on the branch curve, local intersection numbers, and the exact
linear-algebra witness computation that settles the degree-8 case.

All arithmetic is exact (arbitrary-precision rationals, quadratic surds,
truncated power series with certified precision). No floating point.
"""

from .cluster import (
    BranchJet,
    ClusterResult,
    LocalCurve,
    branch_from_implicit,
    cluster_multiplicities,
    normalize_branch,
    pullback_mult,
    verify_cluster_sum,
)
from .conditions import (
    Candidate,
    MultDecomp,
    candidate_search,
    condition_count,
    constants_table,
    discard_search,
    feasibility_bound,
    h0_plane,
)
from .covering import (
    KNOWN_PLANE_CONSTANTS,
    CoveringSpec,
    SeshadriBounds,
    nagata_conjectural,
    nagata_upper,
    numeric_inequality_check,
    steffens_bounds,
)
from .exact import (
    Rat,
    RatMatrix,
    SurdValue,
    int_sqrt_floor,
    is_perfect_square,
    kernel_dimension,
    surd_compare,
)
from .intersection import IntersectionQuery, local_intersection, veronese_bound
from .series import (
    INF,
    AtLeast,
    BiSeries,
    PrecisionError,
    XSeries,
    ord_x,
    order_meets,
    series_mul,
    series_substitute_y,
)
from .witness import WitnessProblem, WitnessVerdict, n8_certificate, solve_witness

__all__ = [
    "AtLeast",
    "BiSeries",
    "BranchJet",
    "Candidate",
    "ClusterResult",
    "CoveringSpec",
    "INF",
    "IntersectionQuery",
    "KNOWN_PLANE_CONSTANTS",
    "LocalCurve",
    "MultDecomp",
    "PrecisionError",
    "Rat",
    "RatMatrix",
    "SeshadriBounds",
    "SurdValue",
    "WitnessProblem",
    "WitnessVerdict",
    "XSeries",
    "branch_from_implicit",
    "candidate_search",
    "cluster_multiplicities",
    "condition_count",
    "constants_table",
    "discard_search",
    "feasibility_bound",
    "h0_plane",
    "int_sqrt_floor",
    "is_perfect_square",
    "kernel_dimension",
    "local_intersection",
    "n8_certificate",
    "nagata_conjectural",
    "nagata_upper",
    "normalize_branch",
    "numeric_inequality_check",
    "ord_x",
    "order_meets",
    "pullback_mult",
    "series_mul",
    "series_substitute_y",
    "solve_witness",
    "steffens_bounds",
    "surd_compare",
    "verify_cluster_sum",
    "veronese_bound",
]

__version__ = "0.1.0"
