"""Verification toolkit for the 2 + 2*sqrt(2) upper bound on the growth of polyominoes."""

from .enumeration import (
    BucketCountsA,
    BucketCountsB,
    Census,
    canonical_anchor,
    census,
    classify_type_a,
    classify_type_b,
    count_fixed,
    count_marked,
    visit_marked_pairs,
    visit_polyominoes,
)
from .lattice import (
    Cell,
    DisconnectedPolyominoError,
    EmptyPolyominoError,
    MarkedPair,
    MarkVariant,
    Polyomino,
    Symmetry,
    canonicalize,
    is_connected,
    satisfies,
    transform,
)
from .motzkin import count_bicolored_paths, verify_motzkin_identity
from .recurrences import (
    GROWTH_CONSTANT,
    compute_fg,
    compute_g_self,
    lambda_lower_bound,
    ratio_estimate,
    verify_theorem,
)
from .series import PowerSeries, discriminant_root, series_sqrt, verify_functional_equation, zeta_coefficients
from .tables import CountTable

__version__ = "0.1.0"
