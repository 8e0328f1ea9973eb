"""Exact enumeration for 3x3 semi-magic squares: sextuple encoding, the
72-element symmetry group, lattice path counts, the bounded posets M(3,s)
and un-normalized Clebsch-Gordan coefficients."""
from .core import (
    SemiMagicSquare,
    Sextuple,
    ReducedDecomposition,
    validate_square,
    to_sextuple,
    from_sextuple,
    upshift,
    reduce,
    min_max_entries,
    dual,
)
from .errors import (
    SemiMagicError,
    NotSemiMagic,
    NegativeEntry,
    Unrepresentable,
    OutOfBounds,
    InvalidIndex,
    ResourceBound,
)
from .group import GroupElement, OrbitReport, all_elements, act, act_slots, orbit, classify_reduced
from .enumeration import (
    PathPolynomial,
    path_number,
    path_polynomial,
    hypergeometric_factor,
    row_sum_check,
    franel,
    p_of_s,
    p_recurrence_check,
    oracle_path_count,
)
from .poset import GradedPoset, build, vandermonde_check, order_ideal_size, export_dot
from .cg import (
    CGIndex,
    ReggeIdentity,
    square_from_cg,
    cg_from_square,
    cg_coefficient,
    reciprocity_check,
    transform_polynomial,
    regge_identity,
    regge_orbit_table,
)

__version__ = "0.1.0"
