"""Prehomogeneity of tensor spaces under products of general linear groups."""

__version__ = "0.1.0"

from .castling import CastlingStep, DescentTrace, castle_at, enumerate_tree, equivalent, is_minimal, minimize
from .classifier import Classification, Rule, Verdict, classify, match_weierstrass_pattern, residue_obstruction_check, scan
from .errors import (
    BadPrime,
    BaseTooSmall,
    DimensionTooLarge,
    InternalInvariantError,
    InvalidTuple,
    InvariantBreach,
    NegativeResult,
    NotAdmissible,
    UniquenessViolation,
)
from .kac import block_layout, fib_sequence, kac_admissible, kac_decompose
from .oracle import cross_validate, isotropy_dimension, orbit_rank
from .tuples import TensorTuple, canonicalize, dimension, invariant_n, necessary_condition, parse_tuple
