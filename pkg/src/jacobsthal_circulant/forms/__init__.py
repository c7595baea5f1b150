"""Closed forms specific to the Jacobsthal and Jacobsthal-Lucas circulants."""

from .determinants import (
    ScalarSet,
    TransformId,
    build_sequence_circulant,
    build_transform,
    det_closed,
    expected_diagonal,
    reduction_defects,
    scalars,
    transform_det_sign,
    triangularize,
)
from .eigen import ClosedFormSingularity, eigenvalue_closed, eigenvalues_closed, numerator_at_minus_one
from .inverses import (
    ClosedInverse,
    Factorization,
    bidiag_block,
    bidiag_inverse_closed,
    direct_sum_factorization,
    hankel_inverse,
    inverse_closed,
    is_hankel,
)
from .report import ClaimRecord, VerificationReport, verify_all

__all__ = [
    "ClaimRecord",
    "ClosedFormSingularity",
    "ClosedInverse",
    "Factorization",
    "ScalarSet",
    "TransformId",
    "VerificationReport",
    "bidiag_block",
    "bidiag_inverse_closed",
    "build_sequence_circulant",
    "build_transform",
    "det_closed",
    "direct_sum_factorization",
    "eigenvalue_closed",
    "eigenvalues_closed",
    "expected_diagonal",
    "hankel_inverse",
    "inverse_closed",
    "is_hankel",
    "numerator_at_minus_one",
    "reduction_defects",
    "scalars",
    "transform_det_sign",
    "triangularize",
    "verify_all",
]
