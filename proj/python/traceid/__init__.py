"""Exact checks of SL(2) trace determinant identities."""

from ._core import (
    PolyMatrix,
    Polynomial,
    TraceidError,
    build_thm1,
    build_thm3,
    det,
    det_oracle,
    generic_matrix,
    generic_skew_matrix,
    pfaffian,
    pfaffian_split,
    verify,
    verify_magnus,
    verify_magnus_original,
    verify_thm2,
    verify_trace_relation,
)

__all__ = [
    "PolyMatrix",
    "Polynomial",
    "TraceidError",
    "build_thm1",
    "build_thm3",
    "det",
    "det_oracle",
    "generic_matrix",
    "generic_skew_matrix",
    "pfaffian",
    "pfaffian_split",
    "verify",
    "verify_magnus",
    "verify_magnus_original",
    "verify_thm2",
    "verify_trace_relation",
]
