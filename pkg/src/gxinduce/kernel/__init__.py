"""Exact cyclotomic scalars, matrices and linear algebra."""
from __future__ import annotations

from .linalg import (
    ApproxField,
    ExactField,
    Field,
    LinearSolution,
    Mat,
    inverse,
    nullspace,
    rank,
    solve_linear,
)
from .scalar import MAX_CONDUCTOR, ConductorOverflow, Scalar, cyclotomic_poly, lift_conductor

__all__ = [
    "ApproxField",
    "ConductorOverflow",
    "ExactField",
    "Field",
    "LinearSolution",
    "MAX_CONDUCTOR",
    "Mat",
    "Scalar",
    "cyclotomic_poly",
    "inverse",
    "lift_conductor",
    "nullspace",
    "rank",
    "solve_linear",
]
