"""Exact symmetric-function engine.

Partition-indexed symmetric functions over the fraction field of integer
polynomials in a, b, c, q, t, alpha; deformed complete functions and their
duality with the monomial basis; Heisenberg operators; a generalized Newton
raising operator; a self-adjoint vertex operator whose eigenvectors are
Macdonald-type orthogonal functions; and a Gram-Schmidt oracle for the same
bases.  Everything is computed in exact arithmetic.
"""

from .coeffs import Coeff, PoleError, sym
from .partitions import (
    Partition,
    dominance_geq,
    dominance_gt,
    lambda_plus,
    partitions_of,
    sort_to_partition,
    union,
    z_lambda,
)

__version__ = "0.1.0"

__all__ = [
    "Coeff",
    "PoleError",
    "Partition",
    "dominance_geq",
    "dominance_gt",
    "lambda_plus",
    "partitions_of",
    "sort_to_partition",
    "sym",
    "union",
    "z_lambda",
    "__version__",
]
