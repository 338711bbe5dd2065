"""Exact algebra: polynomials, resultants, real roots and symmetric matrices."""

from .matrix import (
    CorankError,
    Signature,
    SymMatrix,
    charpoly,
    congruence_diagonalize,
    generalized_inverse,
    kernel_vector,
    nullspace,
    rank,
    signature,
    signature_charpoly,
    signature_congruence,
    signature_from_charpoly,
    solve,
)
from .numbers import GaussianRational, as_rational, rational_str
from .poly import P, Poly
from .resultant import bareiss_det, binary_form_discriminant, discriminant, resultant
from .univariate import RealRoots, RootInterval, rational_roots, sturm_real_roots

__all__ = [
    "CorankError", "GaussianRational", "P", "Poly", "RealRoots", "RootInterval",
    "Signature", "SymMatrix", "as_rational", "bareiss_det", "binary_form_discriminant",
    "charpoly", "congruence_diagonalize", "discriminant", "generalized_inverse",
    "kernel_vector", "nullspace", "rank", "rational_roots", "rational_str", "resultant",
    "signature", "signature_charpoly", "signature_congruence", "signature_from_charpoly",
    "solve", "sturm_real_roots",
]


def sturm_count(f: Poly) -> int:
    """Number of distinct real roots of a univariate polynomial."""
    return sturm_real_roots(f.univariate_coeffs()).count
