"""Exact arithmetic: rationals, polynomials in w and eta, matrices over them."""

from .factor import Factorization, factor_rational, is_irreducible, rational_roots
from .hermite import contains, hermite_basis, hermite_rows, module_coordinates
from .matrix import (
    Matrix,
    PolyMat,
    RatMat,
    adjugate,
    char_poly,
    char_poly_by_determinant,
    companion,
    det,
    discriminant,
    inverse_rational,
    nullspace_rational,
    pfaffian,
    poly_matrix,
    rat_matrix,
    resultant_eta,
)
from .poly import (
    ETA,
    W,
    BiPoly,
    BiSpectralPolynomial,
    UniPoly,
    poly_gcd,
    poly_sqrt,
    squarefree,
    squarefree_decomposition,
    to_fraction,
)

__all__ = [
    "ETA", "W", "BiPoly", "BiSpectralPolynomial", "UniPoly", "Matrix", "PolyMat", "RatMat",
    "Factorization", "adjugate", "char_poly", "char_poly_by_determinant", "companion", "contains",
    "det", "discriminant", "factor_rational", "hermite_basis", "hermite_rows", "inverse_rational",
    "is_irreducible", "module_coordinates", "nullspace_rational", "pfaffian", "poly_gcd",
    "poly_matrix", "poly_sqrt", "rat_matrix", "rational_roots", "resultant_eta", "squarefree",
    "squarefree_decomposition", "to_fraction",
]
