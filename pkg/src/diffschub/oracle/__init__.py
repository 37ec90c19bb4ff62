"""
Brute-force ground truth from tableaux and polynomials. Nothing in this
package uses the ``ξ``/``∇`` operator machinery, so agreement with it is a
genuine cross-check.
"""

from .poly import MonomialMap, poly_multiply, is_dominant
from .schur import schur_poly, ssyt_expand, ssyt, lr_count, lr_tableaux, check_symmetric
from .schubert import (
    schubert_poly, schubert_poly_pipe_dreams, pipe_dreams, compatible_sequences,
    schubert_basis_expand, monk_rule, stanley_schur_expand, schur_schubert_product, oracle_shift,
)

__all__ = [
    "MonomialMap", "poly_multiply", "is_dominant",
    "schur_poly", "ssyt_expand", "ssyt", "lr_count", "lr_tableaux", "check_symmetric",
    "schubert_poly", "schubert_poly_pipe_dreams", "pipe_dreams", "compatible_sequences",
    "schubert_basis_expand", "monk_rule", "stanley_schur_expand", "schur_schubert_product",
    "oracle_shift",
]
