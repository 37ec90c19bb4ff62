"""
Exact computations with the box-removing operators ``ξ`` and ``∇`` on Schur
functions and back-stable Schubert polynomials: Littlewood-Richardson
coefficients, Stanley symmetric functions and Schur-times-Schubert products,
each cross-checked against brute-force oracles in :mod:`diffschub.oracle`.
"""

from .errors import DiffSchubError
from .exact import FormalSum
from .young import Partition, parse_partition
from .perm import PermutationZ, parse_perm
from .yops import xi, nabla, recover, multiply, rho, xi_lambda
from .bsops import xi_perm, nabla_perm, rho_perm, stanley_coeffs
from .product import schur_times_schubert, verify_product, ProductCache

__version__ = "0.1.0"

__all__ = [
    "DiffSchubError", "FormalSum", "Partition", "parse_partition", "PermutationZ", "parse_perm",
    "xi", "nabla", "recover", "multiply", "rho", "xi_lambda",
    "xi_perm", "nabla_perm", "rho_perm", "stanley_coeffs",
    "schur_times_schubert", "verify_product", "ProductCache",
]
