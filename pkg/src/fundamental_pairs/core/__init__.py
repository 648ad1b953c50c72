"""
Core algebra for fundamental-pairs.

Exact rational arithmetic on sparse multivariate polynomials:

- VarTable: ordered, named variables of a polynomial ring
- Monomials as exponent tuples with the degrevlex order
- Polynomial: immutable, canonical, terms kept in descending order
- Text grammar for parsing and printing polynomials
- Fraction-free exact linear algebra (rank, nullspace, solve)
"""

from .linalg import echelon, integer_matrix, nullspace, rank, solve
from .monomial import DEGREVLEX, Monomial, MonomialOrder
from .parser import parse_rational, poly_parse, poly_print
from .polynomial import Polynomial
from .variables import VarTable

__all__ = [
    "DEGREVLEX",
    "Monomial",
    "MonomialOrder",
    "Polynomial",
    "VarTable",
    "echelon",
    "integer_matrix",
    "nullspace",
    "parse_rational",
    "poly_parse",
    "poly_print",
    "rank",
    "solve",
]
