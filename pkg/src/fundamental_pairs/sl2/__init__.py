"""
sl2 Module for fundamental pairs.

Provides construction and verification of fundamental pairs (D, U) of
locally nilpotent derivations with E = [D, U]. This module implements:

- Basic pairs on binary forms and blockwise direct sums
- Relation checks and E-weight decompositions
- Operator identities of the triple (D^nU^n on ker D, commutators with E)
- Isotypic decomposition by c_i-projections
- The involution alpha, quadratic covariants and the binary cubic covariants
- Free-module reductions over square subrings
- Local-slice witnesses and compatibility trees
"""

from .covariants import (
    LinearSubstitution,
    alpha_involution,
    binary_cubic_covariants,
    quadratic_covariant,
    quadratic_covariants,
)
from .decomposition import IsotypicDecomposition, isotypic_decompose, projection_constant
from .identities import (
    IdentityCheck,
    apply_in_E,
    evaluate_univariate,
    pnqn,
    verify_commutation,
    verify_identity,
    verify_identity2,
    verify_min_poly,
)
from .pair import (
    FundamentalPair,
    RelationReport,
    basic_pair,
    check_relations,
    diagonal_weights,
    direct_sum,
    verify_generators,
    weight_decompose,
)
from .reduction import GammaReducer, SqfreeDecomposition, beta_decompose, gamma_reduce
from .witness import CertificateKind, CompatibilityTree, SliceWitness, compatibility_tree, useful2_witness

__all__ = [
    "CertificateKind",
    "CompatibilityTree",
    "FundamentalPair",
    "GammaReducer",
    "IdentityCheck",
    "IsotypicDecomposition",
    "LinearSubstitution",
    "RelationReport",
    "SliceWitness",
    "SqfreeDecomposition",
    "alpha_involution",
    "apply_in_E",
    "basic_pair",
    "beta_decompose",
    "binary_cubic_covariants",
    "check_relations",
    "compatibility_tree",
    "diagonal_weights",
    "direct_sum",
    "evaluate_univariate",
    "gamma_reduce",
    "isotypic_decompose",
    "pnqn",
    "projection_constant",
    "quadratic_covariant",
    "quadratic_covariants",
    "useful2_witness",
    "verify_commutation",
    "verify_generators",
    "verify_identity",
    "verify_identity2",
    "verify_min_poly",
    "weight_decompose",
]
