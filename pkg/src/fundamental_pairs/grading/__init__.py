"""
Grading Module for fundamental pairs with diagonal E.

Exact linear algebra on (degree, weight) slices of the polynomial ring:

- Graded components and cached derivation matrices between them
- Kernel bases of D and U (reduced echelon, deterministic)
- Solvability of D^n g = h inside the forced slice
- Cayley-Sylvester counts and Hermite reciprocity cross-checks
- The A_1 / A_2 compatibility criterion with certificates
- Named kernel elements of V4+V4 and V3+V3, and the d = 4 fraction-field witnesses
"""

from .component import DerivationMatrix, GradedComponent, component, slice_exponents
from .counting import HermiteReport, HermiteRow, cayley_sylvester, hermite_check, restricted_partitions
from .criterion import (
    NAMED_CERTIFICATES,
    Certificate,
    CriterionVerdict,
    NamedCertificateCheck,
    QuarticWitness,
    Verdict,
    criterion,
    default_bound,
    doubled_pair,
    find_certificate,
    quartic_birational_witness,
    verify_named_certificates,
)
from .kernel import ImageStructureReport, kernel_basis, solve_image, verify_image_structure

__all__ = [
    "NAMED_CERTIFICATES",
    "Certificate",
    "CriterionVerdict",
    "DerivationMatrix",
    "GradedComponent",
    "HermiteReport",
    "HermiteRow",
    "ImageStructureReport",
    "NamedCertificateCheck",
    "QuarticWitness",
    "Verdict",
    "cayley_sylvester",
    "component",
    "criterion",
    "default_bound",
    "doubled_pair",
    "find_certificate",
    "hermite_check",
    "kernel_basis",
    "quartic_birational_witness",
    "restricted_partitions",
    "slice_exponents",
    "solve_image",
    "verify_image_structure",
    "verify_named_certificates",
]
