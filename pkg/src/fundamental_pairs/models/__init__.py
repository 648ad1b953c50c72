"""
Models Module: fundamental pairs on matrix-entry polynomial rings.

- cm: Calogero-Moser pairs of n x n matrices
- cm-rank2: the framed rank-two variant at level tau
- quiver: cyclic quivers with one-dimensional framing
"""

from .checks import (
    Assertion,
    CertificateReport,
    InvarianceReport,
    QuotientReport,
    ShearReport,
    check_certificate,
    check_invariance,
    check_shear,
    check_sl2_mod_ideal,
    relation_residuals,
)
from .instances import ModelInstance, Point, build_cm, build_cm_rank2, build_quiver, default_lambda, locus_points
from .matrices import PolyMatrix

__all__ = [
    "Assertion",
    "CertificateReport",
    "InvarianceReport",
    "ModelInstance",
    "Point",
    "PolyMatrix",
    "QuotientReport",
    "ShearReport",
    "build_cm",
    "build_cm_rank2",
    "build_quiver",
    "check_certificate",
    "check_invariance",
    "check_shear",
    "check_sl2_mod_ideal",
    "default_lambda",
    "locus_points",
    "relation_residuals",
]
