"""
Local-slice witnesses and compatibility trees built from A_1 / A_2 elements.

For nonzero f in ker D of weight 1 or 2, g = U f has the advertised
degrees: weight 1 gives deg_U g = 0 and deg_D g = 1; weight 2 gives
deg_D g = deg_U g = 1. The same elements label the edges of the rooted
trees D -> E <- U (triple) and U -> D (pair).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.derivations.derivation import Derivation
from fundamental_pairs.derivations.nilpotency import nilpotency_degree
from fundamental_pairs.exceptions import PreconditionError, RelationViolationError
from fundamental_pairs.sl2.pair import FundamentalPair

logger = logging.getLogger(__name__)


class CertificateKind(str, Enum):
    A1 = "A1"
    A2 = "A2"

    @property
    def weight(self) -> int:
        return 1 if self is CertificateKind.A1 else 2

    @classmethod
    def for_weight(cls, weight: int) -> "CertificateKind":
        if weight == 1:
            return cls.A1
        if weight == 2:
            return cls.A2
        raise PreconditionError(f"kernel element has weight {weight}, expected 1 or 2")


@dataclass(frozen=True)
class SliceWitness:
    kind: CertificateKind
    g: Polynomial
    degree_D: int
    degree_U: int


def _validate_kernel_element(P: FundamentalPair, f: Polynomial, kind: Optional[CertificateKind]) -> CertificateKind:
    if f.is_zero():
        raise PreconditionError("witness needs f != 0")
    if P.D.apply(f):
        raise PreconditionError("witness needs f in ker D")
    found = CertificateKind.for_weight(P.weight_of(f))
    if kind is not None and CertificateKind(kind) is not found:
        raise PreconditionError(f"f has weight {found.weight}, not {CertificateKind(kind).weight}")
    return found


def useful2_witness(P: FundamentalPair, f: Polynomial, which: Optional[CertificateKind] = None) -> SliceWitness:
    """g = U f with its D- and U-degrees verified."""
    kind = _validate_kernel_element(P, f, which)
    g = P.U.apply(f)
    if g.is_zero():
        raise RelationViolationError("U f != 0 for nonzero f in A_1 or A_2", "f")
    degree_D = nilpotency_degree(P.D, g).degree
    degree_U = nilpotency_degree(P.U, g).degree
    expected = (1, 0) if kind is CertificateKind.A1 else (1, 1)
    if (degree_D, degree_U) != expected:
        raise RelationViolationError(
            f"deg_D g = {expected[0]} and deg_U g = {expected[1]}",
            f"found deg_D g = {degree_D}, deg_U g = {degree_U}",
        )
    return SliceWitness(kind, g, degree_D, degree_U)


@dataclass(frozen=True)
class TreeEdge:
    """Edge source -> target labelled by an element of (ker S^2 minus ker S) meet ker T."""

    source: str
    target: str
    label: Polynomial
    holds: bool


@dataclass(frozen=True)
class CompatibilityTree:
    kind: CertificateKind
    root: str
    edges: Tuple[TreeEdge, ...]

    @property
    def passed(self) -> bool:
        return all(edge.holds for edge in self.edges)


def _edge(P: FundamentalPair, source: str, target: str, label: Polynomial) -> TreeEdge:
    S: Derivation = P.derivation(source)
    T: Derivation = P.derivation(target)
    once = S.apply(label)
    holds = bool(once) and not S.apply(once) and not T.apply(label)
    return TreeEdge(source, target, label, holds)


def compatibility_tree(P: FundamentalPair, f: Polynomial) -> CompatibilityTree:
    """Rooted-tree witness for a kernel element of weight 2 (triple) or 1 (pair)."""
    kind = _validate_kernel_element(P, f, None)
    if kind is CertificateKind.A2:
        g = P.U.apply(f)
        edges = (_edge(P, "D", "E", g), _edge(P, "U", "E", g))
        tree = CompatibilityTree(kind, "E", edges)
    else:
        tree = CompatibilityTree(kind, "D", (_edge(P, "U", "D", f),))
    logger.debug(f"compatibility tree for {kind.value}: passed={tree.passed}")
    return tree
