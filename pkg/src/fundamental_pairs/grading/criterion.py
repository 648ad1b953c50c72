"""
Compatibility criterion by certificate search.

(E, D, U) is a compatible triple iff A_2 != 0, and (D, U) is a compatible
pair iff A_1 != 0. Both are decided up to a degree bound by exact kernel
computations on the weight-1 and weight-2 slices; the only emptiness ever
claimed without a bound is the parity shortcut (all weights even forbids A_1).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional

from fundamental_pairs.config import config
from fundamental_pairs.core.parser import poly_parse, poly_print
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.grading.kernel import kernel_basis
from fundamental_pairs.sl2.pair import FundamentalPair, basic_pair, direct_sum, weight_decompose
from fundamental_pairs.sl2.witness import CertificateKind

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    YES = "yes-with-certificate"
    NOT_FOUND = "not-found-below-bound"
    IMPOSSIBLE = "impossible-by-parity"


@dataclass(frozen=True)
class Certificate:
    kind: CertificateKind
    element: Polynomial
    degree: int
    weight: int
    derived_from: Optional[str] = None  # set when obtained by squaring an A1 certificate

    def holds(self, pair: FundamentalPair) -> bool:
        """Re-check: nonzero, killed by D, single weight equal to the kind's weight."""
        if self.element.is_zero() or pair.D.apply(self.element):
            return False
        components = weight_decompose(pair, self.element)
        return list(components) == [self.kind.weight] == [self.weight]

    def to_record(self) -> Dict[str, object]:
        return {
            "kind": self.kind.value,
            "degree": self.degree,
            "weight": self.weight,
            "element": poly_print(self.element),
        }


@dataclass(frozen=True)
class CriterionVerdict:
    triple_compatible: Verdict
    pair_compatible: Verdict
    search_bound: int
    triple_certificate: Optional[Certificate] = None
    pair_certificate: Optional[Certificate] = None

    @property
    def any_found(self) -> bool:
        return Verdict.YES in (self.triple_compatible, self.pair_compatible)


def default_bound(pair: FundamentalPair) -> int:
    """d + offset when the weights are those of k[V_d]; 4 + offset otherwise."""
    weights = pair.require_weights()
    d = len(weights) - 1
    if d >= 1 and weights == tuple(d - 2 * i for i in range(d + 1)):
        return d + config.criterion_bound_offset
    return 4 + config.criterion_bound_offset


def find_certificate(pair: FundamentalPair, kind: CertificateKind, bound: int) -> Optional[Certificate]:
    """Lowest degree first; within a degree, the first reduced-echelon kernel vector."""
    for degree in range(1, bound + 1):
        basis = kernel_basis(pair, "D", degree, kind.weight)
        logger.debug(f"{kind.value} search: degree {degree}, kernel dimension {len(basis)}")
        if basis:
            return Certificate(kind, basis[0].primitive(), degree, kind.weight)
    return None


def criterion(pair: FundamentalPair, degree_bound: Optional[int] = None) -> CriterionVerdict:
    weights = pair.require_weights()
    bound = default_bound(pair) if degree_bound is None else degree_bound

    if all(w % 2 == 0 for w in weights):
        pair_verdict, pair_certificate = Verdict.IMPOSSIBLE, None
    else:
        pair_certificate = find_certificate(pair, CertificateKind.A1, bound)
        pair_verdict = Verdict.YES if pair_certificate else Verdict.NOT_FOUND

    triple_certificate = find_certificate(pair, CertificateKind.A2, bound)
    if triple_certificate is None and pair_certificate is not None:
        # A is a graded ring, so the square of an A1 element lies in A2
        triple_certificate = Certificate(
            CertificateKind.A2,
            pair_certificate.element * pair_certificate.element,
            2 * pair_certificate.degree,
            2,
            derived_from="A1 certificate squared",
        )
    triple_verdict = Verdict.YES if triple_certificate else Verdict.NOT_FOUND

    for certificate in (pair_certificate, triple_certificate):
        if certificate is not None and not certificate.holds(pair):
            raise AssertionError(f"certificate {certificate.to_record()} fails re-verification")

    if Verdict.NOT_FOUND in (pair_verdict, triple_verdict):
        logger.warning(f"criterion search exhausted degree bound {bound} without a certificate")
    return CriterionVerdict(triple_verdict, pair_verdict, bound, triple_certificate, pair_certificate)


# Displayed kernel elements of V4+V4 (weight 2) and V3+V3 (weight 1), over x_0..x_d, y_0..y_d.
NAMED_CERTIFICATES = {
    "V4+V4": (4, "x0*y3 - x1*y2 + x2*y1 - x3*y0", 2),
    "V3+V3": (3, "2*x0*x2*y2 - x1^2*y2 - 3*x0*x3*y1 + x1*x2*y1 + 3*x1*x3*y0 - 2*x2^2*y0", 1),
}


@dataclass(frozen=True)
class NamedCertificateCheck:
    name: str
    element: Polynomial
    nonzero: bool
    annihilated: bool
    weight: Optional[int]
    expected_weight: int

    @property
    def passed(self) -> bool:
        return self.nonzero and self.annihilated and self.weight == self.expected_weight


def doubled_pair(d: int) -> FundamentalPair:
    """V_d + V_d on x_0..x_d, y_0..y_d."""
    return direct_sum([basic_pair(d, "x"), basic_pair(d, "y")])


def check_named_element(name: str, element: Polynomial, pair: FundamentalPair, expected_weight: int) -> NamedCertificateCheck:
    components = weight_decompose(pair, element)
    weight = next(iter(components)) if len(components) == 1 else None
    return NamedCertificateCheck(
        name=name,
        element=element,
        nonzero=not element.is_zero(),
        annihilated=not pair.D.apply(element),
        weight=weight,
        expected_weight=expected_weight,
    )


def verify_named_certificates(scale: int = 1) -> List[NamedCertificateCheck]:
    """The two displayed kernel elements, optionally rescaled."""
    checks = []
    for name, (d, text, weight) in NAMED_CERTIFICATES.items():
        pair = doubled_pair(d)
        element = poly_parse(text, pair.vars).scale(scale)
        checks.append(check_named_element(name, element, pair, weight))
    return checks


@dataclass(frozen=True)
class QuarticWitness:
    """Nonzero f in A_4, g in A_6 for d = 4 with x3^2 f and x3^3 g of weight 0."""

    f: Polynomial
    g: Polynomial
    f_lifted_weight: int
    g_lifted_weight: int

    @property
    def passed(self) -> bool:
        return self.f_lifted_weight == 0 and self.g_lifted_weight == 0


def quartic_birational_witness(max_degree: int = 6) -> QuarticWitness:
    pair = basic_pair(4)
    found = {}
    for weight in (4, 6):
        certificate = None
        for degree in range(1, max_degree + 1):
            basis = kernel_basis(pair, "D", degree, weight)
            if basis:
                certificate = basis[0].primitive()
                break
        if certificate is None:
            raise AssertionError(f"no kernel element of weight {weight} up to degree {max_degree}")
        found[weight] = certificate
    x3 = Polynomial.variable(pair.vars, "x3")
    f, g = found[4], found[6]
    return QuarticWitness(
        f=f,
        g=g,
        f_lifted_weight=pair.weight_of(x3 ** 2 * f),
        g_lifted_weight=pair.weight_of(x3 ** 3 * g),
    )
