"""
Checks on built models: certificate identities, invariance of the moment
generators, the shear flows, and the sl2 relations on the relation locus.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from fundamental_pairs.core.parser import poly_print
from fundamental_pairs.core.polynomial import Polynomial, Scalar
from fundamental_pairs.derivations.derivation import Derivation, bracket
from fundamental_pairs.derivations.nilpotency import exp_apply, nilpotency_degree
from fundamental_pairs.exceptions import PointNotOnLocusError, PreconditionError
from fundamental_pairs.ideal.groebner import groebner
from fundamental_pairs.models.instances import ModelInstance, Point, locus_points
from fundamental_pairs.models.matrices import PolyMatrix
from fundamental_pairs.sl2.pair import RELATION_D, RELATION_U

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Assertion:
    name: str
    passed: bool
    residual: Optional[Polynomial] = None  # lhs - rhs when the assertion fails

    def to_record(self) -> Dict[str, object]:
        record: Dict[str, object] = {"name": self.name, "passed": self.passed}
        if self.residual is not None and not self.passed:
            record["residual"] = poly_print(self.residual)
        return record


def _equal(name: str, lhs: Polynomial, rhs: Polynomial) -> Assertion:
    residual = lhs - rhs
    return Assertion(name, residual.is_zero(), residual)


@dataclass(frozen=True)
class CertificateReport:
    model: str
    certificate: Polynomial
    assertions: Tuple[Assertion, ...]
    chain: Tuple[Polynomial, ...] = ()

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)


def _ordered_product(blocks: Sequence[PolyMatrix]) -> PolyMatrix:
    product = blocks[0]
    for block in blocks[1:]:
        product = product * block
    return product


def check_certificate(M: ModelInstance) -> CertificateReport:
    D, U = M.pair.D, M.pair.U
    f = M.certificate_fn

    if M.name in ("cm", "cm-rank2"):
        report = nilpotency_degree(U, f)
        assertions = (
            _equal("D(f) = 0", D.apply(f), Polynomial.zero(M.vars)),
            Assertion("deg_U f = 1", report.degree == 1),
        )
        return CertificateReport(M.name, f, assertions, report.chain)

    m = int(M.params["m"])
    X, Y = M.matrices["X"], M.matrices["Y"]
    Df, Uf = D.apply(f), U.apply(f)
    assertions: List[Assertion] = [
        _equal("Df = Tr X^(e+1)", Df, X.power(M.exponent + 1).trace()),
        _equal("Uf = Tr Y^(e+1)", Uf, Y.power(M.exponent + 1).trace()),
    ]
    if m >= 2:
        X_blocks, Y_blocks = M.blocks["X"], M.blocks["Y"]
        assertions.append(_equal("Df = m Tr(X_0 ... X_{m-1})", Df, _ordered_product(X_blocks).trace().scale(m)))
        assertions.append(_equal("Uf = m Tr(Y_{m-1} ... Y_0)", Uf, _ordered_product(Y_blocks[::-1]).trace().scale(m)))
    zero = Polynomial.zero(M.vars)
    assertions.append(_equal("D(Df) = 0", D.apply(Df), zero))
    assertions.append(_equal("U(Uf) = 0", U.apply(Uf), zero))
    return CertificateReport(M.name, f, tuple(assertions), (f, Df))


@dataclass(frozen=True)
class InvarianceReport:
    generators_checked: int
    failures: Tuple[Assertion, ...]

    @property
    def passed(self) -> bool:
        return not self.failures


def check_invariance(M: ModelInstance) -> InvarianceReport:
    failures = []
    for index, g in enumerate(M.moment_generators):
        for label, derivation in (("D", M.pair.D), ("U", M.pair.U)):
            image = derivation.apply(g)
            if image:
                failures.append(Assertion(f"{label}(moment generator {index}) = 0", False, image))
    if failures:
        logger.warning(f"{len(failures)} moment generators of {M.name} are not invariant")
    return InvarianceReport(len(M.moment_generators), tuple(failures))


@dataclass(frozen=True)
class ShearReport:
    t: Fraction
    assertions: Tuple[Assertion, ...]

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)


def check_shear(M: ModelInstance, t: Scalar) -> ShearReport:
    """exp(tD) sends Y to Y + tX^e and exp(tU) sends X to X + tY^e, entrywise."""
    t = Fraction(t)
    X, Y = M.matrices["X"], M.matrices["Y"]
    X_power, Y_power = X.power(M.exponent), Y.power(M.exponent)
    assertions: List[Assertion] = []
    rows, cols = X.shape
    for i in range(rows):
        for j in range(cols):
            if len(Y[i, j]) == 1 and Y[i, j].degree() == 1:
                expected = Y[i, j] + X_power[i, j].scale(t)
                assertions.append(_equal(f"exp(tD) {Y[i, j]}", exp_apply(M.pair.D, t, Y[i, j]), expected))
            if len(X[i, j]) == 1 and X[i, j].degree() == 1:
                expected = X[i, j] + Y_power[i, j].scale(t)
                assertions.append(_equal(f"exp(tU) {X[i, j]}", exp_apply(M.pair.U, t, X[i, j]), expected))

    if M.name == "cm-rank2":
        def var(name: str) -> Polynomial:
            return Polynomial.variable(M.vars, name)

        for i in range(M.n):
            flows = (
                (M.pair.D, f"v2_{i}", var(f"v2_{i}") + var(f"v1_{i}").scale(t)),
                (M.pair.D, f"w1_{i}", var(f"w1_{i}") - var(f"w2_{i}").scale(t)),
                (M.pair.U, f"v1_{i}", var(f"v1_{i}") + var(f"v2_{i}").scale(t)),
                (M.pair.U, f"w2_{i}", var(f"w2_{i}") - var(f"w1_{i}").scale(t)),
            )
            for derivation, name, expected in flows:
                label = "D" if derivation is M.pair.D else "U"
                assertions.append(_equal(f"exp(t{label}) {name}", exp_apply(derivation, t, var(name)), expected))
    return ShearReport(t, tuple(assertions))


@dataclass(frozen=True)
class QuotientReport:
    """Outcome of checking the sl2 relations modulo the locus."""

    model: str
    mode: str
    residuals_checked: int
    points_checked: int = 0
    relation: Optional[str] = None
    witness: Optional[str] = None
    residual: Optional[Polynomial] = None
    value: Optional[Fraction] = None  # residual value at the failing point

    @property
    def passed(self) -> bool:
        return self.witness is None


def relation_residuals(M: ModelInstance) -> List[Tuple[str, str, Polynomial]]:
    """(relation, variable, residual) for ([D,E] + 2D)(v) and ([U,E] - 2U)(v)."""
    P = M.pair
    DE: Derivation = bracket(P.D, P.E)
    UE: Derivation = bracket(P.U, P.E)
    residuals = []
    for index, name in enumerate(M.vars.names):
        residuals.append((RELATION_D, name, DE.images[index] + P.D.images[index].scale(2)))
    for index, name in enumerate(M.vars.names):
        residuals.append((RELATION_U, name, UE.images[index] - P.U.images[index].scale(2)))
    return residuals


def _require_on_locus(M: ModelInstance, point: Point) -> None:
    for relation in M.locus_relations:
        value = relation.evaluate(point)
        if value:
            raise PointNotOnLocusError(
                f"point violates {poly_print(relation)} = 0 (value {value})"
            )


def check_sl2_mod_ideal(M: ModelInstance, mode: str = "groebner", points: Optional[Sequence[Point]] = None) -> QuotientReport:
    """
    groebner: every residual must reduce to zero modulo the locus ideal.
    points: every residual must vanish at each sample point of the locus.
    """
    residuals = relation_residuals(M)

    if mode == "groebner":
        ideal = groebner([g for g in M.locus_relations if g], vars=M.vars)
        for relation, name, residual in residuals:
            remainder = ideal.normal_form(residual)
            if remainder:
                logger.info(f"{M.name}: {relation} fails modulo the ideal on {name}")
                return QuotientReport(M.name, mode, len(residuals), 0, relation, name, remainder)
        return QuotientReport(M.name, mode, len(residuals))

    if mode != "points":
        raise PreconditionError(f"unknown mode '{mode}'")
    sample = list(points) if points is not None else locus_points(M)
    for point in sample:
        _require_on_locus(M, point)
    for point in sample:
        for relation, name, residual in residuals:
            value = residual.evaluate(point)
            if value:
                logger.info(f"{M.name}: {relation} fails on {name} at a locus point")
                return QuotientReport(M.name, mode, len(residuals), len(sample), relation, name, residual, value)
    return QuotientReport(M.name, mode, len(residuals), len(sample))
