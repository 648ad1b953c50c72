"""
Fundamental pairs (D, U) and their sl2-triples (D, U, E = [D, U]).

Key Features:
- Basic pair on k[V_d] and blockwise direct sums
- Integer E-weights per variable whenever E is diagonal on generators
- Relation checking on generators plus a sampled commutation identity
- Splitting of polynomials into E-weight components
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from fundamental_pairs.config import config
from fundamental_pairs.core.monomial import Monomial, monomials_of_degree
from fundamental_pairs.core.parser import poly_print
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.core.variables import VarTable
from fundamental_pairs.derivations.derivation import Derivation, bracket
from fundamental_pairs.exceptions import (
    MissingWeightsError,
    NonHomogeneousError,
    PreconditionError,
    RelationViolationError,
    VarTableMismatchError,
)

logger = logging.getLogger(__name__)

RELATION_D = "[D,[D,U]] = -2D"
RELATION_U = "[U,[D,U]] = 2U"
RELATION_COMMUTATION = "[D^mU^n,E] = 2(n-m)D^mU^n"


def diagonal_weights(E: Derivation) -> Optional[Tuple[int, ...]]:
    """Integer weights w with E(x_i) = w_i x_i, or None if E is not of that shape."""
    weights: List[int] = []
    for index, image in enumerate(E.images):
        if image.is_zero():
            weights.append(0)
            continue
        generator = Polynomial.generator(E.vars, index)
        if len(image) != 1 or image.leading_monomial() != generator.leading_monomial():
            return None
        coefficient = image.leading_coefficient()
        if coefficient.denominator != 1:
            return None
        weights.append(int(coefficient))
    return tuple(weights)


@dataclass(frozen=True)
class FundamentalPair:
    """A candidate sl2-triple; relations are verified by ``check_relations``."""

    D: Derivation
    U: Derivation
    E: Derivation
    weights: Optional[Tuple[int, ...]] = None

    @classmethod
    def from_derivations(cls, D: Derivation, U: Derivation) -> "FundamentalPair":
        E = bracket(D, U)
        return cls(D, U, E, diagonal_weights(E))

    @property
    def vars(self) -> VarTable:
        return self.D.vars

    def require_weights(self) -> Tuple[int, ...]:
        if self.weights is None:
            raise MissingWeightsError("E is not diagonal on the variables of this pair")
        return self.weights

    def monomial_weight(self, monomial: Monomial) -> int:
        weights = self.require_weights()
        return sum(w * e for w, e in zip(weights, monomial))

    def weight_of(self, f: Polynomial) -> int:
        """E-weight of a nonzero weight-homogeneous polynomial."""
        if f.is_zero():
            raise PreconditionError("the zero polynomial has no weight")
        found = {self.monomial_weight(m) for m in f.monomials()}
        if len(found) != 1:
            raise NonHomogeneousError(f"polynomial mixes weights {sorted(found)}")
        return found.pop()

    def derivation(self, which: str) -> Derivation:
        try:
            return {"D": self.D, "U": self.U, "E": self.E}[which]
        except KeyError:
            raise PreconditionError(f"unknown derivation '{which}'") from None

    def to_mapping(self) -> Dict[str, object]:
        return {
            "vars": list(self.vars.names),
            "D": self.D.to_mapping(),
            "U": self.U.to_mapping(),
            "weights": list(self.weights) if self.weights is not None else None,
        }


@dataclass(frozen=True)
class RelationReport:
    """Outcome of ``check_relations``; the first violation carries a witness."""

    passed: bool
    relations_checked: Tuple[str, ...]
    sample_size: int
    violation: Optional[str] = None
    witness: Optional[str] = None
    residual: Optional[Polynomial] = None


def _generator_violation(P: FundamentalPair) -> Optional[RelationReport]:
    DE = bracket(P.D, P.E)
    UE = bracket(P.U, P.E)
    names = P.vars.names
    for index in range(len(names)):
        residual = DE.images[index] + P.D.images[index].scale(2)
        if residual:
            return RelationReport(False, (RELATION_D,), 0, RELATION_D, names[index], residual)
    for index in range(len(names)):
        residual = UE.images[index] - P.U.images[index].scale(2)
        if residual:
            return RelationReport(False, (RELATION_D, RELATION_U), 0, RELATION_U, names[index], residual)
    return None


def _sample_monomials(nvars: int, max_degree: int) -> List[Monomial]:
    sample: List[Monomial] = []
    for total in range(max_degree + 1):
        sample.extend(monomials_of_degree(nvars, total))
    return sample


def check_relations(
    P: FundamentalPair,
    sample_degree: Optional[int] = None,
    max_power: Optional[int] = None,
) -> RelationReport:
    """
    Verify [D,[D,U]] = -2D and [U,[D,U]] = 2U on every generator, then
    [D^mU^n, E] = 2(n-m) D^mU^n on all monomials up to ``sample_degree``
    for 0 <= m, n <= ``max_power``.
    """
    sample_degree = config.relation_sample_degree if sample_degree is None else sample_degree
    max_power = config.relation_max_power if max_power is None else max_power

    failure = _generator_violation(P)
    if failure is not None:
        logger.info(f"relation {failure.violation} fails on {failure.witness}")
        return failure

    sample = _sample_monomials(len(P.vars), sample_degree)
    for monomial in sample:
        f = Polynomial.monomial(P.vars, monomial)
        Ef = P.E.apply(f)
        for n in range(max_power + 1):
            Un_f = P.U.power(f, n)
            Un_Ef = P.U.power(Ef, n)
            for m in range(max_power + 1):
                lhs_inner = P.D.power(Un_f, m)
                lhs = P.D.power(Un_Ef, m) - P.E.apply(lhs_inner)
                residual = lhs - lhs_inner.scale(2 * (n - m))
                if residual:
                    witness = f"m={m}, n={n}, f={poly_print(f)}"
                    logger.info(f"commutation identity fails: {witness}")
                    return RelationReport(
                        False,
                        (RELATION_D, RELATION_U, RELATION_COMMUTATION),
                        len(sample),
                        RELATION_COMMUTATION,
                        witness,
                        residual,
                    )
    logger.debug(f"sl2 relations hold on {len(P.vars)} generators and {len(sample)} sample monomials")
    return RelationReport(True, (RELATION_D, RELATION_U, RELATION_COMMUTATION), len(sample))


def verify_generators(P: FundamentalPair) -> FundamentalPair:
    """Raise RelationViolationError unless both bracket relations hold on generators."""
    failure = _generator_violation(P)
    if failure is not None:
        raise RelationViolationError(failure.violation, failure.witness)
    return P


@lru_cache(maxsize=None)
def basic_pair(d: int, prefix: str = "x") -> FundamentalPair:
    """
    The basic fundamental pair on k[V_d] = k[x_0, ..., x_d].

    D x_i = x_{i-1}, U x_i = (i+1)(d-i) x_{i+1}, weights d - 2i.
    """
    if d < 1:
        raise PreconditionError("basic pair needs d >= 1")
    vars = VarTable.indexed(prefix, d + 1)
    zero = Polynomial.zero(vars)
    D_images = [zero] + [Polynomial.generator(vars, i - 1) for i in range(1, d + 1)]
    U_images = [
        Polynomial.generator(vars, i + 1).scale((i + 1) * (d - i)) for i in range(d)
    ] + [zero]
    pair = FundamentalPair.from_derivations(
        Derivation(vars, tuple(D_images)), Derivation(vars, tuple(U_images))
    )
    return verify_generators(pair)


def direct_sum(pairs: Sequence[FundamentalPair]) -> FundamentalPair:
    """Pair acting blockwise on the disjoint union of the variables."""
    if not pairs:
        raise PreconditionError("direct sum of no pairs")
    if len(pairs) == 1:
        return pairs[0]
    vars = pairs[0].vars.concat([p.vars for p in pairs[1:]])
    D_images: List[Polynomial] = []
    U_images: List[Polynomial] = []
    offset = 0
    for pair in pairs:
        D_images.extend(image.embed(vars, offset) for image in pair.D.images)
        U_images.extend(image.embed(vars, offset) for image in pair.U.images)
        offset += len(pair.vars)
    result = FundamentalPair.from_derivations(
        Derivation(vars, tuple(D_images)), Derivation(vars, tuple(U_images))
    )
    if all(p.weights is not None for p in pairs):
        concatenated = tuple(w for p in pairs for w in p.weights)
        if result.weights != concatenated:
            raise RelationViolationError("blockwise weights", "direct sum")
    return result


def weight_decompose(P: FundamentalPair, f: Polynomial) -> Dict[int, Polynomial]:
    """Split f by total variable-weight, highest weight first."""
    if f.vars != P.vars:
        raise VarTableMismatchError("polynomial does not live in the ring of the pair")
    P.require_weights()
    buckets: Dict[int, Dict[Monomial, Fraction]] = {}
    for monomial, coefficient in f.items():
        buckets.setdefault(P.monomial_weight(monomial), {})[monomial] = coefficient
    return {w: Polynomial(P.vars, buckets[w]) for w in sorted(buckets, reverse=True)}
