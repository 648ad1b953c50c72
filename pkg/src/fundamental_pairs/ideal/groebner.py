"""
Buchberger completion under degrevlex, for normal forms and ideal membership.

Only the coprime-leading-monomial criterion is used. The S-pair queue is a
heap keyed by (degree of lcm, insertion order), so the result depends only
on the order of the input generators.
"""

import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from fundamental_pairs.config import config
from fundamental_pairs.core.monomial import DEGREVLEX, Monomial, coprime, degree, divides, lcm, quotient
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.core.variables import VarTable
from fundamental_pairs.exceptions import GuardExceededError, MissingBasisError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroebnerGuards:
    max_variables: int = 12
    max_basis: int = 500
    max_degree: int = 20

    @classmethod
    def from_config(cls) -> "GroebnerGuards":
        return cls(
            max_variables=config.groebner_max_variables,
            max_basis=config.groebner_max_basis,
            max_degree=config.groebner_max_degree,
        )


def reduce(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Full multivariate division remainder of f by ``basis``."""
    leads = [(g.leading_monomial(), g.leading_coefficient(), g) for g in basis if g]
    remainder: Dict[Monomial, Fraction] = {}
    p = f
    while p:
        monomial, coefficient = p.leading_term()
        for lead, lead_coefficient, g in leads:
            if divides(lead, monomial):
                p = p - g.mul_monomial(quotient(monomial, lead), coefficient / lead_coefficient)
                break
        else:
            remainder[monomial] = coefficient
            p = p - Polynomial.monomial(p.vars, monomial, coefficient)
    return Polynomial(f.vars, remainder)


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    uf, cf = f.leading_term()
    ug, cg = g.leading_term()
    m = lcm(uf, ug)
    return f.mul_monomial(quotient(m, uf), 1 / cf) - g.mul_monomial(quotient(m, ug), 1 / cg)


def interreduce(basis: Sequence[Polynomial]) -> List[Polynomial]:
    """Minimal, fully reduced, monic basis sorted by descending leading monomial."""
    ascending = sorted(basis, key=lambda g: DEGREVLEX.key(g.leading_monomial()))
    minimal: List[Polynomial] = []
    for g in ascending:
        if not any(divides(h.leading_monomial(), g.leading_monomial()) for h in minimal):
            minimal.append(g)
    reduced = []
    for index, g in enumerate(minimal):
        others = minimal[:index] + minimal[index + 1:]
        reduced.append(reduce(g, others).monic())
    reduced.sort(key=lambda g: DEGREVLEX.key(g.leading_monomial()), reverse=True)
    return reduced


@dataclass(frozen=True)
class IdealBasis:
    vars: VarTable
    generators: Tuple[Polynomial, ...]
    groebner: Optional[Tuple[Polynomial, ...]] = None
    guards: GroebnerGuards = GroebnerGuards()

    @property
    def is_proper(self) -> bool:
        basis = self._require_basis()
        return not any(g.is_constant() for g in basis)

    def _require_basis(self) -> Tuple[Polynomial, ...]:
        if self.groebner is None:
            raise MissingBasisError("Groebner basis not computed for this ideal")
        return self.groebner

    def normal_form(self, f: Polynomial) -> Polynomial:
        return reduce(f, self._require_basis())

    def contains(self, f: Polynomial) -> bool:
        return self.normal_form(f).is_zero()


def _check_guards(vars: VarTable, polys: Sequence[Polynomial], guards: GroebnerGuards) -> None:
    if len(vars) > guards.max_variables:
        raise GuardExceededError(
            f"{len(vars)} variables exceed the Groebner guard of {guards.max_variables}"
        )
    for p in polys:
        if p.degree() > guards.max_degree:
            raise GuardExceededError(
                f"degree {p.degree()} exceeds the Groebner guard of {guards.max_degree}"
            )


def groebner(gens: Sequence[Polynomial], guards: Optional[GroebnerGuards] = None, vars: Optional[VarTable] = None) -> IdealBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    guards = guards or GroebnerGuards.from_config()
    if vars is None:
        if not gens:
            raise PreconditionError("cannot infer the ring of an empty generator list")
        vars = gens[0].vars
    gens = tuple(gens)
    _check_guards(vars, gens, guards)

    basis: List[Polynomial] = [g.monic() for g in gens if g]
    if not basis:
        return IdealBasis(vars, gens, (), guards)

    queue: List[Tuple[int, int, int, int]] = []
    counter = 0
    for j in range(len(basis)):
        for i in range(j):
            m = lcm(basis[i].leading_monomial(), basis[j].leading_monomial())
            heapq.heappush(queue, (degree(m), counter, i, j))
            counter += 1

    reductions = 0
    while queue and not any(g.is_constant() for g in basis):
        _, _, i, j = heapq.heappop(queue)
        if coprime(basis[i].leading_monomial(), basis[j].leading_monomial()):
            continue
        remainder = reduce(s_polynomial(basis[i], basis[j]), basis)
        reductions += 1
        if remainder.is_zero():
            continue
        if len(basis) >= guards.max_basis:
            raise GuardExceededError(f"basis grew past the guard of {guards.max_basis} elements")
        _check_guards(vars, (remainder,), guards)
        basis.append(remainder.monic())
        new = len(basis) - 1
        for i in range(new):
            m = lcm(basis[i].leading_monomial(), basis[new].leading_monomial())
            heapq.heappush(queue, (degree(m), counter, i, new))
            counter += 1

    result = tuple(interreduce(basis))
    logger.debug(f"Groebner basis: {len(gens)} generators, {reductions} S-pair reductions, {len(result)} elements")
    return IdealBasis(vars, gens, result, guards)


def normal_form(I: IdealBasis, f: Polynomial) -> Polynomial:
    return I.normal_form(f)
