"""
Free-module decompositions of k[x_0, ..., x_d] over square subrings.

Every polynomial is written as sum_u s_u(t_0, ..., t_d) * u over square-free
monomials u, where t_j stands for a designated generator:

- beta_decompose: t_j -> x_j^2 (a pure exponent split)
- gamma_reduce:   t_j -> y_j, the quadratic covariant (or its alpha-dual)
                  whose degrevlex leading monomial is x_j^2
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Tuple

from fundamental_pairs.core.monomial import Monomial, split_square
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.core.variables import VarTable
from fundamental_pairs.exceptions import ReductionError, VarTableMismatchError
from fundamental_pairs.sl2.covariants import alpha_involution, quadratic_covariants

logger = logging.getLogger(__name__)


def generator_ring(nvars: int) -> VarTable:
    """Coordinates t_0 .. t_{n-1} of the subring R."""
    return VarTable.indexed("t", nvars)


@dataclass(frozen=True)
class SqfreeDecomposition:
    """coeffs[u] is a polynomial in the t-variables; generators[j] is what t_j stands for."""

    vars: VarTable
    generators: Tuple[Polynomial, ...]
    coeffs: Dict[Monomial, Polynomial]

    def coefficient_in_ambient(self, basis_monomial: Monomial) -> Polynomial:
        coefficient = self.coeffs.get(tuple(basis_monomial))
        if coefficient is None:
            return Polynomial.zero(self.vars)
        return coefficient.substitute(self.generators)

    def reassemble(self) -> Polynomial:
        total = Polynomial.zero(self.vars)
        for basis_monomial in self.coeffs:
            total = total + self.coefficient_in_ambient(basis_monomial).mul_monomial(basis_monomial)
        return total


def beta_decompose(f: Polynomial) -> SqfreeDecomposition:
    """Split each exponent e as 2*floor(e/2) + (e mod 2)."""
    nvars = len(f.vars)
    ring = generator_ring(nvars)
    buckets: Dict[Monomial, Dict[Monomial, Fraction]] = {}
    for monomial, coefficient in f.items():
        half, rest = split_square(monomial)
        buckets.setdefault(rest, {})[half] = coefficient
    generators = tuple(
        Polynomial.generator(f.vars, j) * Polynomial.generator(f.vars, j) for j in range(nvars)
    )
    coeffs = {u: Polynomial(ring, terms) for u, terms in buckets.items()}
    return SqfreeDecomposition(f.vars, generators, coeffs)


class GammaReducer:
    """
    Leading-term reduction of k[V_d] against y_0, ..., y_d.

    y_i = T_{2i} and y_{d-i} = alpha(T_{2i}) for 0 <= i <= floor(d/2); for
    even d the middle generator is T_d. Leading coefficients are cached at
    construction.
    """

    def __init__(self, d: int):
        self.d = d
        self.vars = VarTable.indexed("x", d + 1)
        self.ring = generator_ring(d + 1)
        covariants = quadratic_covariants(d, self.vars)
        alpha = alpha_involution(d, self.vars)

        generators: List[Polynomial] = [None] * (d + 1)
        for i, T in enumerate(covariants):
            generators[i] = T
        for i, T in enumerate(covariants):
            if generators[d - i] is None:
                generators[d - i] = alpha(T)
        self.generators: Tuple[Polynomial, ...] = tuple(generators)

        self.leading: List[Fraction] = []
        for j, y in enumerate(self.generators):
            monomial, coefficient = y.leading_term()
            expected = tuple(2 if k == j else 0 for k in range(d + 1))
            if monomial != expected:
                raise ReductionError(f"leading monomial of y_{j} is not x_{j}^2")
            self.leading.append(coefficient)
        self._products: Dict[Monomial, Polynomial] = {}

    def _product(self, half: Monomial) -> Polynomial:
        """prod_j y_j^{half_j}, memoised."""
        if half not in self._products:
            result = Polynomial.constant(self.vars, 1)
            for j, exponent in enumerate(half):
                if exponent:
                    result = result * (self.generators[j] ** exponent)
            self._products[half] = result
        return self._products[half]

    def reduce(self, f: Polynomial) -> SqfreeDecomposition:
        if f.vars != self.vars:
            raise VarTableMismatchError(f"gamma reduction for d={self.d} needs k[x0..x{self.d}]")
        buckets: Dict[Monomial, Dict[Monomial, Fraction]] = {}
        remainder = f
        steps = 0
        while remainder:
            monomial, coefficient = remainder.leading_term()
            half, rest = split_square(monomial)
            scale = coefficient
            for j, exponent in enumerate(half):
                if exponent:
                    scale /= self.leading[j] ** exponent
            bucket = buckets.setdefault(rest, {})
            bucket[half] = bucket.get(half, 0) + scale
            remainder = remainder - self._product(half).mul_monomial(rest, scale)
            steps += 1
        logger.debug(f"gamma reduction finished in {steps} steps")
        coeffs = {u: Polynomial(self.ring, terms) for u, terms in buckets.items()}
        return SqfreeDecomposition(self.vars, self.generators, coeffs)


@lru_cache(maxsize=None)
def gamma_reducer(d: int) -> GammaReducer:
    return GammaReducer(d)


def gamma_reduce(d: int, f: Polynomial) -> SqfreeDecomposition:
    return gamma_reducer(d).reduce(f)
