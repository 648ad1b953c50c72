"""
(degree, weight)-graded slices of a polynomial ring with diagonal E.

A slice is the finite span of the monomials of one total degree and one
E-weight. Derivation matrices between slices are built column by column
from images of basis monomials and cached on the source component.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from fundamental_pairs.core.monomial import DEGREVLEX, Monomial
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.derivations.derivation import Derivation
from fundamental_pairs.exceptions import NonHomogeneousError
from fundamental_pairs.sl2.pair import FundamentalPair

logger = logging.getLogger(__name__)

# weight shift of one application
SHIFT = {"D": 2, "U": -2, "E": 0}


@lru_cache(maxsize=4096)
def slice_exponents(weights: Tuple[int, ...], degree: int, weight: int) -> Tuple[Monomial, ...]:
    """All exponent vectors of the given total degree and weight, degrevlex descending."""
    n = len(weights)
    if degree < 0:
        return ()
    if n == 0:
        return ((),) if degree == 0 and weight == 0 else ()
    lows = [min(weights[i:]) for i in range(n)]
    highs = [max(weights[i:]) for i in range(n)]
    found: List[Monomial] = []

    def extend(i: int, remaining: int, target: int, prefix: Tuple[int, ...]) -> None:
        if i == n - 1:
            if remaining * weights[i] == target:
                found.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rest = remaining - e
            left = target - e * weights[i]
            if rest * lows[i + 1] <= left <= rest * highs[i + 1]:
                extend(i + 1, rest, left, prefix + (e,))

    extend(0, degree, weight, ())
    found.sort(key=DEGREVLEX.key, reverse=True)
    return tuple(found)


def image_degree_shift(D: Derivation) -> int:
    """Change of total degree under D; images must share one degree."""
    degrees = {image.degree() for image in D.images if image}
    if not degrees:
        return 0
    if len(degrees) > 1 or not all(image.is_homogeneous() for image in D.images):
        raise NonHomogeneousError("derivation does not shift total degree uniformly")
    return degrees.pop() - 1


@dataclass(frozen=True)
class DerivationMatrix:
    """Columns indexed by the source basis, rows by the target basis."""

    rows: Tuple[Tuple[Fraction, ...], ...]
    target: "GradedComponent"


@dataclass(frozen=True)
class GradedComponent:
    pair: FundamentalPair = field(repr=False)
    degree: int
    weight: int
    basis: Tuple[Monomial, ...]
    _matrices: Dict[Tuple[str, int], DerivationMatrix] = field(
        default_factory=dict, repr=False, compare=False, hash=False
    )

    def __len__(self) -> int:
        return len(self.basis)

    def polynomial(self, vector: Sequence[Fraction]) -> Polynomial:
        return Polynomial(self.pair.vars, dict(zip(self.basis, vector)))

    def coordinates(self, f: Polynomial) -> List[Fraction]:
        index = {m: i for i, m in enumerate(self.basis)}
        vector = [Fraction(0)] * len(self.basis)
        for monomial, coefficient in f.items():
            if monomial not in index:
                raise NonHomogeneousError(
                    f"polynomial leaves the slice (degree {self.degree}, weight {self.weight})"
                )
            vector[index[monomial]] = coefficient
        return vector

    def matrix_of(self, which: str, power: int = 1) -> DerivationMatrix:
        """Matrix of D^power (or U^power) into its target slice."""
        key = (which, power)
        if key not in self._matrices:
            D = self.pair.derivation(which)
            target = component(
                self.pair,
                self.degree + power * image_degree_shift(D),
                self.weight + power * SHIFT[which],
            )
            columns = [
                target.coordinates(D.power(Polynomial.monomial(self.pair.vars, m), power))
                for m in self.basis
            ]
            rows = tuple(
                tuple(column[r] for column in columns) for r in range(len(target.basis))
            )
            self._matrices[key] = DerivationMatrix(rows, target)
            logger.debug(
                f"matrix of {which}^{power} on slice ({self.degree}, {self.weight}): "
                f"{len(target.basis)}x{len(self.basis)}"
            )
        return self._matrices[key]


@lru_cache(maxsize=1024)
def component(pair: FundamentalPair, degree: int, weight: int) -> GradedComponent:
    """Monomial basis of the (degree, weight) slice; may be empty. Memoized per pair."""
    weights = pair.require_weights()
    return GradedComponent(pair, degree, weight, slice_exponents(tuple(weights), degree, weight))
