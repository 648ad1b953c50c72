"""
k-derivations of a polynomial ring, given by their images on generators.

A derivation is stored as one image polynomial per variable; application is
the Leibniz extension and the Lie bracket is evaluated on generators only.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple, Union

from fundamental_pairs.core.monomial import Monomial, multiply
from fundamental_pairs.core.parser import poly_parse, poly_print
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.core.variables import VarTable
from fundamental_pairs.exceptions import PreconditionError, VarTableMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Derivation:
    """A derivation D of Q[vars] with D(vars[i]) = images[i]."""

    vars: VarTable
    images: Tuple[Polynomial, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if len(images) != len(self.vars):
            raise PreconditionError(
                f"derivation needs {len(self.vars)} images, got {len(images)}"
            )
        for image in images:
            if image.vars != self.vars:
                raise VarTableMismatchError("derivation image lives in another ring")
        object.__setattr__(self, "images", images)

    @classmethod
    def zero(cls, vars: VarTable) -> "Derivation":
        return cls(vars, tuple(Polynomial.zero(vars) for _ in vars.names))

    @classmethod
    def from_mapping(cls, vars: VarTable, images: Mapping[str, Union[Polynomial, str]]) -> "Derivation":
        """Images keyed by variable name; unnamed variables map to 0."""
        for name in images:
            vars.index(name)
        resolved = []
        for name in vars.names:
            image = images.get(name, Polynomial.zero(vars))
            if isinstance(image, str):
                image = poly_parse(image, vars)
            resolved.append(image)
        return cls(vars, tuple(resolved))

    def to_mapping(self) -> Dict[str, str]:
        return {name: poly_print(image) for name, image in zip(self.vars.names, self.images)}

    def image(self, name: str) -> Polynomial:
        return self.images[self.vars.index(name)]

    def is_zero(self) -> bool:
        return all(image.is_zero() for image in self.images)

    def image_degree(self) -> int:
        return max((image.degree() for image in self.images), default=-1)

    def apply(self, f: Polynomial) -> Polynomial:
        """Leibniz extension of the generator images, applied to f."""
        if f.vars != self.vars:
            raise VarTableMismatchError("derivation and polynomial live in different rings")
        acc: Dict[Monomial, Fraction] = {}
        for monomial, coefficient in f.items():
            for index, exponent in enumerate(monomial):
                if not exponent:
                    continue
                image = self.images[index]
                if image.is_zero():
                    continue
                lowered = list(monomial)
                lowered[index] -= 1
                lowered = tuple(lowered)
                factor = coefficient * exponent
                for v, b in image.items():
                    w = multiply(lowered, v)
                    acc[w] = acc.get(w, 0) + factor * b
        return Polynomial._trusted(self.vars, acc)

    __call__ = apply

    def power(self, f: Polynomial, n: int) -> Polynomial:
        """D^n f."""
        for _ in range(n):
            if f.is_zero():
                break
            f = self.apply(f)
        return f

    def _check(self, other: "Derivation") -> None:
        if other.vars != self.vars:
            raise VarTableMismatchError("derivations act on different rings")

    def __add__(self, other: "Derivation") -> "Derivation":
        self._check(other)
        return Derivation(self.vars, tuple(a + b for a, b in zip(self.images, other.images)))

    def __sub__(self, other: "Derivation") -> "Derivation":
        self._check(other)
        return Derivation(self.vars, tuple(a - b for a, b in zip(self.images, other.images)))

    def __neg__(self) -> "Derivation":
        return Derivation(self.vars, tuple(-a for a in self.images))

    def scale(self, factor) -> "Derivation":
        return Derivation(self.vars, tuple(a.scale(factor) for a in self.images))

    def __mul__(self, factor) -> "Derivation":
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    __rmul__ = __mul__

    def conjugate(self, substitution: Sequence[Polynomial], inverse: Sequence[Polynomial]) -> "Derivation":
        """phi o D o phi^{-1} for the automorphism x_i -> substitution[i]."""
        return Derivation(
            self.vars,
            tuple(self.apply(inv).substitute(substitution) for inv in inverse),
        )


def apply(D: Derivation, f: Polynomial) -> Polynomial:
    return D.apply(f)


def bracket(D: Derivation, U: Derivation) -> Derivation:
    """[D, U] with images v -> D(U(v)) - U(D(v))."""
    D._check(U)
    return Derivation(
        D.vars,
        tuple(D.apply(u) - U.apply(d) for u, d in zip(U.images, D.images)),
    )
