"""
Classical covariants on k[V_d] and the involution alpha.

alpha(x_i) = (d-i)!/i! x_{d-i} swaps the roles of D and U. The quadratic
covariants T_{2i} = sum_j (-1)^j x_j x_{2i-j} lie in ker D.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Tuple

from fundamental_pairs.core.parser import poly_parse
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.core.variables import VarTable
from fundamental_pairs.derivations.derivation import Derivation
from fundamental_pairs.exceptions import PreconditionError, VarTableMismatchError


@dataclass(frozen=True)
class LinearSubstitution:
    """The ring endomorphism x_i -> images[i]."""

    vars: VarTable
    images: Tuple[Polynomial, ...]

    def __call__(self, f: Polynomial) -> Polynomial:
        if f.vars != self.vars:
            raise VarTableMismatchError("substitution applied outside its ring")
        return f.substitute(self.images)

    def compose(self, other: "LinearSubstitution") -> "LinearSubstitution":
        """self o other."""
        return LinearSubstitution(self.vars, tuple(self(image) for image in other.images))

    def is_identity(self) -> bool:
        return all(
            image == Polynomial.generator(self.vars, i) for i, image in enumerate(self.images)
        )

    def conjugate(self, D: Derivation) -> Derivation:
        """self o D o self, which is the conjugate by self when self is an involution."""
        return D.conjugate(self.images, self.images)


def _binary_form_vars(d: int) -> VarTable:
    if d < 1:
        raise PreconditionError("binary forms need d >= 1")
    return VarTable.indexed("x", d + 1)


def alpha_involution(d: int, vars: VarTable = None) -> LinearSubstitution:
    vars = vars or _binary_form_vars(d)
    images = tuple(
        Polynomial.generator(vars, d - i).scale(Fraction(factorial(d - i), factorial(i)))
        for i in range(d + 1)
    )
    return LinearSubstitution(vars, images)


def quadratic_covariant(d: int, i: int, vars: VarTable = None) -> Polynomial:
    """T_{2i} = sum_{j=0}^{2i} (-1)^j x_j x_{2i-j}."""
    if not 0 <= 2 * i <= d:
        raise PreconditionError(f"T_{2 * i} needs 2i <= d = {d}")
    vars = vars or _binary_form_vars(d)
    total = Polynomial.zero(vars)
    for j in range(2 * i + 1):
        term = Polynomial.generator(vars, j) * Polynomial.generator(vars, 2 * i - j)
        total = total + term.scale((-1) ** j)
    return total


def quadratic_covariants(d: int, vars: VarTable = None) -> List[Polynomial]:
    """T_0, T_2, ..., T_{2m} with m = floor(d/2)."""
    vars = vars or _binary_form_vars(d)
    return [quadratic_covariant(d, i, vars) for i in range(d // 2 + 1)]


BINARY_CUBIC = {
    "f": "2*x0*x2 - x1^2",
    "g": "3*x0^2*x3 - 3*x0*x1*x2 + x1^3",
    "h": "9*x0^2*x3^2 - 18*x0*x1*x2*x3 + 8*x0*x2^3 + 6*x1^3*x3 - 3*x1^2*x2^2",
    "F": "3*x1*x3 - 2*x2^2",
    "G": "3*x0*x3^2 - 3*x1*x2*x3 + 4/3*x2^3",
    "s": "3*x0*x3 - x1*x2",
}


def binary_cubic_covariants() -> Dict[str, Polynomial]:
    """The covariants f, g, h of the cubic, their alpha-duals F, G, and the local slice s."""
    vars = _binary_form_vars(3)
    return {name: poly_parse(text, vars) for name, text in BINARY_CUBIC.items()}
