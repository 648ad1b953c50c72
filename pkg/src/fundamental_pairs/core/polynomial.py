"""
Sparse multivariate polynomials with exact rational coefficients.

A Polynomial is an immutable map Monomial -> nonzero Fraction bound to a
VarTable. Terms are stored in descending degrevlex order, so the leading
term is the first entry and printing is deterministic.
"""

from fractions import Fraction
from math import gcd
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from fundamental_pairs.core.monomial import (
    DEGREVLEX,
    Monomial,
    MonomialOrder,
    degree as monomial_degree,
    multiply,
    one,
    unit,
)
from fundamental_pairs.core.variables import VarTable
from fundamental_pairs.exceptions import PreconditionError, VarTableMismatchError

Scalar = Union[int, Fraction]


def _sorted_terms(terms: Dict[Monomial, Fraction]) -> Dict[Monomial, Fraction]:
    key = DEGREVLEX.key
    return dict(sorted(terms.items(), key=lambda item: key(item[0]), reverse=True))


class Polynomial:
    """Immutable element of Q[vars]."""

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, vars: VarTable, terms: Optional[Mapping[Monomial, Scalar]] = None):
        cleaned: Dict[Monomial, Fraction] = {}
        nvars = len(vars)
        for monomial, coefficient in (terms or {}).items():
            monomial = tuple(monomial)
            if len(monomial) != nvars:
                raise PreconditionError(
                    f"monomial {monomial} has {len(monomial)} exponents, ring has {nvars} variables"
                )
            coefficient = Fraction(coefficient)
            if coefficient:
                cleaned[monomial] = coefficient
        self.vars = vars
        self._terms = _sorted_terms(cleaned)
        self._hash: Optional[int] = None

    @classmethod
    def _trusted(cls, vars: VarTable, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        """Build from an accumulator that may still hold zero coefficients."""
        poly = cls.__new__(cls)
        poly.vars = vars
        poly._terms = _sorted_terms({m: c for m, c in terms.items() if c})
        poly._hash = None
        return poly

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, vars: VarTable) -> "Polynomial":
        return cls(vars)

    @classmethod
    def constant(cls, vars: VarTable, value: Scalar) -> "Polynomial":
        return cls(vars, {one(len(vars)): value})

    @classmethod
    def variable(cls, vars: VarTable, name: str) -> "Polynomial":
        return cls(vars, {unit(len(vars), vars.index(name)): 1})

    @classmethod
    def generator(cls, vars: VarTable, index: int) -> "Polynomial":
        return cls(vars, {unit(len(vars), index): 1})

    @classmethod
    def monomial(cls, vars: VarTable, exponents: Monomial, coefficient: Scalar = 1) -> "Polynomial":
        return cls(vars, {tuple(exponents): coefficient})

    # -- inspection -----------------------------------------------------

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    def items(self) -> Iterator[Tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def monomials(self) -> List[Monomial]:
        return list(self._terms)

    def coefficient(self, monomial: Monomial) -> Fraction:
        return self._terms.get(tuple(monomial), Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((monomial_degree(m) for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({monomial_degree(m) for m in self._terms}) <= 1

    def leading_term(self, order: MonomialOrder = DEGREVLEX) -> Tuple[Monomial, Fraction]:
        if not self._terms:
            raise PreconditionError("leading term of the zero polynomial")
        if order is DEGREVLEX:
            return next(iter(self._terms.items()))
        return max(self._terms.items(), key=lambda item: order.key(item[0]))

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    # -- arithmetic -----------------------------------------------------

    def _coerce(self, other: object) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            if other.vars is not self.vars and other.vars != self.vars:
                raise VarTableMismatchError(
                    f"cannot combine polynomials over {self.vars.names} and {other.vars.names}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.vars, other)
        return None

    def __add__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in rhs._terms.items():
            acc[m] = acc.get(m, 0) + c
        return Polynomial._trusted(self.vars, acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._trusted(self.vars, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: object) -> "Polynomial":
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in rhs._terms.items():
            acc[m] = acc.get(m, 0) - c
        return Polynomial._trusted(self.vars, acc)

    def __rsub__(self, other: object) -> "Polynomial":
        lhs = self._coerce(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero(self.vars)
        return Polynomial._trusted(self.vars, {m: c * factor for m, c in self._terms.items()})

    def __mul__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: Dict[Monomial, Fraction] = {}
        for u, a in self._terms.items():
            for v, b in rhs._terms.items():
                w = multiply(u, v)
                acc[w] = acc.get(w, 0) + a * b
        return Polynomial._trusted(self.vars, acc)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("polynomial division by zero scalar")
            return self.scale(1 / Fraction(other))
        return NotImplemented

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise PreconditionError("negative polynomial power")
        result = Polynomial.constant(self.vars, 1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def mul_monomial(self, monomial: Monomial, coefficient: Scalar = 1) -> "Polynomial":
        coefficient = Fraction(coefficient)
        return Polynomial._trusted(
            self.vars,
            {multiply(m, monomial): c * coefficient for m, c in self._terms.items()},
        )

    # -- equality -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._terms == Polynomial.constant(self.vars, other)._terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    # -- maps -----------------------------------------------------------

    def substitute(self, images: Sequence["Polynomial"]) -> "Polynomial":
        """Apply the ring homomorphism sending variable i to images[i]."""
        if len(images) != len(self.vars):
            raise PreconditionError("substitution needs one image per variable")
        if not images:
            return Polynomial(self.vars, self._terms)
        target = images[0].vars
        powers: Dict[Tuple[int, int], Polynomial] = {}

        def power(index: int, exponent: int) -> Polynomial:
            key = (index, exponent)
            if key not in powers:
                powers[key] = images[index] ** exponent
            return powers[key]

        acc: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            term = Polynomial.constant(target, c)
            for index, exponent in enumerate(m):
                if exponent:
                    term = term * power(index, exponent)
            for w, b in term._terms.items():
                acc[w] = acc.get(w, 0) + b
        return Polynomial._trusted(target, acc)

    def embed(self, target: VarTable, offset: int) -> "Polynomial":
        """Re-home into a larger table where our variables start at ``offset``."""
        nvars = len(target)
        acc: Dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            exponents = [0] * nvars
            exponents[offset:offset + len(m)] = m
            acc[tuple(exponents)] = c
        return Polynomial._trusted(target, acc)

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        values = [Fraction(assignment[name]) if name in assignment else None for name in self.vars.names]
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for index, exponent in enumerate(m):
                if exponent:
                    value = values[index]
                    if value is None:
                        raise PreconditionError(f"no value for variable '{self.vars.names[index]}'")
                    term *= value ** exponent
            total += term
        return total

    def primitive(self) -> "Polynomial":
        """Positive multiple with coprime integer coefficients."""
        if not self._terms:
            return self
        denominators = 1
        for c in self._terms.values():
            denominators = denominators * c.denominator // gcd(denominators, c.denominator)
        content = 0
        for c in self._terms.values():
            content = gcd(content, c.numerator * (denominators // c.denominator))
        return self.scale(Fraction(denominators, content))

    def monic(self) -> "Polynomial":
        if not self._terms:
            return self
        return self.scale(1 / self.leading_coefficient())

    # -- text -----------------------------------------------------------

    def __str__(self) -> str:
        from fundamental_pairs.core.parser import poly_print

        return poly_print(self)

    def __repr__(self) -> str:
        return f"Polynomial('{self}')"
