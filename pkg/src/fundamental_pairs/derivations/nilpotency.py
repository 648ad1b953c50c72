"""
Nilpotency degrees, local slices and exponential flows of derivations.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from fundamental_pairs.config import config
from fundamental_pairs.core.linalg import rank
from fundamental_pairs.core.monomial import Monomial
from fundamental_pairs.core.polynomial import Polynomial, Scalar
from fundamental_pairs.derivations.derivation import Derivation
from fundamental_pairs.exceptions import NilpotencyCapExceededError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NilpotencyReport:
    """deg_D f together with the chain f, Df, ..., D^degree f."""

    degree: int
    chain: Tuple[Polynomial, ...]

    @property
    def is_local_slice(self) -> bool:
        return self.degree == 1

    @property
    def is_slice(self) -> bool:
        return self.degree == 1 and self.chain[1] == 1


def default_cap(D: Derivation, f: Polynomial) -> int:
    return config.default_nilpotency_cap(max(f.degree(), 0), max(D.image_degree(), 0))


def nilpotency_degree(D: Derivation, f: Polynomial, cap: Optional[int] = None) -> NilpotencyReport:
    """
    Least n with D^{n+1} f = 0, for n up to ``cap`` inclusive.

    Raises:
        PreconditionError: f is zero (its degree is minus infinity)
        NilpotencyCapExceededError: D^{cap+1} f is still nonzero
    """
    if f.is_zero():
        raise PreconditionError("nilpotency degree of the zero polynomial is -infinity")
    cap = cap if cap is not None else default_cap(D, f)
    chain: List[Polynomial] = [f]
    current = f
    for _ in range(cap + 1):
        current = D.apply(current)
        if current.is_zero():
            return NilpotencyReport(len(chain) - 1, tuple(chain))
        chain.append(current)
    logger.warning(f"nilpotency cap {cap} exceeded on polynomial of degree {f.degree()}")
    raise NilpotencyCapExceededError(cap)


def chain_rank(report: NilpotencyReport) -> int:
    """Exact rank of the chain, as coefficient vectors over their joint support."""
    support: List[Monomial] = sorted({m for p in report.chain for m in p.monomials()})
    rows = [[p.coefficient(m) for m in support] for p in report.chain]
    return rank(rows, len(support))


def exp_apply(D: Derivation, t: Scalar, f: Polynomial, cap: Optional[int] = None) -> Polynomial:
    """exp(tD) f = sum_n t^n D^n f / n!, a finite sum for locally nilpotent D."""
    t = Fraction(t)
    if not t or f.is_zero():
        return f
    report = nilpotency_degree(D, f, cap)
    result = Polynomial.zero(f.vars)
    weight = Fraction(1)
    for n, term in enumerate(report.chain):
        if n:
            weight = weight * t / n
        result = result + term.scale(weight)
    return result
