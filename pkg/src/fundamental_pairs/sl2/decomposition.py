"""Isotypic decomposition B = sum_n U^n D^n(F_n), element-wise per weight."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional

from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.derivations.nilpotency import nilpotency_degree
from fundamental_pairs.exceptions import DecompositionError
from fundamental_pairs.sl2.pair import FundamentalPair, weight_decompose

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IsotypicDecomposition:
    """parts[n] lies in U^n D^n(F_n); by_weight keeps the per-weight split."""

    parts: Dict[int, Polynomial]
    by_weight: Dict[int, Dict[int, Polynomial]] = field(default_factory=dict)

    def total(self, vars) -> Polynomial:
        result = Polynomial.zero(vars)
        for part in self.parts.values():
            result = result + part
        return result


def projection_constant(weight: int, n: int) -> Fraction:
    """c_1 ... c_n with c_i = i (weight + 2n - i + 1)."""
    constant = Fraction(1)
    for i in range(1, n + 1):
        c = i * (weight + 2 * n - i + 1)
        if c == 0:
            raise DecompositionError(
                f"c_{i} vanishes for weight {weight}, n={n}; the pair is not fundamental"
            )
        constant *= c
    return constant


def _decompose_homogeneous(P: FundamentalPair, weight: int, h: Polynomial, cap: Optional[int]) -> Dict[int, Polynomial]:
    parts: Dict[int, Polynomial] = {}
    previous = None
    while h:
        n = nilpotency_degree(P.D, h, cap).degree
        if previous is not None and n >= previous:
            raise DecompositionError(f"remainder did not drop below deg_D {previous}")
        previous = n
        if n == 0:
            parts[0] = parts.get(0, Polynomial.zero(h.vars)) + h
            break
        top = P.U.power(P.D.power(h, n), n).scale(1 / projection_constant(weight, n))
        parts[n] = parts.get(n, Polynomial.zero(h.vars)) + top
        h = h - top
    return parts


def isotypic_decompose(P: FundamentalPair, f: Polynomial, cap: Optional[int] = None) -> IsotypicDecomposition:
    """
    Split f into parts[n] with D^{n+1} parts[n] = 0 and deg_D parts[n] = n.

    Each weight-w component h is peeled from the top: with n = deg_D h the
    part U^n D^n h / (c_1...c_n) is removed, leaving an element of F_{n-1}.
    """
    by_weight: Dict[int, Dict[int, Polynomial]] = {}
    parts: Dict[int, Polynomial] = {}
    for weight, component in weight_decompose(P, f).items():
        split = _decompose_homogeneous(P, weight, component, cap)
        by_weight[weight] = split
        for n, part in split.items():
            parts[n] = parts.get(n, Polynomial.zero(f.vars)) + part
    ordered = {n: parts[n] for n in sorted(parts) if parts[n]}
    logger.debug(f"isotypic decomposition with parts at n={list(ordered)}")
    return IsotypicDecomposition(ordered, by_weight)
