"""
Operator identities of an sl2-triple, checked on single elements.

p_n(x) = x(x-1)...(x-n+1) and q_n(x) = x(x+1)...(x+n-1) enter through
D^n U^n f = n! p_n(E) f for f in ker D. Because E acts diagonally, a
univariate polynomial in E is applied by evaluating it at the weight of
each E-eigencomponent.
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import List, Optional, Sequence

from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.derivations.nilpotency import nilpotency_degree
from fundamental_pairs.exceptions import PreconditionError
from fundamental_pairs.sl2.pair import FundamentalPair, weight_decompose

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IdentityCheck:
    """Result of one identity check; ``residual`` is LHS - RHS."""

    name: str
    passed: bool
    residual: Polynomial


def pnqn(n: int, which: str = "p") -> List[int]:
    """Integer coefficients of p_n or q_n, lowest degree first."""
    if n < 1:
        raise PreconditionError("p_n and q_n need n >= 1")
    if which not in ("p", "q"):
        raise PreconditionError(f"unknown family '{which}'")
    sign = -1 if which == "p" else 1
    coefficients = [1]
    for i in range(1, n + 1):
        shift = sign * (i - 1)
        # multiply by (x + shift)
        nxt = [0] * (len(coefficients) + 1)
        for k, c in enumerate(coefficients):
            nxt[k + 1] += c
            nxt[k] += shift * c
        coefficients = nxt
    return coefficients


def evaluate_univariate(coefficients: Sequence[int], x: int) -> int:
    total = 0
    for c in reversed(coefficients):
        total = total * x + c
    return total


def apply_in_E(P: FundamentalPair, coefficients: Sequence[int], f: Polynomial) -> Polynomial:
    """poly(E) f via the weight decomposition of f."""
    result = Polynomial.zero(f.vars)
    for weight, component in weight_decompose(P, f).items():
        result = result + component.scale(evaluate_univariate(coefficients, weight))
    return result


def verify_identity2(P: FundamentalPair, f: Polynomial, n: int) -> IdentityCheck:
    """D^n U^n f = n! p_n(E) f for f in ker D."""
    if P.D.apply(f):
        raise PreconditionError("identity D^nU^n = n! p_n(E) needs f in ker D")
    lhs = P.D.power(P.U.power(f, n), n)
    rhs = apply_in_E(P, pnqn(n, "p"), f).scale(factorial(n))
    residual = lhs - rhs
    return IdentityCheck(f"D^{n}U^{n} = {n}! p_{n}(E)", residual.is_zero(), residual)


def verify_identity(P: FundamentalPair, m: int, n: int, f: Polynomial) -> IdentityCheck:
    """D^m U^n f = D^{m-1} U^{n-1} (UD + nE - n(n-1)) f."""
    if m < 1 or n < 1:
        raise PreconditionError("identity needs m, n >= 1")
    lhs = P.D.power(P.U.power(f, n), m)
    inner = P.U.apply(P.D.apply(f)) + P.E.apply(f).scale(n) - f.scale(n * (n - 1))
    rhs = P.D.power(P.U.power(inner, n - 1), m - 1)
    residual = lhs - rhs
    return IdentityCheck(f"D^{m}U^{n} reduction", residual.is_zero(), residual)


def verify_commutation(P: FundamentalPair, m: int, n: int, f: Polynomial) -> List[IdentityCheck]:
    """[D^mU^n, E] = 2(n-m) D^mU^n and [U^nD^m, E] = 2(n-m) U^nD^m on f."""
    Ef = P.E.apply(f)
    checks = []

    forward = P.D.power(P.U.power(f, n), m)
    residual = P.D.power(P.U.power(Ef, n), m) - P.E.apply(forward) - forward.scale(2 * (n - m))
    checks.append(IdentityCheck(f"[D^{m}U^{n},E]", residual.is_zero(), residual))

    backward = P.U.power(P.D.power(f, m), n)
    residual = P.U.power(P.D.power(Ef, m), n) - P.E.apply(backward) - backward.scale(2 * (n - m))
    checks.append(IdentityCheck(f"[U^{n}D^{m},E]", residual.is_zero(), residual))
    return checks


def verify_min_poly(P: FundamentalPair, f: Polynomial, side: str = "A", cap: Optional[int] = None) -> IdentityCheck:
    """
    Minimal-polynomial property of E on kernel elements.

    side "A" (f in ker D): p_{e+1}(E) f = 0 with e = deg_U f.
    side "Omega" (f in ker U): q_{e+1}(E) f = 0 with e = deg_D f.
    """
    if f.is_zero():
        raise PreconditionError("minimal polynomial check needs f != 0")
    if side == "A":
        if P.D.apply(f):
            raise PreconditionError("f is not in ker D")
        e = nilpotency_degree(P.U, f, cap).degree
        coefficients = pnqn(e + 1, "p")
    elif side == "Omega":
        if P.U.apply(f):
            raise PreconditionError("f is not in ker U")
        e = nilpotency_degree(P.D, f, cap).degree
        coefficients = pnqn(e + 1, "q")
    else:
        raise PreconditionError(f"unknown side '{side}'")
    residual = apply_in_E(P, coefficients, f)
    return IdentityCheck(f"{'p' if side == 'A' else 'q'}_{e + 1}(E) f = 0", residual.is_zero(), residual)
