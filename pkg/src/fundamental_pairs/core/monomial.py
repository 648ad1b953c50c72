"""
Monomials as dense exponent tuples, and the degrevlex order.

Variables are ranked x_{N-1} > ... > x_1 > x_0. For monomials of equal
total degree, u > v iff the lowest-index coordinate where they differ has
u_i < v_i; the sort key below encodes exactly that.
"""

from enum import Enum
from functools import reduce
from typing import Iterable, Iterator, Tuple

Monomial = Tuple[int, ...]


class MonomialOrder(str, Enum):
    DEGREVLEX = "degrevlex"

    def key(self, monomial: Monomial) -> Tuple[int, Tuple[int, ...]]:
        """Sort key: larger key means larger monomial."""
        return sum(monomial), tuple(-e for e in monomial)

    def greater(self, u: Monomial, v: Monomial) -> bool:
        return self.key(u) > self.key(v)


DEGREVLEX = MonomialOrder.DEGREVLEX


def one(nvars: int) -> Monomial:
    return (0,) * nvars


def unit(nvars: int, index: int) -> Monomial:
    exponents = [0] * nvars
    exponents[index] = 1
    return tuple(exponents)


def degree(m: Monomial) -> int:
    return sum(m)


def multiply(u: Monomial, v: Monomial) -> Monomial:
    return tuple(a + b for a, b in zip(u, v))


def divides(u: Monomial, v: Monomial) -> bool:
    """True when u | v."""
    return all(a <= b for a, b in zip(u, v))


def quotient(v: Monomial, u: Monomial) -> Monomial:
    """v / u; caller guarantees u | v."""
    return tuple(b - a for a, b in zip(u, v))


def lcm(u: Monomial, v: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(u, v))


def coprime(u: Monomial, v: Monomial) -> bool:
    return all(a == 0 or b == 0 for a, b in zip(u, v))


def is_squarefree(m: Monomial) -> bool:
    return all(e <= 1 for e in m)


def split_square(m: Monomial) -> Tuple[Monomial, Monomial]:
    """Write m = h^2 * r with r square-free; returns (h, r)."""
    return tuple(e // 2 for e in m), tuple(e % 2 for e in m)


def product(monomials: Iterable[Monomial], nvars: int) -> Monomial:
    return reduce(multiply, monomials, one(nvars))


def monomials_of_degree(nvars: int, total: int) -> Iterator[Monomial]:
    """All exponent vectors of the given total degree (unordered)."""
    if nvars == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in monomials_of_degree(nvars - 1, total - first):
            yield (first,) + rest
