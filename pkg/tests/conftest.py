"""Shared fixtures: seeded random polynomials over small rings."""

import random
from fractions import Fraction
from typing import Callable, List

import pytest

from fundamental_pairs.core.monomial import monomials_of_degree
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.core.variables import VarTable

SEED = 20240611


def random_polynomial(rng: random.Random, vars: VarTable, max_degree: int, terms: int = 6) -> Polynomial:
    pool: List[tuple] = []
    for total in range(max_degree + 1):
        pool.extend(monomials_of_degree(len(vars), total))
    chosen = rng.sample(pool, min(terms, len(pool)))
    return Polynomial(vars, {m: Fraction(rng.randint(-9, 9), rng.randint(1, 4)) for m in chosen})


@pytest.fixture
def rng() -> random.Random:
    return random.Random(SEED)


@pytest.fixture
def random_poly(rng) -> Callable[..., Polynomial]:
    def make(vars: VarTable, max_degree: int, terms: int = 6) -> Polynomial:
        return random_polynomial(rng, vars, max_degree, terms)

    return make


@pytest.fixture
def xyz() -> VarTable:
    return VarTable.from_names(["x0", "x1", "x2"])
