"""Tests for the polynomial core: variables, text format, arithmetic, exact linear algebra."""

from fractions import Fraction

import pytest

from fundamental_pairs.core import (
    DEGREVLEX,
    Polynomial,
    VarTable,
    nullspace,
    parse_rational,
    poly_parse,
    poly_print,
    rank,
    solve,
)
from fundamental_pairs.core.monomial import divides, lcm, monomials_of_degree, multiply, quotient, split_square
from fundamental_pairs.exceptions import (
    PolynomialSyntaxError,
    PreconditionError,
    UnknownVariableError,
    VariableCollisionError,
    VarTableMismatchError,
)


def test_vartable_rejects_duplicates_and_unknown_names():
    with pytest.raises(VariableCollisionError):
        VarTable.from_names(["a", "b", "a"])
    with pytest.raises(PreconditionError):
        VarTable.from_names(["1x"])
    vars = VarTable.indexed("x", 3)
    assert vars.names == ("x0", "x1", "x2")
    assert vars.index("x2") == 2
    with pytest.raises(UnknownVariableError):
        vars.index("y0")


def test_vartable_concat_detects_collisions():
    x = VarTable.indexed("x", 2)
    y = VarTable.indexed("y", 2)
    assert x.concat([y]).names == ("x0", "x1", "y0", "y1")
    with pytest.raises(VariableCollisionError):
        x.concat([x])


def test_degrevlex_key_orders_by_degree_first():
    assert DEGREVLEX.greater((0, 0, 2), (1, 0, 0))
    # within a degree the first variable's exponent is compared reversed
    assert DEGREVLEX.greater((0, 2, 0), (1, 0, 1))


def test_monomial_helpers():
    assert divides((1, 0, 1), (2, 1, 1))
    assert not divides((0, 2, 0), (1, 1, 1))
    assert quotient((2, 1, 1), (1, 0, 1)) == (1, 1, 0)
    assert lcm((2, 0, 1), (1, 3, 0)) == (2, 3, 1)
    assert split_square((3, 2, 1)) == ((1, 1, 0), (1, 0, 1))


def test_print_uses_leading_sign_and_descending_order(xyz):
    f = poly_parse("2*x0*x2 - x1^2", xyz)
    assert poly_print(f) == "-x1^2 + 2*x0*x2"
    assert poly_print(poly_parse("4/3*x2^3", xyz)) == "4/3*x2^3"
    assert poly_print(poly_parse("5", xyz)) == "5"
    assert poly_print(poly_parse("x0 - x0", xyz)) == "0"


def test_parse_accepts_leading_sign_and_rationals(xyz):
    f = poly_parse("-x0 + 3/2", xyz)
    assert f.degree() == 1
    assert f.leading_coefficient() == -1
    assert f.coefficient((0, 0, 0)) == Fraction(3, 2)


def test_parse_errors_carry_position(xyz):
    with pytest.raises(PolynomialSyntaxError) as exc_info:
        poly_parse("x0 + * x1", xyz)
    assert exc_info.value.position == 5
    with pytest.raises(UnknownVariableError):
        poly_parse("x0 + y", xyz)
    with pytest.raises(PolynomialSyntaxError):
        poly_parse("x0 + 1/0", xyz)


def test_print_parse_round_trip(xyz, random_poly):
    for _ in range(10):
        f = random_poly(xyz, 4)
        assert poly_parse(poly_print(f), xyz) == f


def test_arithmetic_identities(xyz):
    x0, x1 = Polynomial.variable(xyz, "x0"), Polynomial.variable(xyz, "x1")
    assert (x0 + x1) ** 2 == x0 * x0 + 2 * x0 * x1 + x1 * x1
    assert (x0 - x0).is_zero()
    assert (x0 * 3) / 3 == x0
    assert 1 - x0 == -(x0 - 1)
    assert Polynomial.constant(xyz, 4) == 4


def test_mixing_rings_raises(xyz):
    other = VarTable.indexed("y", 3)
    with pytest.raises(VarTableMismatchError):
        Polynomial.variable(xyz, "x0") + Polynomial.variable(other, "y0")


def test_substitute_and_evaluate(xyz):
    f = poly_parse("x0*x1 + x2^2", xyz)
    images = [poly_parse(t, xyz) for t in ("x1", "x0", "x0 + x1")]
    assert f.substitute(images) == poly_parse("x0^2 + 3*x0*x1 + x1^2", xyz)
    assert f.evaluate({"x0": 2, "x1": Fraction(1, 2), "x2": -1}) == 2
    with pytest.raises(PreconditionError):
        f.evaluate({"x0": 1})


def test_primitive_is_positive_integral(xyz):
    f = poly_parse("1/2*x0 - 3/4*x1", xyz)
    assert f.primitive() == poly_parse("2*x0 - 3*x1", xyz)
    assert (-f).primitive() == poly_parse("-2*x0 + 3*x1", xyz)
    assert f.monic().leading_coefficient() == 1


def test_parse_rational():
    assert parse_rational("-4/6") == Fraction(-2, 3)
    with pytest.raises(PolynomialSyntaxError):
        parse_rational("1/0")


def test_nullspace_is_reduced_echelon():
    basis = nullspace([[1, 2, 3]], 3)
    assert basis == [[-2, 1, 0], [-3, 0, 1]]
    assert nullspace([], 2) == [[1, 0], [0, 1]]
    assert nullspace([[1, 0], [0, 1]], 2) == []


def test_nullspace_with_fractions_and_swaps():
    rows = [[0, Fraction(1, 2), 1], [2, 0, Fraction(-2, 3)], [1, 1, Fraction(5, 3)]]
    assert rank(rows, 3) == 2
    (vector,) = nullspace(rows, 3)
    for row in rows:
        assert sum(a * b for a, b in zip(row, vector)) == 0
    assert vector[2] == 1


def test_solve_consistent_and_inconsistent():
    assert solve([[1, 1], [1, -1]], [3, 1], 2) == [2, 1]
    assert solve([[1, 1], [2, 2]], [1, 2], 2) == [1, 0]
    assert solve([[1, 1], [1, 1]], [1, 2], 2) is None


def test_ring_axioms_on_random_polynomials(xyz, random_poly):
    zero = Polynomial.zero(xyz)
    for _ in range(12):
        a, b, c = random_poly(xyz, 3), random_poly(xyz, 3), random_poly(xyz, 2)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()
        assert a + zero == a
        assert a * Polynomial.constant(xyz, 1) == a


def test_construction_is_canonical(xyz, random_poly, rng):
    for _ in range(10):
        f = random_poly(xyz, 4)
        monomials = list(f.monomials())
        rng.shuffle(monomials)
        terms = {m: f.coefficient(m) for m in monomials}
        terms[(5, 0, 0)] = Fraction(0)
        g = Polynomial(xyz, terms)
        assert g == f
        assert hash(g) == hash(f)
        assert poly_print(g) == poly_print(f)
        assert (5, 0, 0) not in g.monomials()


def test_degrevlex_respects_multiplication(rng):
    pool = [m for total in range(4) for m in monomials_of_degree(4, total)]
    for _ in range(200):
        u, v, w = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        if DEGREVLEX.greater(u, v):
            assert DEGREVLEX.greater(multiply(u, w), multiply(v, w))
        elif u != v:
            assert DEGREVLEX.greater(v, u)


@pytest.mark.parametrize("nvars", range(3, 10))
def test_degrevlex_ranks_balanced_quadratics_first(nvars):
    for t in range(1, (nvars - 1) // 2 + 1):
        chain = []
        for k in range(t + 1):
            exponents = [0] * nvars
            exponents[t - k] += 1
            exponents[t + k] += 1
            chain.append(tuple(exponents))
        assert all(DEGREVLEX.greater(a, b) for a, b in zip(chain, chain[1:]))


@pytest.mark.parametrize("text", ["٣*x0", "x0^٣", "x1 + ２"])
def test_parse_accepts_ascii_digits_only(xyz, text):
    with pytest.raises(PolynomialSyntaxError):
        poly_parse(text, xyz)


@pytest.mark.parametrize("text", ["٣", "1/٢", "1.5", "", "2/"])
def test_parse_rational_rejects_non_ascii_and_decimals(text):
    with pytest.raises(PolynomialSyntaxError):
        parse_rational(text)


def test_parse_rational_strips_whitespace():
    assert parse_rational(" +3/9 ") == Fraction(1, 3)
