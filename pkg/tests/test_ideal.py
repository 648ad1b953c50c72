"""Tests for the Groebner engine: division, completion, membership and guards."""

from fractions import Fraction

import pytest

from fundamental_pairs.core import VarTable, poly_parse
from fundamental_pairs.core.monomial import divides
from fundamental_pairs.exceptions import GuardExceededError, MissingBasisError, PreconditionError
from fundamental_pairs.ideal import GroebnerGuards, IdealBasis, groebner, interreduce, reduce, s_polynomial
from fundamental_pairs.models import build_quiver


def polys(vars, *texts):
    return [poly_parse(t, vars) for t in texts]


@pytest.fixture
def cubic_curve(xyz):
    return polys(xyz, "x0^2 - x1", "x0*x1 - x2")


def test_reduce_is_division_remainder(xyz):
    (f, g) = polys(xyz, "x0*x1 + x2", "x0")
    assert reduce(f, [g]) == poly_parse("x2", xyz)
    assert reduce(f, []) == f


def test_s_polynomial(cubic_curve, xyz):
    assert s_polynomial(*cubic_curve) == poly_parse("x0*x2 - x1^2", xyz)


def test_interreduce_drops_redundant_generators(xyz):
    basis = interreduce(polys(xyz, "x0", "x0^2 + x1", "x1"))
    assert basis == polys(xyz, "x1", "x0")


def test_groebner_basis_of_curve(cubic_curve, xyz):
    ideal = groebner(cubic_curve)
    assert ideal.groebner == tuple(polys(xyz, "x1^2 - x0*x2", "x0*x1 - x2", "x0^2 - x1"))
    assert ideal.is_proper
    assert ideal.contains(poly_parse("x0^3 - x2", xyz))
    assert not ideal.contains(poly_parse("x0", xyz))
    assert ideal.normal_form(poly_parse("x0^3", xyz)) == poly_parse("x2", xyz)


def test_groebner_is_order_independent_in_result(cubic_curve):
    assert groebner(cubic_curve).groebner == groebner(list(reversed(cubic_curve))).groebner


def test_unit_ideal(xyz):
    ideal = groebner(polys(xyz, "x0", "x0 - 1"))
    assert not ideal.is_proper
    assert ideal.contains(poly_parse("x1*x2 + 7", xyz))


def test_zero_ideal(xyz):
    ideal = groebner([], vars=xyz)
    assert ideal.groebner == ()
    assert ideal.is_proper
    assert not ideal.contains(poly_parse("x0", xyz))
    with pytest.raises(PreconditionError):
        groebner([])


def test_guards(cubic_curve):
    wide = VarTable.indexed("x", 13)
    with pytest.raises(GuardExceededError):
        groebner(polys(wide, "x12"))
    with pytest.raises(GuardExceededError):
        groebner(cubic_curve, guards=GroebnerGuards(max_degree=1))
    with pytest.raises(GuardExceededError):
        groebner(cubic_curve, guards=GroebnerGuards(max_basis=2))


def test_normal_form_needs_basis(xyz):
    ideal = IdealBasis(xyz, tuple(polys(xyz, "x0")))
    with pytest.raises(MissingBasisError):
        ideal.normal_form(poly_parse("x0", xyz))


@pytest.fixture
def quiver_ideal():
    model = build_quiver(2, 1)
    return groebner([g for g in model.locus_relations if g], vars=model.vars)


def test_normal_form_is_a_linear_projection(quiver_ideal, random_poly):
    vars = quiver_ideal.vars
    a, b = Fraction(-7, 2), Fraction(3)
    for _ in range(8):
        f, g = random_poly(vars, 3, terms=5), random_poly(vars, 3, terms=5)
        nf, ng = quiver_ideal.normal_form(f), quiver_ideal.normal_form(g)
        assert quiver_ideal.normal_form(nf) == nf
        assert quiver_ideal.normal_form(f.scale(a) + g.scale(b)) == nf.scale(a) + ng.scale(b)
        assert quiver_ideal.contains(f - nf)


def test_normal_form_respects_products(quiver_ideal, random_poly):
    vars = quiver_ideal.vars
    for _ in range(6):
        f, g = random_poly(vars, 2, terms=4), random_poly(vars, 2, terms=4)
        nf, ng = quiver_ideal.normal_form(f), quiver_ideal.normal_form(g)
        assert quiver_ideal.normal_form(f * g) == quiver_ideal.normal_form(nf * ng)


def test_locus_relations_reduce_to_zero(quiver_ideal):
    assert quiver_ideal.is_proper
    assert all(quiver_ideal.contains(g) for g in quiver_ideal.generators)


def test_random_ideals_have_reduced_bases(xyz, random_poly):
    for _ in range(5):
        gens = [random_poly(xyz, 2, terms=3) for _ in range(2)]
        ideal = groebner(gens)
        basis = ideal.groebner
        assert all(ideal.contains(g) for g in gens)
        for f in basis:
            assert f.leading_coefficient() == 1
            others = [g for g in basis if g is not f]
            assert all(not divides(g.leading_monomial(), m) for g in others for m in f.monomials())
        for i, f in enumerate(basis):
            for g in basis[i + 1:]:
                assert reduce(s_polynomial(f, g), basis).is_zero()
        combination = gens[0] * random_poly(xyz, 1, terms=2) + gens[1] * random_poly(xyz, 1, terms=2)
        assert ideal.contains(combination)
