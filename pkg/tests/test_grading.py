"""Tests for graded slices, kernels, counting oracles and the compatibility criterion."""

import pytest

from fundamental_pairs.core import Polynomial, VarTable, poly_parse
from fundamental_pairs.derivations import Derivation
from fundamental_pairs.exceptions import MissingWeightsError, NonHomogeneousError, PreconditionError
from fundamental_pairs.grading import (
    Verdict,
    cayley_sylvester,
    component,
    criterion,
    default_bound,
    doubled_pair,
    hermite_check,
    kernel_basis,
    quartic_birational_witness,
    restricted_partitions,
    solve_image,
    verify_image_structure,
    verify_named_certificates,
)
from fundamental_pairs.sl2 import FundamentalPair, basic_pair, weight_decompose
from fundamental_pairs.sl2.witness import CertificateKind


def p(pair, text):
    return poly_parse(text, pair.vars)


def proportional(f, g):
    return f.primitive() == g.primitive() or f.primitive() == (-g).primitive()


def test_component_basis_and_matrix():
    cubic = basic_pair(3)
    slice_ = component(cubic, 2, 2)
    assert slice_.basis == ((0, 2, 0, 0), (1, 0, 1, 0))
    matrix = slice_.matrix_of("D")
    assert matrix.target.basis == ((1, 1, 0, 0),)
    assert matrix.rows == ((2, 1),)
    assert slice_.coordinates(p(cubic, "x0*x2 - x1^2")) == [-1, 1]
    with pytest.raises(NonHomogeneousError):
        slice_.coordinates(p(cubic, "x0"))


def test_component_needs_diagonal_weights():
    vars = VarTable.from_names(["X", "Y"])
    pair = FundamentalPair.from_derivations(
        Derivation.from_mapping(vars, {"Y": "X"}), Derivation.from_mapping(vars, {"X": "Y^2"})
    )
    with pytest.raises(MissingWeightsError):
        component(pair, 1, 1)


def test_kernel_basis():
    cubic = basic_pair(3)
    (T2,) = kernel_basis(cubic, "D", 2, 2)
    assert T2.primitive() == p(cubic, "2*x0*x2 - x1^2")
    assert kernel_basis(cubic, "U", 1, -3) == [p(cubic, "x3")]
    assert kernel_basis(cubic, "D", 3, 1) == []
    assert kernel_basis(cubic, "D", 1, 1) == []
    assert kernel_basis(cubic, "D", 1, 1, power=2) == [p(cubic, "x1")]
    with pytest.raises(PreconditionError):
        kernel_basis(cubic, "E", 1, 1)


def test_solve_image():
    cubic = basic_pair(3)
    h = p(cubic, "x0*x1")
    g = solve_image(cubic, "D", 1, h)
    assert cubic.D(g) == h
    assert solve_image(cubic, "D", 3, p(cubic, "2*x0*x2 - x1^2")) is None
    assert solve_image(cubic, "D", 2, Polynomial.zero(cubic.vars)).is_zero()
    with pytest.raises(NonHomogeneousError):
        solve_image(cubic, "D", 1, p(cubic, "x0 + x0*x1"))


def test_restricted_partitions():
    assert restricted_partitions(4, 2, 3) == 2
    assert restricted_partitions(0, 0, 0) == 1
    assert restricted_partitions(5, 1, 4) == 0
    assert restricted_partitions(-1, 3, 3) == 0


def test_cayley_sylvester_known_values():
    assert cayley_sylvester(3, 2, 2) == 1
    assert cayley_sylvester(3, 4, 0) == 1
    assert cayley_sylvester(5, 5, 1) >= 1
    assert cayley_sylvester(3, 2, 1) == 0  # parity
    assert all(cayley_sylvester(4, j, 2) == 0 for j in range(11))
    assert all(cayley_sylvester(3, j, 1) == 0 for j in range(10))


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_counting_matches_nullspace(d):
    pair = basic_pair(d)
    for j in range(5):
        for w in range(j * d + 1):
            assert cayley_sylvester(d, j, w) == len(kernel_basis(pair, "D", j, w)), (d, j, w)


@pytest.mark.slow
@pytest.mark.parametrize("d", [5, 6])
def test_counting_matches_nullspace_sweep(d):
    pair = basic_pair(d)
    for j in range(7):
        for w in range(j * d + 1):
            assert cayley_sylvester(d, j, w) == len(kernel_basis(pair, "D", j, w)), (d, j, w)


def test_hermite_reciprocity_counts():
    for d in range(1, 9):
        for j in range(1, 9):
            for i in range(5):
                assert cayley_sylvester(d, j, i) == cayley_sylvester(j, d, i)


def test_hermite_check_cross_validates():
    report = hermite_check(5, 1, 5, max_slice=80)
    assert report.passed
    assert report.rows[5].count == report.rows[5].reciprocal >= 1
    assert hermite_check(7, 2, 6, max_slice=60).first_mismatch is None


def test_criterion_on_line():
    verdict = criterion(basic_pair(1))
    assert verdict.pair_compatible is Verdict.YES
    assert verdict.pair_certificate.degree == 1
    assert verdict.triple_compatible is Verdict.YES


def test_criterion_squares_pair_certificate_when_bound_is_tight():
    line = basic_pair(1)
    verdict = criterion(line, degree_bound=1)
    certificate = verdict.triple_certificate
    assert certificate.derived_from is not None
    assert certificate.degree == 2
    assert certificate.element == p(line, "x0^2")
    assert certificate.holds(line)


def test_criterion_parity_shortcut():
    verdict = criterion(basic_pair(2), degree_bound=4)
    assert verdict.pair_compatible is Verdict.IMPOSSIBLE
    assert verdict.pair_certificate is None
    assert verdict.triple_compatible is Verdict.YES
    assert verdict.triple_certificate.degree == 1


def test_criterion_on_cubic():
    cubic = basic_pair(3)
    verdict = criterion(cubic, degree_bound=6)
    assert verdict.triple_compatible is Verdict.YES
    assert proportional(verdict.triple_certificate.element, p(cubic, "2*x0*x2 - x1^2"))
    assert verdict.pair_compatible is Verdict.NOT_FOUND
    assert verdict.any_found
    record = verdict.triple_certificate.to_record()
    assert record["kind"] == "A2" and record["degree"] == 2 and record["weight"] == 2


def test_criterion_on_quartic_finds_no_triple():
    verdict = criterion(basic_pair(4), degree_bound=4)
    assert verdict.pair_compatible is Verdict.IMPOSSIBLE
    assert verdict.triple_compatible is Verdict.NOT_FOUND
    assert not verdict.any_found


def test_default_bound():
    assert default_bound(basic_pair(3)) == 5
    assert default_bound(doubled_pair(3)) == 6


@pytest.mark.slow
def test_criterion_on_quintic_and_septic():
    quintic = basic_pair(5)
    verdict = criterion(quintic, degree_bound=5)
    assert verdict.pair_compatible is Verdict.YES
    assert verdict.pair_certificate.degree == 5
    assert verdict.pair_certificate.kind is CertificateKind.A1
    assert criterion(basic_pair(7), degree_bound=7).pair_compatible is Verdict.YES


def test_named_certificates():
    checks = verify_named_certificates()
    assert {c.name for c in checks} == {"V4+V4", "V3+V3"}
    assert all(c.passed for c in checks)
    assert all(c.passed for c in verify_named_certificates(scale=-3))


def test_quartic_birational_witness():
    witness = quartic_birational_witness()
    assert witness.passed
    pair = basic_pair(4)
    assert list(weight_decompose(pair, witness.f)) == [4]
    assert list(weight_decompose(pair, witness.g)) == [6]
    assert witness.g.degree() == 3


def test_image_structure_of_small_forms():
    assert verify_image_structure(basic_pair(2), 2, 3).passed
    assert verify_image_structure(basic_pair(3), 2, 3, max_power=1).passed


@pytest.mark.parametrize("d, max_degree", [(2, 5), (3, 4), (4, 4), (5, 3)])
def test_image_structure_sweep(d, max_degree):
    report = verify_image_structure(basic_pair(d), 5, max_degree)
    assert report.passed, report.failures
    assert report.checked > 0


@pytest.mark.slow
@pytest.mark.parametrize("d", [4, 5, 6])
def test_image_structure_sweep_to_degree_five(d):
    assert verify_image_structure(basic_pair(d), 5, 5).passed


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_kernel_dimensions_are_symmetric_under_weight_flip(d):
    pair = basic_pair(d)
    for degree in range(1, 5):
        for weight in range(0, degree * d + 1):
            assert len(kernel_basis(pair, "U", degree, -weight)) == len(kernel_basis(pair, "D", degree, weight))


@pytest.mark.slow
@pytest.mark.parametrize("d", [5, 6])
def test_kernel_dimensions_are_symmetric_sweep(d):
    pair = basic_pair(d)
    for degree in range(1, 5):
        for weight in range(0, degree * d + 1):
            assert len(kernel_basis(pair, "U", degree, -weight)) == len(kernel_basis(pair, "D", degree, weight))


def test_components_and_matrices_are_memoized():
    cubic = basic_pair(3)
    slice_ = component(cubic, 2, 2)
    assert component(basic_pair(3), 2, 2) is slice_
    assert slice_.matrix_of("D") is slice_.matrix_of("D")
    assert component(cubic, 2, 0) is not slice_
