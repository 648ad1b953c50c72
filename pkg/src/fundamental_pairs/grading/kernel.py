"""
Kernels of D and U on graded slices, and solvability of D^n g = h.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from fundamental_pairs.core.linalg import nullspace, solve
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.exceptions import NonHomogeneousError, PreconditionError
from fundamental_pairs.grading.component import SHIFT, component, image_degree_shift
from fundamental_pairs.sl2.pair import FundamentalPair

logger = logging.getLogger(__name__)


def kernel_basis(
    pair: FundamentalPair, which: str, degree: int, weight: int, power: int = 1
) -> List[Polynomial]:
    """
    Basis of ker(which^power) on the (degree, weight) slice.

    Vectors come from the reduced echelon form: one per free basis monomial,
    in degrevlex order of those monomials.
    """
    if which not in ("D", "U"):
        raise PreconditionError(f"kernel of '{which}' is not supported")
    source = component(pair, degree, weight)
    if not source.basis:
        return []
    matrix = source.matrix_of(which, power)
    vectors = nullspace(matrix.rows, len(source.basis))
    return [source.polynomial(v) for v in vectors]


def solve_image(pair: FundamentalPair, which: str, n: int, h: Polynomial) -> Optional[Polynomial]:
    """
    g with which^n g = h inside the forced source slice, or None.

    The source slice has the degree of h (shifted by the degree change of
    the derivation) and weight(h) - 2n for D, weight(h) + 2n for U.
    """
    if n < 1:
        raise PreconditionError("solve_image needs n >= 1")
    if h.is_zero():
        return Polynomial.zero(pair.vars)
    if not h.is_homogeneous():
        raise NonHomogeneousError("solve_image needs h homogeneous in total degree")
    weight = pair.weight_of(h)
    D = pair.derivation(which)
    source = component(
        pair,
        h.degree() - n * image_degree_shift(D),
        weight - n * SHIFT[which],
    )
    if not source.basis:
        return None
    matrix = source.matrix_of(which, n)
    rhs = matrix.target.coordinates(h)
    solution = solve(matrix.rows, rhs, len(source.basis))
    if solution is None:
        return None
    return source.polynomial(solution)


@dataclass
class ImageStructureReport:
    """Every A_w element is D^w- but not D^{w+1}-solvable; ker U^n never meets im D^n."""

    checked: int = 0
    failures: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def verify_image_structure(
    pair: FundamentalPair, max_weight: int, max_degree: int, max_power: int = 2
) -> ImageStructureReport:
    report = ImageStructureReport()
    for degree in range(1, max_degree + 1):
        for weight in range(0, max_weight + 1):
            for f in kernel_basis(pair, "D", degree, weight):
                report.checked += 1
                if weight >= 1 and solve_image(pair, "D", weight, f) is None:
                    report.failures.append((str(f), f"not in im D^{weight}"))
                if solve_image(pair, "D", weight + 1, f) is not None:
                    report.failures.append((str(f), f"in im D^{weight + 1}"))
        for weight in range(-max_weight, max_weight + 1):
            for n in range(1, max_power + 1):
                for h in kernel_basis(pair, "U", degree, weight, power=n):
                    report.checked += 1
                    if solve_image(pair, "D", n, h) is not None:
                        report.failures.append((str(h), f"in ker U^{n} and im D^{n}"))
    logger.info(f"image structure: {report.checked} elements checked, {len(report.failures)} failures")
    return report
