"""
Cayley-Sylvester dimension counts and Hermite reciprocity.

dim A_(w, j) in k[V_d] = N(j, d, t) - N(j, d, t-1) with t = (jd - w)/2,
where N(j, d, t) counts partitions of t into at most j parts of size <= d.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple

from fundamental_pairs.config import config
from fundamental_pairs.grading.component import component
from fundamental_pairs.grading.kernel import kernel_basis
from fundamental_pairs.sl2.pair import basic_pair

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def restricted_partitions(t: int, parts: int, largest: int) -> int:
    """Partitions of t into at most ``parts`` parts, each at most ``largest``."""
    if t < 0:
        return 0
    if t == 0:
        return 1
    if parts <= 0 or largest <= 0:
        return 0
    # either no part equals ``largest``, or remove one such part
    return restricted_partitions(t, parts, largest - 1) + restricted_partitions(t - largest, parts - 1, largest)


def cayley_sylvester(d: int, degree: int, weight: int) -> int:
    """Dimension of the weight-w, degree-j slice of ker D in k[V_d]."""
    if weight < 0 or degree < 0:
        return 0
    twice = degree * d - weight
    if twice < 0 or twice % 2:
        return 0
    t = twice // 2
    return restricted_partitions(t, degree, d) - restricted_partitions(t - 1, degree, d)


@dataclass(frozen=True)
class HermiteRow:
    degree: int
    count: int
    reciprocal: int
    kernel_dimension: Optional[int] = None
    reciprocal_kernel_dimension: Optional[int] = None

    @property
    def consistent(self) -> bool:
        values = {self.count, self.reciprocal}
        values.update(v for v in (self.kernel_dimension, self.reciprocal_kernel_dimension) if v is not None)
        return len(values) == 1


@dataclass(frozen=True)
class HermiteReport:
    d: int
    weight: int
    rows: Tuple[HermiteRow, ...] = field(default_factory=tuple)

    @property
    def first_mismatch(self) -> Optional[Tuple[int, int, int]]:
        for row in self.rows:
            if not row.consistent:
                return (self.d, row.degree, self.weight)
        return None

    @property
    def passed(self) -> bool:
        return self.first_mismatch is None


def _kernel_dimension(d: int, degree: int, weight: int, max_slice: int) -> Optional[int]:
    if d < 1:
        return None
    pair = basic_pair(d)
    if len(component(pair, degree, weight)) > max_slice:
        return None
    return len(kernel_basis(pair, "D", degree, weight))


def hermite_check(d: int, weight: int, up_to: int, max_slice: Optional[int] = None) -> HermiteReport:
    """
    cayley_sylvester(d, j, i) = cayley_sylvester(j, d, i) for j <= up_to, with
    exact nullspace dimensions on both sides where the slice is small enough.
    """
    max_slice = config.hermite_max_slice if max_slice is None else max_slice
    rows: List[HermiteRow] = []
    for j in range(up_to + 1):
        rows.append(
            HermiteRow(
                degree=j,
                count=cayley_sylvester(d, j, weight),
                reciprocal=cayley_sylvester(j, d, weight),
                kernel_dimension=_kernel_dimension(d, j, weight, max_slice),
                reciprocal_kernel_dimension=_kernel_dimension(j, d, weight, max_slice),
            )
        )
    report = HermiteReport(d, weight, tuple(rows))
    if not report.passed:
        logger.error(f"Hermite reciprocity mismatch at {report.first_mismatch}")
    return report
