"""
Exact linear algebra over Q.

Matrices are numpy object arrays of Python ints (rows are cleared of
denominators first, which leaves row spaces and nullspaces unchanged).
Forward elimination is fraction-free one-step Bareiss with leftmost
nonzero pivots; back substitution runs in Fractions.
"""

import logging
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence, Tuple

import numpy as np

logger = logging.getLogger(__name__)

Row = Sequence[Fraction]


def integer_matrix(rows: Sequence[Row], ncols: int) -> np.ndarray:
    """Scale each row by the lcm of its denominators."""
    matrix = np.zeros((len(rows), ncols), dtype=object)
    for i, row in enumerate(rows):
        common = 1
        for value in row:
            value = Fraction(value)
            common = common * value.denominator // gcd(common, value.denominator)
        for j, value in enumerate(row):
            value = Fraction(value)
            matrix[i, j] = value.numerator * (common // value.denominator)
    return matrix


def echelon(matrix: np.ndarray) -> Tuple[np.ndarray, List[int]]:
    """
    Fraction-free row echelon form.

    Returns the eliminated integer matrix and its pivot columns. Rows past
    ``len(pivots)`` are zero.
    """
    work = np.array(matrix, dtype=object, copy=True)
    nrows, ncols = work.shape
    pivots: List[int] = []
    previous = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        candidates = [i for i in range(r, nrows) if work[i, c] != 0]
        if not candidates:
            continue
        p = candidates[0]
        if p != r:
            work[[r, p]] = work[[p, r]]
        pivot = work[r, c]
        if r + 1 < nrows:
            below = work[r + 1:, c].copy()
            work[r + 1:, c + 1:] = (
                pivot * work[r + 1:, c + 1:] - np.outer(below, work[r, c + 1:])
            ) // previous
            work[r + 1:, c] = 0
        previous = pivot
        pivots.append(c)
        r += 1
    return work, pivots


def rank(rows: Sequence[Row], ncols: int) -> int:
    if not rows or ncols == 0:
        return 0
    _, pivots = echelon(integer_matrix(rows, ncols))
    return len(pivots)


def _back_substitute(
    work: np.ndarray, pivots: List[int], ncols: int, fixed: dict
) -> List[Fraction]:
    """Solve the echelon system with the free coordinates pinned by ``fixed``."""
    solution = [Fraction(0)] * ncols
    for column, value in fixed.items():
        solution[column] = Fraction(value)
    for k in range(len(pivots) - 1, -1, -1):
        column = pivots[k]
        total = Fraction(0)
        for j in range(column + 1, ncols):
            if work[k, j] and solution[j]:
                total += work[k, j] * solution[j]
        solution[column] = -total / work[k, column]
    return solution


def nullspace(rows: Sequence[Row], ncols: int) -> List[List[Fraction]]:
    """
    Reduced-echelon nullspace basis.

    One vector per free column, in column order; each vector is 1 at its
    own free column and 0 at the other free columns.
    """
    if ncols == 0:
        return []
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    work, pivots = echelon(integer_matrix(rows, ncols))
    free = [c for c in range(ncols) if c not in set(pivots)]
    logger.debug(f"nullspace: {len(rows)}x{ncols}, rank {len(pivots)}, dimension {len(free)}")
    basis = []
    for f in free:
        fixed = {c: int(c == f) for c in free}
        basis.append(_back_substitute(work, pivots, ncols, fixed))
    return basis


def solve(rows: Sequence[Row], rhs: Row, ncols: int) -> Optional[List[Fraction]]:
    """
    One solution of ``rows @ x = rhs`` with free coordinates set to 0,
    or None when the system is inconsistent.
    """
    if not rows:
        return [Fraction(0)] * ncols if not any(rhs) else None
    augmented = [list(row) + [rhs[i]] for i, row in enumerate(rows)]
    work, pivots = echelon(integer_matrix(augmented, ncols + 1))
    if pivots and pivots[-1] == ncols:
        return None
    free = [c for c in range(ncols) if c not in set(pivots)]
    fixed = {c: 0 for c in free}
    fixed[ncols] = -1
    solution = _back_substitute(work, pivots, ncols + 1, fixed)
    return solution[:ncols]
