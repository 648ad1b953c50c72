"""Small dense matrices with polynomial entries."""

from typing import Callable, Dict, List, Sequence, Tuple

from fundamental_pairs.core.polynomial import Polynomial, Scalar
from fundamental_pairs.core.variables import VarTable
from fundamental_pairs.exceptions import PreconditionError


class PolyMatrix:
    __slots__ = ("vars", "entries")

    def __init__(self, vars: VarTable, entries: Sequence[Sequence[Polynomial]]):
        self.vars = vars
        self.entries: Tuple[Tuple[Polynomial, ...], ...] = tuple(tuple(row) for row in entries)

    @classmethod
    def zeros(cls, vars: VarTable, rows: int, cols: int) -> "PolyMatrix":
        zero = Polynomial.zero(vars)
        return cls(vars, [[zero] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, vars: VarTable, size: int, value: Scalar = 1) -> "PolyMatrix":
        zero = Polynomial.zero(vars)
        diagonal = Polynomial.constant(vars, value)
        return cls(vars, [[diagonal if i == j else zero for j in range(size)] for i in range(size)])

    @classmethod
    def symbolic(cls, vars: VarTable, name: Callable[[int, int], str], rows: int, cols: int) -> "PolyMatrix":
        return cls(vars, [[Polynomial.variable(vars, name(i, j)) for j in range(cols)] for i in range(rows)])

    @classmethod
    def from_blocks(cls, vars: VarTable, blocks: Dict[Tuple[int, int], "PolyMatrix"], grid: int, size: int) -> "PolyMatrix":
        """Square grid x grid arrangement of size x size blocks; missing blocks are zero."""
        full = [[Polynomial.zero(vars)] * (grid * size) for _ in range(grid * size)]
        for (bi, bj), block in blocks.items():
            for i in range(size):
                for j in range(size):
                    full[bi * size + i][bj * size + j] = block.entries[i][j]
        return cls(vars, full)

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.entries), len(self.entries[0]) if self.entries else 0

    def __getitem__(self, index: Tuple[int, int]) -> Polynomial:
        i, j = index
        return self.entries[i][j]

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._same_shape(other)
        return PolyMatrix(self.vars, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        self._same_shape(other)
        return PolyMatrix(self.vars, [[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __mul__(self, other: "PolyMatrix") -> "PolyMatrix":
        rows, inner = self.shape
        if other.shape[0] != inner:
            raise PreconditionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.shape[1]
        result: List[List[Polynomial]] = []
        for i in range(rows):
            row = []
            for j in range(cols):
                total = Polynomial.zero(self.vars)
                for k in range(inner):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        total = total + a * b
                row.append(total)
            result.append(row)
        return PolyMatrix(self.vars, result)

    def power(self, exponent: int) -> "PolyMatrix":
        result = PolyMatrix.identity(self.vars, self.shape[0])
        for _ in range(exponent):
            result = result * self
        return result

    def scale(self, value: Scalar) -> "PolyMatrix":
        return PolyMatrix(self.vars, [[a.scale(value) for a in row] for row in self.entries])

    def commutator(self, other: "PolyMatrix") -> "PolyMatrix":
        return self * other - other * self

    def trace(self) -> Polynomial:
        total = Polynomial.zero(self.vars)
        for i in range(min(self.shape)):
            total = total + self.entries[i][i]
        return total

    def flat(self) -> List[Polynomial]:
        return [a for row in self.entries for a in row]

    def minors2(self) -> List[Polynomial]:
        """All 2x2 minors, rows then columns in lexicographic order."""
        rows, cols = self.shape
        minors = []
        for i in range(rows):
            for k in range(i + 1, rows):
                for j in range(cols):
                    for l in range(j + 1, cols):
                        minors.append(self.entries[i][j] * self.entries[k][l] - self.entries[i][l] * self.entries[k][j])
        return minors

    def _same_shape(self, other: "PolyMatrix") -> None:
        if self.shape != other.shape:
            raise PreconditionError(f"shape mismatch {self.shape} vs {other.shape}")
