"""Exception hierarchy shared by every fundamental_pairs sub-package."""

from typing import Optional


class FundamentalPairsError(Exception):
    """Base class for all library errors."""


class PolynomialSyntaxError(FundamentalPairsError):
    """Polynomial text does not conform to the grammar."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownVariableError(FundamentalPairsError):
    """An identifier is not declared in the VarTable."""

    def __init__(self, name: str):
        super().__init__(f"unknown variable '{name}'")
        self.name = name


class VarTableMismatchError(FundamentalPairsError):
    """Operands live in different polynomial rings."""


class VariableCollisionError(FundamentalPairsError):
    """Two variable tables being joined share a name."""


class PreconditionError(FundamentalPairsError):
    """An operation was called outside its domain."""


class NilpotencyCapExceededError(FundamentalPairsError):
    """Iterated application did not reach zero within the cap."""

    def __init__(self, cap: int):
        super().__init__(
            f"derivation not nilpotent on input within cap {cap} "
            "(it may not be locally nilpotent, or the cap is too small)"
        )
        self.cap = cap


class MissingWeightsError(FundamentalPairsError):
    """The pair has no diagonal E-weights on its variables."""


class NonHomogeneousError(FundamentalPairsError):
    """Input is not homogeneous for the required grading."""


class RelationViolationError(FundamentalPairsError):
    """An sl2 relation failed on a generator."""

    def __init__(self, relation: str, witness: Optional[str] = None):
        detail = f" on {witness}" if witness else ""
        super().__init__(f"relation {relation} violated{detail}")
        self.relation = relation
        self.witness = witness


class ReductionError(FundamentalPairsError):
    """A reduction generator does not have the expected leading monomial."""


class DecompositionError(FundamentalPairsError):
    """Isotypic projection hit a zero normalising constant."""


class GuardExceededError(FundamentalPairsError):
    """Groebner computation would exceed a configured size guard."""


class MissingBasisError(FundamentalPairsError):
    """A normal form was requested before the Groebner basis was computed."""


class PointNotOnLocusError(FundamentalPairsError):
    """A sample point does not satisfy the model relations."""
