"""
Pydantic wire records for the command-line reports and point files.
"""

from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, RootModel, field_validator, model_validator

from fundamental_pairs.core.parser import parse_rational, poly_print
from fundamental_pairs.core.polynomial import Polynomial
from fundamental_pairs.derivations.derivation import Derivation
from fundamental_pairs.exceptions import PolynomialSyntaxError
from fundamental_pairs.sl2.pair import FundamentalPair


class Status(str, Enum):
    PASS = "pass"
    FAIL = "fail"
    NOT_FOUND = "not-found-below-bound"


EXIT_CODES = {Status.PASS: 0, Status.FAIL: 1, Status.NOT_FOUND: 3}
USAGE_EXIT_CODE = 2


class DerivationRecord(RootModel[Dict[str, str]]):
    """Variable name -> image polynomial text."""

    @classmethod
    def from_derivation(cls, D: Derivation) -> "DerivationRecord":
        return cls(D.to_mapping())


class PairRecord(BaseModel):
    vars: List[str]
    D: DerivationRecord
    U: DerivationRecord
    weights: Optional[List[int]] = None

    @classmethod
    def from_pair(cls, pair: FundamentalPair) -> "PairRecord":
        return cls(
            vars=list(pair.vars.names),
            D=DerivationRecord.from_derivation(pair.D),
            U=DerivationRecord.from_derivation(pair.U),
            weights=list(pair.weights) if pair.weights is not None else None,
        )


class CertificateRecord(BaseModel):
    kind: str  # A1 or A2
    degree: int = Field(..., ge=1)
    weight: int = Field(..., ge=1, le=2)
    element: str
    derived_from: Optional[str] = Field(default=None, alias="derivedFrom")

    model_config = ConfigDict(populate_by_name=True)


def _check_rationals(point: Dict[str, str]) -> None:
    for name, value in point.items():
        try:
            parse_rational(value)
        except PolynomialSyntaxError as exc:
            raise ValueError(f"{name}: {exc}") from exc


class PointFile(BaseModel):
    """One point as ``assignments`` or several under ``points``; values are rational text."""

    assignments: Optional[Dict[str, str]] = None
    points: Optional[List[Dict[str, str]]] = None

    @field_validator("assignments")
    @classmethod
    def _check_assignments(cls, value: Optional[Dict[str, str]]) -> Optional[Dict[str, str]]:
        if value is not None:
            _check_rationals(value)
        return value

    @field_validator("points")
    @classmethod
    def _check_points(cls, value: Optional[List[Dict[str, str]]]) -> Optional[List[Dict[str, str]]]:
        for point in value or []:
            _check_rationals(point)
        return value

    @model_validator(mode="after")
    def _require_some_point(self) -> "PointFile":
        if not self.assignments and not self.points:
            raise ValueError("point file needs 'assignments' or 'points'")
        return self

    def to_points(self) -> List[Dict[str, Fraction]]:
        raw = ([self.assignments] if self.assignments else []) + list(self.points or [])
        return [{name: parse_rational(value) for name, value in point.items()} for point in raw]


class Report(BaseModel):
    command: str
    inputs: Dict[str, Any]
    result: Dict[str, Any]
    status: Status
    elapsed_ms: int = Field(default=0, alias="elapsedMs")

    model_config = ConfigDict(populate_by_name=True)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.status]

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2)


def text(value: Any) -> Any:
    """Exact text for polynomials and rationals, recursively through containers."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, Polynomial):
        return poly_print(value)
    if isinstance(value, dict):
        return {str(k): text(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [text(v) for v in value]
    return value
