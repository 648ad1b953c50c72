"""Ordered variable tables for polynomial rings."""

import re
from dataclasses import dataclass, field
from typing import Dict, Iterable, Sequence, Tuple

from fundamental_pairs.exceptions import (
    PreconditionError,
    UnknownVariableError,
    VariableCollisionError,
)

IDENTIFIER = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")


@dataclass(frozen=True)
class VarTable:
    """
    Declared variables of a polynomial ring.

    Index order is the declaration order; the monomial order ranks the
    last declared variable highest.
    """

    names: Tuple[str, ...]
    rank: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        rank: Dict[str, int] = {}
        for index, name in enumerate(names):
            if not IDENTIFIER.match(name):
                raise PreconditionError(f"invalid variable identifier '{name}'")
            if name in rank:
                raise VariableCollisionError(f"duplicate variable '{name}'")
            rank[name] = index
        object.__setattr__(self, "rank", rank)

    @classmethod
    def from_names(cls, names: Iterable[str]) -> "VarTable":
        return cls(tuple(names))

    @classmethod
    def indexed(cls, prefix: str, count: int) -> "VarTable":
        """Variables ``prefix0 .. prefix{count-1}``."""
        return cls(tuple(f"{prefix}{i}" for i in range(count)))

    def __len__(self) -> int:
        return len(self.names)

    def __contains__(self, name: object) -> bool:
        return name in self.rank

    def __iter__(self):
        return iter(self.names)

    def index(self, name: str) -> int:
        try:
            return self.rank[name]
        except KeyError:
            raise UnknownVariableError(name) from None

    def concat(self, others: Sequence["VarTable"]) -> "VarTable":
        """Disjoint union, keeping block order."""
        names = list(self.names)
        for other in others:
            clash = set(names).intersection(other.names)
            if clash:
                raise VariableCollisionError(
                    f"variable name collision: {', '.join(sorted(clash))}"
                )
            names.extend(other.names)
        return VarTable(tuple(names))
