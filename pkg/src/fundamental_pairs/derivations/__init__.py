"""
Derivations of polynomial rings.

- Derivation: images on generators, Leibniz application, linear combinations
- bracket: Lie bracket computed on generators
- nilpotency_degree: deg_D with the witnessing chain, under a cap
- exp_apply: the time-t flow of a locally nilpotent derivation
"""

from .derivation import Derivation, apply, bracket
from .nilpotency import NilpotencyReport, chain_rank, default_cap, exp_apply, nilpotency_degree

__all__ = [
    "Derivation",
    "NilpotencyReport",
    "apply",
    "bracket",
    "chain_rank",
    "default_cap",
    "exp_apply",
    "nilpotency_degree",
]
