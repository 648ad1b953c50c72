"""
Ideal Module: a small degrevlex Groebner engine.

Used to decide membership of sl2 relation residuals in moment-map ideals
at desk scale (at most a dozen variables).
"""

from .groebner import GroebnerGuards, IdealBasis, groebner, interreduce, normal_form, reduce, s_polynomial

__all__ = [
    "GroebnerGuards",
    "IdealBasis",
    "groebner",
    "interreduce",
    "normal_form",
    "reduce",
    "s_polynomial",
]
