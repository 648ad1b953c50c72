"""
Fundamental Pairs

An exact-arithmetic computer-algebra library for sl2 fundamental pairs of
locally nilpotent derivations on polynomial rings: basic pairs on binary
forms, certificate search for the compatibility criterion, and the
Calogero-Moser and cyclic-quiver vector fields with machine-checked
identities.
"""

__version__ = "0.1.0"
__author__ = "Fundamental Pairs Team"
__license__ = "MIT"
