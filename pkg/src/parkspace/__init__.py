"""
parkspace - generalized parking space characters of complex reflection groups.

The package computes, exactly:
- q-Catalan numbers Cat_k(W,q) and Cat*_k(W,q) and the congruence conditions
  under which they are polynomials or integers
- multiplicities of irreducible and permutation characters in phi_k for the
  symmetric, imprimitive, cyclic and dihedral groups
- gcds of specialised Schur functions and positivity certificates
"""

__version__ = "0.1.0"

from .core.errors import DomainError, InvariantError, ParkspaceError
from .core.groups import group_data

__all__ = [
    "DomainError",
    "InvariantError",
    "ParkspaceError",
    "group_data",
    "__version__",
]
