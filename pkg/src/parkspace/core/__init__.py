"""
Core mathematics for parkspace.

This package contains:
- Exact arithmetic: rationals, polynomials, rational functions, Q(zeta_m)
- Partitions, symmetric function specialisations and characters
- Reflection group data, congruence conditions and table reproduction
- Positivity and integrality certificates
"""

from .errors import DomainError, InexactDivisionError, InvariantError, NotApplicableError, ParkspaceError
from .models import (
    Decomposition,
    PolynomialityConditions,
    ReflectionGroupData,
    ResidueCondition,
    TableReport,
)

__all__ = [
    "DomainError",
    "InexactDivisionError",
    "InvariantError",
    "NotApplicableError",
    "ParkspaceError",
    "Decomposition",
    "PolynomialityConditions",
    "ReflectionGroupData",
    "ResidueCondition",
    "TableReport",
]
