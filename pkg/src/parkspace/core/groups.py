"""
Registry of irreducible complex reflection groups and their q-Catalan numbers.

Groups are addressed by label:
- ``S<n>``: the symmetric group, rank n-1
- ``G(<m>,<p>,<n>)``: the imprimitive group G(m,p,n)
- ``C<m>``: the cyclic group of order m
- ``D<m>``: the dihedral group of order 2m
- ``G4`` .. ``G37``: the exceptional groups
"""

import re
from fractions import Fraction
from math import prod
from typing import Dict, List, Tuple

from .errors import DomainError
from .exact import LaurentPolynomial, Polynomial, RationalFunction, q_int, q_int_poly
from .models import GroupFamily, ReflectionGroupData

# Shephard-Todd numbering -> (degrees, codegrees)
EXCEPTIONAL_DATA: Dict[int, Tuple[Tuple[int, ...], Tuple[int, ...]]] = {
    4: ((4, 6), (0, 2)),
    5: ((6, 12), (0, 6)),
    6: ((4, 12), (0, 8)),
    7: ((12, 12), (0, 12)),
    8: ((8, 12), (0, 4)),
    9: ((8, 24), (0, 16)),
    10: ((12, 24), (0, 12)),
    11: ((24, 24), (0, 24)),
    12: ((6, 8), (0, 10)),
    13: ((8, 12), (0, 16)),
    14: ((6, 24), (0, 18)),
    15: ((12, 24), (0, 24)),
    16: ((20, 30), (0, 10)),
    17: ((20, 60), (0, 40)),
    18: ((30, 60), (0, 30)),
    19: ((60, 60), (0, 60)),
    20: ((12, 30), (0, 18)),
    21: ((12, 60), (0, 48)),
    22: ((12, 20), (0, 28)),
    23: ((2, 6, 10), (0, 4, 8)),
    24: ((4, 6, 14), (0, 8, 10)),
    25: ((6, 9, 12), (0, 3, 6)),
    26: ((6, 12, 18), (0, 6, 12)),
    27: ((6, 12, 30), (0, 18, 24)),
    28: ((2, 6, 8, 12), (0, 4, 6, 10)),
    29: ((4, 8, 12, 20), (0, 8, 12, 16)),
    30: ((2, 12, 20, 30), (0, 10, 18, 28)),
    31: ((8, 12, 20, 24), (0, 12, 16, 28)),
    32: ((12, 18, 24, 30), (0, 6, 12, 18)),
    33: ((4, 6, 10, 12, 18), (0, 6, 8, 12, 14)),
    34: ((6, 12, 18, 24, 30, 42), (0, 12, 18, 24, 30, 36)),
    35: ((2, 5, 6, 8, 9, 12), (0, 3, 4, 6, 7, 10)),
    36: ((2, 6, 8, 10, 12, 14, 18), (0, 4, 6, 8, 10, 12, 16)),
    37: ((2, 8, 12, 14, 18, 20, 24, 30), (0, 6, 10, 12, 16, 18, 22, 28)),
}

EXCEPTIONAL_ALIASES = {
    23: "H3",
    28: "F4",
    30: "H4",
    35: "E6",
    36: "E7",
    37: "E8",
}

_LABEL_PATTERNS = [
    (re.compile(r"^S(\d+)$"), GroupFamily.SYMMETRIC),
    (re.compile(r"^G\((\d+),(\d+),(\d+)\)$"), GroupFamily.IMPRIMITIVE),
    (re.compile(r"^C(\d+)$"), GroupFamily.CYCLIC),
    (re.compile(r"^D(\d+)$"), GroupFamily.DIHEDRAL),
    (re.compile(r"^G(\d+)$"), GroupFamily.EXCEPTIONAL),
]


def parse_label(label: str) -> Tuple[GroupFamily, Tuple[int, ...]]:
    """Split a group label into its family and integer parameters."""
    text = label.replace(" ", "")
    for index, alias in EXCEPTIONAL_ALIASES.items():
        if text.upper() == alias:
            return GroupFamily.EXCEPTIONAL, (index,)
    for pattern, family in _LABEL_PATTERNS:
        match = pattern.match(text)
        if match:
            return family, tuple(int(g) for g in match.groups())
    raise DomainError(f"Unknown group label '{label}'")


def symmetric_group(n: int) -> ReflectionGroupData:
    if n < 2:
        raise DomainError(f"S<n> needs n >= 2, got {n}")
    return ReflectionGroupData(
        label=f"S{n}",
        family=GroupFamily.SYMMETRIC,
        params=(n,),
        degrees=tuple(range(2, n + 1)),
        codegrees=tuple(range(0, n - 1)),
    )


def imprimitive_group(m: int, p: int, n: int) -> ReflectionGroupData:
    if m < 2 or n < 2 or p < 1 or m % p:
        raise DomainError(f"G(m,p,n) needs m >= 2, n >= 2 and p | m; got G({m},{p},{n})")
    if (m, p, n) == (2, 2, 2):
        raise DomainError("G(2,2,2) is not irreducible")
    degrees = [m * i for i in range(1, n)] + [m * n // p]
    if p < m:
        codegrees = [m * i for i in range(n)]
    else:
        codegrees = [m * i for i in range(n - 1)] + [(n - 1) * m - n]
    return ReflectionGroupData(
        label=f"G({m},{p},{n})",
        family=GroupFamily.IMPRIMITIVE,
        params=(m, p, n),
        degrees=tuple(sorted(degrees)),
        codegrees=tuple(sorted(codegrees)),
    )


def cyclic_group(m: int) -> ReflectionGroupData:
    if m < 2:
        raise DomainError(f"C<m> needs m >= 2, got {m}")
    return ReflectionGroupData(
        label=f"C{m}", family=GroupFamily.CYCLIC, params=(m,), degrees=(m,), codegrees=(0,)
    )


def dihedral_group(m: int) -> ReflectionGroupData:
    if m < 3:
        raise DomainError(f"D<m> needs m >= 3, got {m}")
    return ReflectionGroupData(
        label=f"D{m}",
        family=GroupFamily.DIHEDRAL,
        params=(m,),
        degrees=tuple(sorted((2, m))),
        codegrees=tuple(sorted((0, m - 2))),
    )


def exceptional_group(index: int) -> ReflectionGroupData:
    if index not in EXCEPTIONAL_DATA:
        raise DomainError(f"Exceptional groups are G4..G37, got G{index}")
    degrees, codegrees = EXCEPTIONAL_DATA[index]
    return ReflectionGroupData(
        label=f"G{index}",
        family=GroupFamily.EXCEPTIONAL,
        params=(index,),
        degrees=degrees,
        codegrees=codegrees,
    )


_BUILDERS = {
    GroupFamily.SYMMETRIC: symmetric_group,
    GroupFamily.IMPRIMITIVE: imprimitive_group,
    GroupFamily.CYCLIC: cyclic_group,
    GroupFamily.DIHEDRAL: dihedral_group,
    GroupFamily.EXCEPTIONAL: exceptional_group,
}


def group_data(label: str) -> ReflectionGroupData:
    """Degrees and codegrees of the group with the given label."""
    family, params = parse_label(label)
    return _BUILDERS[family](*params)


def all_exceptional_groups() -> List[ReflectionGroupData]:
    return [exceptional_group(i) for i in sorted(EXCEPTIONAL_DATA)]


def is_dihedral(group: ReflectionGroupData) -> bool:
    """True for ``D<m>`` and for the same group written as ``G(m,m,2)``."""
    if group.family == GroupFamily.DIHEDRAL:
        return True
    if group.family == GroupFamily.IMPRIMITIVE:
        m, p, n = group.params
        return p == m and n == 2
    return False


def dihedral_parameter(group: ReflectionGroupData) -> int:
    if not is_dihedral(group):
        raise DomainError(f"{group.label} is not dihedral")
    return group.params[0]


# q-Catalan numbers


def _require_positive_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")


def _denominator(group: ReflectionGroupData) -> Polynomial:
    return prod((q_int_poly(d) for d in group.degrees), start=Polynomial.one())


def catalan_q(group: ReflectionGroupData, k: int) -> RationalFunction:
    """``Cat_k(W,q) = prod [k+d_i-1]_q / [d_i]_q``."""
    _require_positive_k(k)
    numerator = prod((q_int_poly(k + d - 1) for d in group.degrees), start=Polynomial.one())
    return RationalFunction(numerator, _denominator(group))


def catalan_star_q(group: ReflectionGroupData, k: int) -> RationalFunction:
    """``Cat*_k(W,q) = q^N prod [k-d*_i-1]_q / [d_i]_q``."""
    _require_positive_k(k)
    numerator = LaurentPolynomial(group.N, [1])
    for c in group.codegrees:
        numerator = numerator * q_int(k - c - 1)
    return numerator.to_rational_function() / _denominator(group)


def catalan_star_rewritten(group: ReflectionGroupData, k: int) -> RationalFunction:
    """``prod (q^{d*_i+1} - q^k) / (1 - q^{d_i})``."""
    _require_positive_k(k)
    numerator = prod(
        (Polynomial.monomial(c + 1) - Polynomial.monomial(k) for c in group.codegrees),
        start=Polynomial.one(),
    )
    denominator = prod(
        (Polynomial.one_minus_q_power(d) for d in group.degrees), start=Polynomial.one()
    )
    return RationalFunction(numerator, denominator)


def catalan_star_identity_check(group: ReflectionGroupData, k: int) -> bool:
    """Compare the defining product of Cat*_k with its rewritten form."""
    return catalan_star_q(group, k) == catalan_star_rewritten(group, k)


def catalan_at_one(group: ReflectionGroupData, k: int) -> Fraction:
    """``Cat_k(W,1) = prod (k+d_i-1)/d_i``."""
    _require_positive_k(k)
    return prod((Fraction(k + d - 1, d) for d in group.degrees), start=Fraction(1))


def catalan_star_at_one(group: ReflectionGroupData, k: int) -> Fraction:
    """``Cat*_k(W,1) = prod (k-d*_i-1)/d_i``."""
    _require_positive_k(k)
    return prod(
        (Fraction(k - c - 1, d) for c, d in zip(group.codegrees, group.degrees)),
        start=Fraction(1),
    )


def catalan_star_zero_cases(group: ReflectionGroupData) -> List[int]:
    """Values of k for which Cat*_k vanishes (``k = d*_i + 1``)."""
    return sorted({c + 1 for c in group.codegrees})


def catalan_polynomial(group: ReflectionGroupData, dual: bool = False) -> Polynomial:
    """``Cat_k(W,1)`` (dual: ``Cat*_k(W,1)``) as a polynomial in k."""
    result = Polynomial.one()
    if dual:
        for c, d in zip(group.codegrees, group.degrees):
            result = result * Polynomial([Fraction(-(c + 1), d), Fraction(1, d)])
    else:
        for d in group.degrees:
            result = result * Polynomial([Fraction(d - 1, d), Fraction(1, d)])
    return result
