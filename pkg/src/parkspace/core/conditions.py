"""
Congruence conditions on k.

Three families of conditions are computed here:
- q-polynomiality of Cat_k and Cat*_k, by a divisor-counting scan over one
  period
- integrality of Cat_k(W,1) and Cat*_k(W,1), prime by prime
- the reference conditions under which phi_k is a graded character
"""

import time
from itertools import product
from math import lcm
from typing import Dict, List, Optional, Tuple

from sympy import divisors, factorint, multiplicity
from sympy.ntheory.modular import crt

from ..utils.config import get_config
from ..utils.logging import get_logger, log_performance, log_scan_stats
from ..utils.parallel import parallel_map
from .errors import DomainError, InvariantError
from .exact import cyclotomic_valuation, laurent_quotient_test
from .groups import (
    catalan_at_one,
    catalan_star_at_one,
    catalan_star_zero_cases,
    dihedral_parameter,
    is_dihedral,
)
from .models import (
    GroupFamily,
    PolynomialityConditions,
    ReflectionGroupData,
    ResidueCondition,
    coprime_condition,
)

# Exceptional rows of the reference table: index -> (modulus, residues)
EXCEPTIONAL_CONDITIONS: Dict[int, Tuple[int, Tuple[int, ...]]] = {
    4: (6, (1, 3)),
    5: (6, (1,)),
    6: (12, (1, 9)),
    7: (12, (1,)),
    8: (12, (1, 5)),
    9: (24, (1, 17)),
    10: (12, (1,)),
    11: (24, (1,)),
    12: (24, (1, 11, 17, 19)),
    13: (24, (1, 17)),
    14: (24, (1, 19)),
    15: (24, (1,)),
    16: (30, (1, 11)),
    17: (60, (1, 41)),
    18: (30, (1,)),
    19: (60, (1,)),
    20: (30, (1, 19)),
    21: (60, (1, 49)),
    22: (60, (1, 29, 41, 49)),
    23: (10, (1, 5, 9)),
    24: (14, (1, 9, 11)),
    25: (6, (1,)),
    26: (6, (1,)),
    27: (30, (1, 19, 25)),
    28: (6, (1, 5)),
    29: (20, (1, 9, 13, 17)),
    30: (30, (1, 11, 19, 29)),
    31: (60, (1, 13, 17, 29, 37, 41, 49, 53)),
    32: (30, (1, 7, 13, 19)),
    33: (6, (1,)),
    34: (42, (1, 13, 19, 25, 31, 37)),
    35: (6, (1, 5)),
    36: (6, (1, 5)),
    37: (30, (1, 7, 11, 13, 17, 19, 23, 29)),
}


def scan_period(group: ReflectionGroupData) -> int:
    """A common period of the divisor counts ``N_k(d)`` and ``N*_k(d)``."""
    return lcm(*group.degrees)


def _scan_representative(residue: int, period: int, floor: int) -> int:
    """Smallest ``k ≡ residue mod period`` with ``k > floor``."""
    k = residue
    if k <= floor:
        k += period * ((floor - k) // period + 1)
    return k


def q_polynomiality_condition(
    group: ReflectionGroupData, threads: Optional[int] = None
) -> PolynomialityConditions:
    """Residue sets of k for which Cat_k and Cat*_k are polynomials in q.

    The Cat* set is the periodic part; the finitely many k with
    ``Cat*_k = 0`` are reported in ``zero_cases``.
    """
    start = time.perf_counter()
    period = scan_period(group)
    # representatives above every d*_i + 1 keep zero factors out of the test
    floor = max(group.codegrees) + 1

    def check(residue: int) -> Tuple[bool, bool]:
        k = _scan_representative(residue, period, floor)
        return cat_is_polynomial(group, k), cat_star_is_polynomial(group, k)

    verdicts = parallel_map(check, range(1, period + 1), threads)
    cat = ResidueCondition(
        modulus=period, residues=[r for r, (ok, _) in enumerate(verdicts, 1) if ok]
    ).canonical()
    cat_star = ResidueCondition(
        modulus=period, residues=[r for r, (_, ok) in enumerate(verdicts, 1) if ok]
    ).canonical()
    both = cat.intersect(cat_star)

    log_scan_stats(group.label, period, len(both.residues))
    log_performance(f"polynomiality scan {group.label}", time.perf_counter() - start)
    return PolynomialityConditions(
        group=group.label,
        cat=cat,
        cat_star=cat_star,
        both=both,
        zero_cases=catalan_star_zero_cases(group),
        scan_modulus=period,
    )


def cat_is_polynomial(group: ReflectionGroupData, k: int) -> bool:
    ok, _ = laurent_quotient_test([k + d - 1 for d in group.degrees], list(group.degrees))
    return ok


def cat_star_is_polynomial(group: ReflectionGroupData, k: int) -> bool:
    """Includes the zero cases."""
    ok, _ = laurent_quotient_test([k - c - 1 for c in group.codegrees], list(group.degrees))
    return ok


def zero_case_report(group: ReflectionGroupData, conditions: PolynomialityConditions) -> List[int]:
    """Zero cases of Cat* that fall outside the periodic Cat* set.

    Each of them must fail the Cat condition, otherwise the intersection
    ``both`` would miss a k with both numbers polynomial.
    """
    outside = [k for k in conditions.zero_cases if not conditions.cat_star.contains(k)]
    for k in outside:
        if conditions.cat.contains(k):
            get_logger().warning(f"{group.label}: zero case k={k} passes the Cat condition")
    return outside


# Integrality


def _capped_valuation(x: int, p: int, cap: int) -> int:
    if x % (p ** cap) == 0:
        return cap
    return int(multiplicity(p, abs(x)))


def integrality_condition(group: ReflectionGroupData, dual: bool = False) -> ResidueCondition:
    """Residue set of k with Cat_k(W,1) (dual: Cat*_k(W,1)) an integer.

    For each prime p dividing the group order with ``E = nu_p(|W|)``, the
    residues mod ``p^E`` whose numerator valuation reaches E are collected;
    the per-prime sets are then glued by the Chinese remainder theorem.
    """
    start = time.perf_counter()
    if dual:
        shifts = [-(c + 1) for c in group.codegrees]
    else:
        shifts = [d - 1 for d in group.degrees]

    per_prime: List[ResidueCondition] = []
    for p, e in sorted(factorint(group.order).items()):
        pe = p ** e

        def ok(r: int, p: int = p, e: int = e) -> bool:
            return sum(_capped_valuation(r + s, p, e) for s in shifts) >= e

        condition = ResidueCondition.from_predicate(pe, ok).canonical()
        get_logger().debug(f"{group.label} p={p}: {condition.describe()}")
        per_prime.append(condition)

    moduli = [c.modulus for c in per_prime]
    residues = []
    for combo in product(*(c.residues for c in per_prime)):
        solution = crt(moduli, list(combo))
        if solution is not None:
            residues.append(int(solution[0]))
    result = ResidueCondition(modulus=lcm(1, *moduli), residues=residues).canonical()
    log_performance(
        f"integrality {'Cat*' if dual else 'Cat'} {group.label}", time.perf_counter() - start
    )
    return result


def integrality_by_scan(
    group: ReflectionGroupData, dual: bool = False, periods: Optional[int] = None
) -> ResidueCondition:
    """Naive counterpart of :func:`integrality_condition` over k in ``[1..|W|]``.

    The scan continues over ``periods`` copies of ``|W|`` (default from
    ``compute.scan_periods``) and fails if the pattern does not repeat.
    """
    value = catalan_star_at_one if dual else catalan_at_one

    def integral(k: int) -> bool:
        return value(group, k).denominator == 1

    condition = ResidueCondition.from_predicate(group.order, integral).canonical()
    periods = periods or get_config().compute.scan_periods
    for k in range(group.order + 1, periods * group.order + 1):
        if integral(k) != condition.contains(k):
            raise InvariantError(f"Integrality of {group.label} at k={k} breaks period {group.order}")
    return condition


# Reference conditions


def dihedral_character_condition(m: int) -> ResidueCondition:
    """``k = 1``, or ``k >= m-1`` and ``k^2 ≡ 1`` mod 2m (m even) or mod m (m odd)."""
    if m < 2:
        raise DomainError(f"Dihedral parameter must be at least 2, got {m}")
    modulus = 2 * m if m % 2 == 0 else m
    return ResidueCondition.from_predicate(
        modulus, lambda r: (r * r - 1) % modulus == 0, min_k=m - 1
    )


def main_condition(group: ReflectionGroupData, ungraded: bool = False) -> ResidueCondition:
    """The reference congruence condition on k for the group.

    With ``ungraded=True`` dihedral groups get the condition under which
    phi_k is a (permutation) character, which carries a floor on k.
    """
    family = GroupFamily(group.family)
    if is_dihedral(group):
        m = dihedral_parameter(group)
        if ungraded:
            return dihedral_character_condition(m)
        return ResidueCondition(modulus=m, residues=[1, m - 1]).canonical()
    if family == GroupFamily.SYMMETRIC:
        return coprime_condition(group.params[0])
    if family == GroupFamily.IMPRIMITIVE:
        return ResidueCondition(modulus=group.params[0], residues=[1]).canonical()
    if family == GroupFamily.CYCLIC:
        return ResidueCondition(modulus=group.params[0], residues=[1]).canonical()
    modulus, residues = EXCEPTIONAL_CONDITIONS[group.params[0]]
    return ResidueCondition(modulus=modulus, residues=list(residues))


def sym_cat_polynomial_via_h(n: int, k: int) -> bool:
    """Cat_k(S_n,q) = h_n(1,q,...,q^{k-1})/[k]_q is a polynomial iff every
    Phi_e with ``1 < e | k`` divides the numerator."""
    from .symfunc import spec_h

    numerator = spec_h(n, k, q_mode=True)
    return all(cyclotomic_valuation(numerator, e) >= 1 for e in divisors(k) if e > 1)


def fuss_condition_from_scan(group: ReflectionGroupData, limit: int) -> List[int]:
    """Values ``k <= limit`` with Cat_k polynomial; used to confirm ``k ≡ 1 mod m``."""
    return [k for k in range(1, limit + 1) if cat_is_polynomial(group, k)]