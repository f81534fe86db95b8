"""
Specialisations of symmetric functions.

Schur functions are only ever needed at ``x_1 = ... = x_k = 1`` or at
``x_i = q^{i-1}``, so everything here works with those specialisations
directly: hook-content products, Jacobi-Trudi determinants as an oracle, the
gcd of all specialised Schur functions of a given degree, and the
Murnaghan-Nakayama rule for symmetric group characters.
"""

import threading
from fractions import Fraction
from math import comb, factorial, gcd, prod
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..utils.logging import get_logger
from ..utils.parallel import parallel_map
from .errors import DomainError, InexactDivisionError, InvariantError
from .exact import Polynomial, poly_gcd_many, q_binomial, q_int_poly
from .models import GcdRecord, UnimodalityResult
from .partitions import Partition, enumerate_partitions, hooks_and_contents

SpecValue = Union[int, Polynomial]


def _require_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"Number of variables must be positive, got {k}")


def spec_h(r: int, k: int, q_mode: bool = False) -> SpecValue:
    """``h_r(1, q, ..., q^{k-1})`` (q-mode) or ``h_r(1^k)``."""
    _require_k(k)
    if r < 0:
        raise DomainError(f"h_r needs r >= 0, got {r}")
    if q_mode:
        return q_binomial(k + r - 1, r)
    return comb(k + r - 1, r)


def spec_e(partition: Partition, k: int) -> int:
    """``e_lambda(1^k) = prod binom(k, lambda_i)``."""
    return prod(comb(k, part) for part in partition)


def spec_h_list(partition: Partition, k: int) -> int:
    """``h_lambda(1^k) = prod binom(k + lambda_i - 1, lambda_i)``."""
    return prod(comb(k + part - 1, part) for part in partition)


def spec_m(partition: Partition, k: int) -> int:
    """``m_lambda(1^k)``: the number of monomials of shape lambda in k variables.

    ``k = 0`` is allowed: ``m_()(1^0) = 1`` and every other value is 0.
    """
    if k < 0:
        raise DomainError(f"Number of variables must be nonnegative, got {k}")
    length = partition.length
    if length > k:
        return 0
    mults = partition.multiplicities().values()
    zero_parts = k - length
    return factorial(k) // (factorial(zero_parts) * prod(factorial(m) for m in mults))


def content_product(partition: Partition, z: Fraction) -> Fraction:
    """``prod_{x in lambda} (z + c(x)) / h(x)``."""
    cells = hooks_and_contents(partition)
    value = Fraction(1)
    for hook, content in zip(cells.hooks, cells.contents):
        value *= (z + content) / hook
    return value


def spec_schur_ones(partition: Partition, k: int) -> Fraction:
    """``s_lambda(1^k)`` by the hook-content formula."""
    _require_k(k)
    value = content_product(partition, Fraction(k))
    if k >= partition.length and (value.denominator != 1 or value < 0):
        raise InvariantError(f"s_{partition}(1^{k}) = {value} is not a natural number")
    return value


def spec_schur_q(partition: Partition, k: int, base_exp: int = 1) -> Polynomial:
    """Principal specialisation ``s_lambda(1, q^M, ..., q^{(k-1)M})``.

    Computed as ``q^{n(lambda)} prod [k + c(x)]_q / [h(x)]_q`` in base q^M.
    """
    _require_k(k)
    if partition.length > k:
        return Polynomial.zero()
    cells = hooks_and_contents(partition)
    numerator = Polynomial.monomial(cells.n_statistic)
    for content in cells.contents:
        numerator = numerator * q_int_poly(k + content)
    denominator = prod((q_int_poly(h) for h in cells.hooks), start=Polynomial.one())
    value = numerator.exact_div(denominator)
    return value.substitute_power(base_exp) if base_exp != 1 else value


def jacobi_trudi_oracle(partition: Partition, k: int) -> Polynomial:
    """``det(h_{lambda_i - i + j}(1, q, ..., q^{k-1}))`` by fraction-free elimination."""
    _require_k(k)
    size = partition.length
    if size == 0:
        return Polynomial.one()

    def entry(i: int, j: int) -> Polynomial:
        index = partition[i] - i + j
        if index < 0:
            return Polynomial.zero()
        return spec_h(index, k, q_mode=True)

    matrix = [[entry(i, j) for j in range(size)] for i in range(size)]
    return _bareiss_determinant(matrix)


def _bareiss_determinant(matrix: List[List[Polynomial]]) -> Polynomial:
    size = len(matrix)
    sign = 1
    previous = Polynomial.one()
    for col in range(size - 1):
        if matrix[col][col].is_zero:
            swap = next((r for r in range(col + 1, size) if not matrix[r][col].is_zero), None)
            if swap is None:
                return Polynomial.zero()
            matrix[col], matrix[swap] = matrix[swap], matrix[col]
            sign = -sign
        pivot = matrix[col][col]
        for i in range(col + 1, size):
            for j in range(col + 1, size):
                matrix[i][j] = (matrix[i][j] * pivot - matrix[i][col] * matrix[col][j]).exact_div(
                    previous
                )
        previous = pivot
    result = matrix[size - 1][size - 1]
    return -result if sign < 0 else result


# gcd theorems


def gcd_int_schur(n: int, k: int) -> int:
    """gcd over Z of ``s_lambda(1^k)`` for all lambda of n."""
    _require_k(k)
    if n < 1:
        raise DomainError(f"Degree must be positive, got {n}")
    result = 0
    for partition in enumerate_partitions(n):
        result = gcd(result, int(spec_schur_ones(partition, k)))
    return result


def gcd_poly_schur(n: int, k: int) -> Polynomial:
    """Monic gcd over Q[q] of ``s_lambda(1, ..., q^{k-1})`` for all lambda of n."""
    _require_k(k)
    if n < 1:
        raise DomainError(f"Degree must be positive, got {n}")
    return poly_gcd_many(spec_schur_q(partition, k) for partition in enumerate_partitions(n))


def predicted_gcd_poly(n: int, k: int) -> Polynomial:
    """``[k]_q / [gcd(n,k)]_q``."""
    return q_int_poly(k).exact_div(q_int_poly(gcd(n, k)))


def gcd_record(n: int, k: int) -> GcdRecord:
    return GcdRecord(
        n=n,
        k=k,
        gcd_int=gcd_int_schur(n, k),
        gcd_poly=gcd_poly_schur(n, k),
        predicted_int=k // gcd(n, k),
        predicted_poly=predicted_gcd_poly(n, k),
    )


def gcd_grid(max_n: int, max_k: int, threads: Optional[int] = None) -> List[GcdRecord]:
    """gcd records for every ``1 <= n <= max_n``, ``1 <= k <= max_k``."""
    pairs = [(n, k) for n in range(1, max_n + 1) for k in range(1, max_k + 1)]
    return parallel_map(lambda pair: gcd_record(*pair), pairs, threads)


def schur_quotient(partition: Partition, k: int) -> Polynomial:
    """``s_lambda(1, ..., q^{k-1}) / ([k]_q / [d]_q)`` with ``d = gcd(|lambda|, k)``.

    The quotient has nonnegative integer coefficients.
    """
    _require_k(k)
    divisor = predicted_gcd_poly(partition.size, k)
    quotient = spec_schur_q(partition, k).exact_div(divisor)
    if not quotient.is_nonnegative_integral():
        raise InvariantError(f"Schur quotient for {partition}, k={k} is {quotient}")
    return quotient


def is_unimodal(values: Sequence[int]) -> bool:
    """Weakly increasing then weakly decreasing; short sequences are unimodal."""
    i = 0
    size = len(values)
    while i + 1 < size and values[i] <= values[i + 1]:
        i += 1
    while i + 1 < size and values[i] >= values[i + 1]:
        i += 1
    return i >= size - 1


def unimodality_check(partition: Partition, k: int) -> UnimodalityResult:
    """Unimodality of the even-indexed, odd-indexed and all coefficients of
    the Schur quotient."""
    if k < partition.length:
        raise DomainError(f"Need k >= l(lambda); got k={k}, lambda={partition}")
    coeffs = schur_quotient(partition, k).integer_coefficients()
    result = UnimodalityResult(
        partition=partition.to_text(),
        k=k,
        coefficients=coeffs,
        even_ok=is_unimodal(coeffs[0::2]),
        odd_ok=is_unimodal(coeffs[1::2]),
        whole_ok=is_unimodal(coeffs),
    )
    if not (result.even_ok and result.odd_ok):
        get_logger().warning(f"Parity unimodality fails for {partition}, k={k}: {coeffs}")
    return result


# Murnaghan-Nakayama

_MN_CACHE: Dict[Tuple[Tuple[int, ...], Tuple[int, ...]], int] = {}
_MN_LOCK = threading.Lock()


def _beta_to_parts(beta: List[int]) -> Tuple[int, ...]:
    length = len(beta)
    parts = [b - (length - 1 - i) for i, b in enumerate(sorted(beta, reverse=True))]
    return tuple(p for p in parts if p > 0)


def _mn(parts: Tuple[int, ...], cycle_type: Tuple[int, ...]) -> int:
    if not cycle_type:
        return 1 if not parts else 0
    key = (parts, cycle_type)
    cached = _MN_CACHE.get(key)
    if cached is not None:
        return cached
    strip, rest = cycle_type[0], cycle_type[1:]
    length = len(parts)
    beta = [part + (length - 1 - i) for i, part in enumerate(parts)]
    beads = set(beta)
    total = 0
    # removing a rim hook of size r slides one bead down r positions
    for b in beta:
        target = b - strip
        if target < 0 or target in beads:
            continue
        height = sum(1 for x in beta if target < x < b)
        moved = [target if x == b else x for x in beta]
        total += (-1) ** height * _mn(_beta_to_parts(moved), rest)
    with _MN_LOCK:
        _MN_CACHE.setdefault(key, total)
    return total


def mn_character(partition: Partition, cycle_type: Partition) -> int:
    """The irreducible character chi^lambda at cycle type mu."""
    if partition.size != cycle_type.size:
        raise DomainError(
            f"Character and class sizes differ: |{partition}| != |{cycle_type}|"
        )
    return _mn(partition.parts, cycle_type.parts)


def character_table(n: int) -> Dict[Tuple[Partition, Partition], int]:
    """All values chi^lambda_mu for partitions of n."""
    partitions = enumerate_partitions(n)
    return {(lam, mu): mn_character(lam, mu) for lam in partitions for mu in partitions}
