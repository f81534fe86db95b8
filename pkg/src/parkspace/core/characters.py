"""
Values and decompositions of the parking space characters.

For a group W acting on V, ``phi_k(w) = k^{dim V^w}``, its graded version is
``det_V(1 - q^k w) / det_V(1 - q w)`` and the two-variable version replaces
``q^k`` by an indeterminate u. This module decomposes these class functions
for the symmetric groups, for G(m,1,n) (cyclic groups being the case n = 1)
and, by restriction along shift orbits, for G(m,p,n).
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Any, Iterator, List, NamedTuple, Optional, Tuple, Union

from ..utils.logging import get_logger
from ..utils.parallel import parallel_map
from .errors import DomainError, InvariantError
from .exact import Polynomial, RationalFunction, UPolynomial, q_int_poly
from .models import Basis, Decomposition, DecompositionEntry
from .partitions import (
    MultiPartition,
    Partition,
    class_size,
    enumerate_multipartitions,
    enumerate_partitions,
    z_lambda,
)
from .symfunc import content_product, mn_character, spec_m, spec_schur_ones, spec_schur_q

Coefficient = Union[Fraction, Polynomial, RationalFunction, UPolynomial]


def _require_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")


def _is_natural(value: Fraction) -> bool:
    return value.denominator == 1 and value >= 0


def _is_valid(coeff: Coefficient) -> bool:
    if isinstance(coeff, Fraction):
        return _is_natural(coeff)
    if isinstance(coeff, Polynomial):
        return coeff.is_nonnegative_integral()
    if isinstance(coeff, RationalFunction):
        return coeff.is_nonnegative_integral_polynomial()
    # u-polynomials are generic multiplicities, never a representation on their own
    return False


def _entry(key: Any, label: str, coeff: Coefficient) -> DecompositionEntry:
    return DecompositionEntry(key=key, label=label, coeff=coeff, valid=_is_valid(coeff))


def _u_polynomial(poly: Polynomial) -> UPolynomial:
    """Reinterpret a polynomial with rational coefficients as a polynomial in u."""
    return UPolynomial(list(poly.coeffs))


# Symmetric groups


def phi_value_sym(mu: Partition, k: int, graded: bool = False) -> Union[int, RationalFunction]:
    """phi_k (or its graded version) of S_n at cycle type mu.

    The reflection representation has dimension n-1, so the ungraded value is
    ``k^{l(mu)-1}`` and the graded value is ``prod [k]_{q^{mu_i}} / [k]_q``.
    """
    _require_k(k)
    if not graded:
        return k ** (mu.length - 1)
    numerator = prod((Polynomial.one_minus_q_power(k * part) for part in mu), start=Polynomial.one())
    denominator = prod((Polynomial.one_minus_q_power(part) for part in mu), start=Polynomial.one())
    return RationalFunction(
        numerator * Polynomial.one_minus_q_power(1),
        denominator * Polynomial.one_minus_q_power(k),
    )


def phi_hat_sym(mu: Partition) -> UPolynomial:
    """``det_V(1 - u w) / det_V(1 - q w)`` at cycle type mu."""
    if mu.size < 1:
        raise DomainError("The two-variable character needs a nonempty cycle type")
    u_part = q_int_poly(mu[0])
    for part in mu.parts[1:]:
        u_part = u_part * Polynomial.one_minus_q_power(part)
    q_part = RationalFunction(
        Polynomial.one_minus_q_power(1),
        prod((Polynomial.one_minus_q_power(part) for part in mu), start=Polynomial.one()),
    )
    return _u_polynomial(u_part) * q_part


def sym_irr_decomposition(n: int, k: int, graded: bool = False) -> Decomposition:
    """phi_k of S_n in the basis of irreducible characters.

    The coefficient of chi^lambda is ``s_lambda(1, q, ..., q^{k-1}) / [k]_q``
    (graded) or ``s_lambda(1^k) / k``.
    """
    _require_k(k)
    if n < 1:
        raise DomainError(f"S_n needs n >= 1, got {n}")
    entries = []
    for partition in enumerate_partitions(n):
        if graded:
            coeff: Coefficient = RationalFunction(spec_schur_q(partition, k), q_int_poly(k))
        else:
            coeff = spec_schur_ones(partition, k) / k
        entries.append(_entry(partition, partition.to_text(), coeff))
    return Decomposition(group=f"S{n}", k=k, graded=graded, basis=Basis.IRREDUCIBLE, entries=entries)


def sym_inner_product(partition: Partition, k: int, graded: bool = False) -> Union[Fraction, RationalFunction]:
    """``<phi_k, chi^lambda>`` as a class sum weighted by class sizes."""
    n = partition.size
    total: Union[Fraction, RationalFunction] = Fraction(0)
    for mu in enumerate_partitions(n):
        chi = mn_character(partition, mu)
        if chi == 0:
            continue
        total = total + phi_value_sym(mu, k, graded) * Fraction(class_size(mu) * chi)
    return total * Fraction(1, factorial(n))


def sym_perm_decomposition(n: int, k: int) -> Decomposition:
    """phi_k of S_n in the basis of Young permutation characters eta_lambda.

    The coefficient of eta_lambda is ``m_lambda(1^k) / k``.
    """
    _require_k(k)
    entries = [
        _entry(partition, partition.to_text(), Fraction(spec_m(partition, k), k))
        for partition in enumerate_partitions(n)
    ]
    return Decomposition(group=f"S{n}", k=k, basis=Basis.PERMUTATION, entries=entries)


def sym_perm_character(blocks: Partition, mu: Partition) -> int:
    """eta_lambda(mu): cosets of the Young subgroup S_lambda fixed by a permutation of type mu."""
    if blocks.size != mu.size:
        raise DomainError(f"Sizes differ: |{blocks}| != |{mu}|")
    return g_m1n_perm_character(0, blocks, MultiPartition([mu]))


def sym_reconstruct(decomposition: Decomposition, mu: Partition) -> Any:
    """Evaluate a decomposition of an S_n class function at cycle type mu."""
    total: Any = Fraction(0)
    for entry in decomposition.entries:
        if decomposition.basis == Basis.PERMUTATION:
            value = sym_perm_character(entry.key, mu)
        else:
            value = mn_character(entry.key, mu)
        if value:
            total = total + entry.coeff * Fraction(value)
    return total


# G(m,1,n): conjugacy classes


def g_m1n_order(m: int, n: int) -> int:
    return m ** n * factorial(n)


def g_m1n_z(mu: MultiPartition) -> int:
    """Centralizer order ``prod_i z_{mu^(i)} m^{l(mu^(i))}``."""
    return prod(z_lambda(component) * mu.m ** component.length for component in mu)


def g_m1n_class_size(mu: MultiPartition) -> int:
    return g_m1n_order(mu.m, mu.size) // g_m1n_z(mu)


def phi_value_g_m1n(mu: MultiPartition, k: int) -> int:
    """Only cycles with trivial colour product have a fixed vector."""
    _require_k(k)
    return k ** mu[0].length


def _split_cycles(
    remaining: Counter, blocks: List[int]
) -> Iterator[Tuple[Partition, Tuple[Partition, ...]]]:
    """Ways to distribute the cycle lengths in ``remaining`` over blocks of
    the given sizes; whatever is left over is yielded first."""
    if not blocks:
        yield Partition(remaining.elements()), ()
        return
    for rho in enumerate_partitions(blocks[0]):
        need = Counter(rho.parts)
        if all(remaining[part] >= count for part, count in need.items()):
            for rest, rhos in _split_cycles(remaining - need, blocks[1:]):
                yield rest, (rho,) + rhos


def g_m1n_perm_character(r: int, blocks: Partition, mu: MultiPartition) -> int:
    """eta^{r,lambda}(mu) for the parabolic subgroup ``G(m,1,r) x S_lambda``.

    Uses ``Ind_H^G 1 (w) = |C_G(w)| * |class(w) ∩ H| / |H|``. An element of H
    has the coloured cycles of its G(m,1,r) part, while the uncoloured cycles
    are shared out between that part and the blocks of S_lambda.
    """
    m, n = mu.m, mu.size
    if r < 0 or r + blocks.size != n:
        raise DomainError(f"Need r + |lambda| = n; got r={r}, lambda={blocks}, n={n}")
    coloured = sum(component.size for component in mu.components[1:])
    if coloured > r:
        return 0
    count = 0
    for rest, rhos in _split_cycles(Counter(mu[0].parts), list(blocks)):
        nu = MultiPartition((rest,) + mu.components[1:])
        count += g_m1n_class_size(nu) * prod(class_size(rho) for rho in rhos)
    subgroup_order = m ** r * factorial(r) * prod(factorial(b) for b in blocks)
    value = Fraction(g_m1n_z(mu) * count, subgroup_order)
    if value.denominator != 1:
        raise InvariantError(f"eta^({r},{blocks}) at {mu} is {value}")
    return int(value)


# G(m,1,n): multiplicities


def _require_m(m: int) -> None:
    if m < 2:
        raise DomainError(f"G(m,1,n) needs m >= 2, got {m}")


def _power_sum_image(length: int, r: int, m: int) -> UPolynomial:
    """Image of ``p_l(x^(r))`` under the specialisation giving multiplicities in phi-hat."""
    coeffs: List[Any] = [0] * (length + 1)
    denominator = Polynomial.one_minus_q_power(m * length)
    if r == 0:
        coeffs[0] = RationalFunction(Polynomial.one(), denominator)
        coeffs[length] = RationalFunction(Polynomial.monomial((m - 1) * length, -1), denominator)
    else:
        coeffs[0] = RationalFunction(Polynomial.monomial(r * length), denominator)
        coeffs[length] = RationalFunction(Polynomial.monomial((r - 1) * length, -1), denominator)
    return UPolynomial(coeffs)


@lru_cache(maxsize=None)
def _schur_image(partition: Partition, r: int, m: int) -> UPolynomial:
    """Image of ``s_lambda(x^(r))``, expanded through ``s_lambda = sum chi^lambda_mu p_mu / z_mu``."""
    if partition.size == 0:
        return UPolynomial.constant(1)
    total = UPolynomial()
    for mu in enumerate_partitions(partition.size):
        chi = mn_character(partition, mu)
        if chi == 0:
            continue
        term = UPolynomial.constant(Fraction(chi, z_lambda(mu)))
        for part in mu:
            term = term * _power_sum_image(part, r, m)
        total = total + term
    return total


def g_m1n_hat_multiplicity(
    multipartition: MultiPartition, substitute_k: Optional[int] = None
) -> Union[UPolynomial, RationalFunction]:
    """Multiplicity of chi^lambda in the two-variable character of G(m,1,n).

    With ``substitute_k`` the value at ``u = q^k`` is returned.
    """
    m = multipartition.m
    _require_m(m)
    value = UPolynomial.constant(1)
    for r, component in enumerate(multipartition):
        value = value * _schur_image(component, r, m)
    if substitute_k is None:
        return value
    _require_k(substitute_k)
    return value.at_q_power(substitute_k)


def g_m1n_mult_ungraded(multipartition: MultiPartition, k: int) -> Fraction:
    """Hook-content product for the multiplicity of chi^lambda in phi_k."""
    m = multipartition.m
    _require_m(m)
    _require_k(k)
    value = content_product(multipartition[0], Fraction(m + k - 1, m))
    for component in multipartition.components[1:]:
        value *= content_product(component, Fraction(k - 1, m))
    return value


def _fuss_factor(partition: Partition, variables: int, base_exp: int) -> Polynomial:
    if partition.size == 0:
        return Polynomial.one()
    if variables == 0:
        return Polynomial.zero()
    return spec_schur_q(partition, variables, base_exp=base_exp)


def g_m1n_mult_graded_fuss(multipartition: MultiPartition, k: int) -> Polynomial:
    """Graded multiplicity of chi^lambda for ``k = pm + 1``.

    ``s_{lambda^(0)}(1, q^m, ..., q^{pm})`` times, for r >= 1,
    ``s_{lambda^(r)}(q^r, q^{r+m}, ..., q^{r+(p-1)m})``.
    """
    m = multipartition.m
    _require_m(m)
    _require_k(k)
    if (k - 1) % m:
        raise DomainError(f"k must be 1 mod {m}, got {k}")
    p = (k - 1) // m
    value = _fuss_factor(multipartition[0], p + 1, m)
    for r, component in enumerate(multipartition.components[1:], start=1):
        if value.is_zero:
            break
        factor = _fuss_factor(component, p, m)
        value = value * factor * Polynomial.monomial(r * component.size)
    if not value.is_nonnegative_integral():
        raise InvariantError(f"Graded multiplicity of {multipartition} at k={k} is {value}")
    return value


def g_m1n_trivial_label(m: int, n: int) -> MultiPartition:
    return MultiPartition.trivial(m, n)


def g_m1n_det_label(m: int, n: int) -> MultiPartition:
    """Label of the determinant of the reflection representation: ``(-, 1^n, -, ...)``."""
    return MultiPartition([Partition()] + [Partition([1] * n)] + [Partition()] * (m - 2))


def g_m1n_decomposition(
    m: int, n: int, k: int, graded: bool = False, threads: Optional[int] = None
) -> Decomposition:
    """phi_k of G(m,1,n) in the basis of irreducible characters.

    Graded multiplicities come from the Fuss formula when ``k ≡ 1 mod m``
    and from the two-variable multiplicity at ``u = q^k`` otherwise.
    """
    _require_m(m)
    _require_k(k)
    labels = enumerate_multipartitions(n, m)

    def coefficient(label: MultiPartition) -> Coefficient:
        if not graded:
            return g_m1n_mult_ungraded(label, k)
        if (k - 1) % m == 0:
            return g_m1n_mult_graded_fuss(label, k)
        return g_m1n_hat_multiplicity(label, k)

    coeffs = parallel_map(coefficient, labels, threads)
    get_logger().debug(f"G({m},1,{n}) k={k}: {len(labels)} multiplicities")
    return Decomposition(
        group=f"G({m},1,{n})",
        k=k,
        graded=graded,
        basis=Basis.IRREDUCIBLE,
        entries=[_entry(label, label.to_text(), c) for label, c in zip(labels, coeffs)],
    )


def cyclic_decomposition(m: int, k: int, graded: bool = False) -> Decomposition:
    """phi_k of the cyclic group of order m, which is G(m,1,1).

    ``chi_r`` is the character sending the generator to ``zeta^r``.
    """
    decomposition = g_m1n_decomposition(m, 1, k, graded, threads=1)
    entries = []
    for entry in decomposition.entries:
        r = next(i for i, component in enumerate(entry.key) if component.size)
        entries.append(entry.model_copy(update={"label": f"chi_{r}"}))
    return decomposition.model_copy(update={"group": f"C{m}", "entries": entries})


def g_m1n_dimension_check(m: int, n: int, k: int) -> bool:
    """At the identity the multiplicities must rebuild ``phi_k(1) = k^n``."""
    total = sum(
        (g_m1n_mult_ungraded(label, k) * label.dimension() for label in enumerate_multipartitions(n, m)),
        start=Fraction(0),
    )
    return total == k ** n


def g_m1n_perm_decomposition(m: int, n: int, k: int) -> Decomposition:
    """phi_k of G(m,1,n) for ``k = pm + 1`` as a sum of ``m_lambda(1^p) eta^{r,lambda}``."""
    _require_m(m)
    _require_k(k)
    if (k - 1) % m:
        raise DomainError(f"k must be 1 mod {m}, got {k}")
    p = (k - 1) // m
    entries = []
    for r in range(n, -1, -1):
        for blocks in enumerate_partitions(n - r):
            coeff = Fraction(spec_m(blocks, p))
            entries.append(_entry((r, blocks), f"{r}|{blocks.to_text() or '-'}", coeff))
    return Decomposition(group=f"G({m},1,{n})", k=k, basis=Basis.PERMUTATION, entries=entries)


def g_m1n_perm_reconstruct(decomposition: Decomposition, mu: MultiPartition) -> Fraction:
    total = Fraction(0)
    for entry in decomposition.nonzero():
        r, blocks = entry.key
        total += entry.coeff * g_m1n_perm_character(r, blocks, mu)
    return total


# G(m,p,n): restriction along shift orbits


class ShiftOrbit:
    """Orbit of an m-tuple of partitions under the subgroup generated by ``sh^{m/p}``.

    The restriction of chi^lambda from G(m,1,n) to G(m,p,n) depends only on
    the orbit, and splits into ``stabilizer_order`` distinct irreducibles.
    """

    __slots__ = ("members", "p")

    def __init__(self, multipartition: MultiPartition, p: int):
        m = multipartition.m
        if p < 1 or m % p:
            raise DomainError(f"p must divide m; got m={m}, p={p}")
        step = m // p
        self.members: Tuple[MultiPartition, ...] = tuple(
            sorted({multipartition.shift(step * j) for j in range(p)})
        )
        self.p = p

    @property
    def representative(self) -> MultiPartition:
        return self.members[0]

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def stabilizer_order(self) -> int:
        return self.p // self.size

    def __contains__(self, multipartition: MultiPartition) -> bool:
        return multipartition in self.members

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShiftOrbit):
            return NotImplemented
        return self.p == other.p and self.members == other.members

    def __hash__(self) -> int:
        return hash(("ShiftOrbit", self.p, self.members))

    def __repr__(self) -> str:
        return f"ShiftOrbit({self.to_text()!r}, p={self.p})"

    def to_text(self) -> str:
        return "{" + " | ".join(member.to_text() for member in self.members) + "}"


def shift_orbits(m: int, p: int, n: int) -> List[ShiftOrbit]:
    """All shift orbits of m-tuples of total size n, in enumeration order."""
    seen = set()
    orbits = []
    for label in enumerate_multipartitions(n, m):
        if label in seen:
            continue
        orbit = ShiftOrbit(label, p)
        seen.update(orbit.members)
        orbits.append(orbit)
    return orbits


def gmpn_restricted_multiplicity(orbit: ShiftOrbit, k: int, graded: bool = False) -> Coefficient:
    """Multiplicity in phi_k of G(m,p,n) of any constituent of the orbit's restriction."""
    if graded:
        total: Coefficient = RationalFunction.zero()
        for member in orbit.members:
            total = total + g_m1n_hat_multiplicity(member, k)
        return total
    return sum((g_m1n_mult_ungraded(member, k) for member in orbit.members), start=Fraction(0))


def gmpn_decomposition(
    m: int, p: int, n: int, k: int, graded: bool = False, threads: Optional[int] = None
) -> Decomposition:
    """phi_k of G(m,p,n); one entry per shift orbit, standing for each of its constituents."""
    _require_k(k)
    orbits = shift_orbits(m, p, n)
    coeffs = parallel_map(lambda orbit: gmpn_restricted_multiplicity(orbit, k, graded), orbits, threads)
    entries = []
    for orbit, coeff in zip(orbits, coeffs):
        label = orbit.to_text()
        if orbit.stabilizer_order > 1:
            label += f" x{orbit.stabilizer_order}"
        entries.append(_entry(orbit, label, coeff))
    return Decomposition(
        group=f"G({m},{p},{n})", k=k, graded=graded, basis=Basis.IRREDUCIBLE, entries=entries
    )


def gmpn_chi_eta_multiplicities(m: int, p: int, k: int) -> Tuple[Fraction, Fraction]:
    """Multiplicities in phi_k of G(m,p,2), ``p < m``, of the constituents
    labelled by the orbits of ``((2), -, ...)`` and ``(-, (2), -, ...)``."""
    if p >= m or m % p:
        raise DomainError(f"Need p a proper divisor of m; got m={m}, p={p}")
    empty = [Partition()] * (m - 2)
    chi = ShiftOrbit(MultiPartition([Partition([2]), Partition()] + empty), p)
    eta = ShiftOrbit(MultiPartition([Partition(), Partition([2])] + empty), p)
    if chi == eta:
        raise InvariantError(f"Orbits of chi and eta coincide for m={m}, p={p}")
    return gmpn_restricted_multiplicity(chi, k), gmpn_restricted_multiplicity(eta, k)


def g_mmn_triv_det_multiplicities(m: int, n: int, k: int) -> Tuple[Fraction, Fraction]:
    """Closed forms for the multiplicities of triv and det in phi_k of G(m,m,n)."""
    if m < 2 or n < 2:
        raise DomainError(f"G(m,m,n) needs m, n >= 2; got m={m}, n={n}")
    _require_k(k)
    scale = Fraction(1, m ** (n - 1) * factorial(n))
    triv = scale * prod((k + i * m - 1 for i in range(1, n)), start=1) * (k + n - 1)
    det = scale * prod((k - i * m + m - 1 for i in range(1, n)), start=1) * (
        k - (n - 1) * m + (n - 1)
    )
    return triv, det


class ProofPolynomials(NamedTuple):
    """f and g give the triv and det multiplicities at ``z = (k-1)/m``; h
    combines them into a monic integer polynomial."""
    f: Polynomial
    g: Polynomial
    h: Polynomial


def g_mmn_proof_polynomials(m: int, n: int) -> ProofPolynomials:
    if n < 2:
        raise DomainError(f"Need n >= 2, got {n}")
    z = Polynomial.monomial(1)
    scale = Fraction(1, factorial(n))
    f = prod((z + i for i in range(1, n)), start=Polynomial.one()) * (z.scale(m) + n)
    g = prod((z - (i - 1) for i in range(1, n)), start=Polynomial.one()) * (
        z.scale(m) + (n - m * (n - 1))
    )
    f, g = f.scale(scale), g.scale(scale)
    h = (f + g).scale(Fraction(factorial(n), 2)) - (z * (f - g)).scale(factorial(n - 2))
    if h.degree != n - 1 or h.leading_coefficient != 1 or not h.is_integral():
        raise InvariantError(f"h for m={m}, n={n} is not monic integral of degree {n - 1}: {h}")
    return ProofPolynomials(f, g, h)
