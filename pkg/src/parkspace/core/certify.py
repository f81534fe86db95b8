"""
Sufficient certificates for integrality and positivity.

- ``binomial_basis``: a polynomial with nonnegative integer coordinates in
  the basis ``binom(t, i)`` maps N to N.
- ``q_binomial_basis``: a polynomial in u whose coordinates in the
  q-binomial basis of base ``q^M`` lie in N[q] takes values in N[q] at every
  ``u = q^{pM}``.
- ``period_enumerate``: once ``f(t + L) - f(t)`` is certified, the residues of
  k modulo L with ``f(k)`` in N are read off one period.
"""

from fractions import Fraction
from math import comb
from typing import List

from ..utils.logging import get_logger, log_certificate
from .errors import DomainError
from .exact import Polynomial, RationalFunction, UPolynomial, q_binomial
from .models import BinomialCertificate, PeriodScanResult, QBinomialCertificate, ResidueCondition


def binomial_basis(g: Polynomial) -> BinomialCertificate:
    """Coordinates ``b_i`` of g in the basis ``binom(t, i)``, ``i <= deg g``."""
    coefficients: List[Fraction] = []
    for i in range(max(g.degree, 0) + 1):
        value = g(i) - sum((b * comb(i, j) for j, b in enumerate(coefficients)), start=Fraction(0))
        coefficients.append(Fraction(value))
    verdict = all(b.denominator == 1 and b >= 0 for b in coefficients)
    log_certificate("binomial", verdict)
    return BinomialCertificate(coefficients=coefficients, all_nonneg_integers=verdict)


def binomial_reconstruct(certificate: BinomialCertificate, t: int) -> Fraction:
    return sum((b * comb(t, i) for i, b in enumerate(certificate.coefficients)), start=Fraction(0))


def q_binomial_basis(h: UPolynomial, base_exp: int) -> QBinomialCertificate:
    """Coordinates of h in the basis ``prod_{l<=i} (1 - u q^{(1-l)M}) / (1 - q^{lM})``.

    At ``u = q^{pM}`` the i-th basis element is the q-binomial
    ``[p choose i]`` in base ``q^M``, so ``c_i = h(q^{iM}) - sum_{j<i} [i choose j] c_j``.
    """
    if base_exp < 1:
        raise DomainError(f"Base exponent must be positive, got {base_exp}")
    coefficients: List[RationalFunction] = []
    for i in range(max(h.degree, 0) + 1):
        value = h.at_q_power(i * base_exp)
        for j, c in enumerate(coefficients):
            value = value - c * q_binomial(i, j, base_exp)
        coefficients.append(value)
    verdict = all(c.is_nonnegative_integral_polynomial() for c in coefficients)
    log_certificate(f"q-binomial base q^{base_exp}", verdict)
    return QBinomialCertificate(base_exp=base_exp, coefficients=coefficients, all_in_Nq=verdict)


def q_binomial_reconstruct(certificate: QBinomialCertificate, p: int) -> RationalFunction:
    """Value of the expansion at ``u = q^{pM}``."""
    total = RationalFunction.zero()
    for i, c in enumerate(certificate.coefficients):
        if i <= p:
            total = total + c * q_binomial(p, i, certificate.base_exp)
    return total


def _translate(f: Polynomial, shift: int) -> Polynomial:
    """``f(t + shift)``."""
    return f(Polynomial([shift, 1]))


def period_enumerate(f: Polynomial, period: int, modulus: int) -> PeriodScanResult:
    """Residue condition for ``f(k)`` in N, provided the period is certified.

    ``period`` must be a multiple of ``modulus``. If the binomial certificate
    of ``f(t + period) - f(t)`` fails the result is indeterminate: the
    periodicity is unverified, not refuted.
    """
    if modulus < 1 or period < 1 or period % modulus:
        raise DomainError(f"Period {period} must be a positive multiple of {modulus}")
    difference = _translate(f, period) - f
    certificate = binomial_basis(difference)
    if not certificate.all_nonneg_integers:
        get_logger().info(f"Period {period} not certified; falling back is up to the caller")
        return PeriodScanResult(
            status="indeterminate", period=period, difference_certificate=certificate
        )

    def in_naturals(k: int) -> bool:
        value = Fraction(f(k))
        return value.denominator == 1 and value >= 0

    condition = ResidueCondition.from_predicate(period, in_naturals).canonical()
    if modulus % condition.modulus:
        get_logger().debug(
            f"Residue set has period {condition.modulus}, which does not divide {modulus}"
        )
    return PeriodScanResult(
        status="certified",
        condition=condition,
        period=period,
        difference_certificate=certificate,
    )
