"""
Tests for exact arithmetic.

This module tests polynomials, q-integers, cyclotomic polynomials,
q-binomials and the Laurent-quotient criterion.
"""

from fractions import Fraction

import pytest
import sympy

from src.parkspace.core.errors import DomainError, InexactDivisionError
from src.parkspace.core.exact import (
    LaurentPolynomial,
    Polynomial,
    RationalFunction,
    UPolynomial,
    cyclotomic,
    cyclotomic_valuation,
    laurent_quotient_by_division,
    laurent_quotient_test,
    poly_gcd_monic,
    q_binomial,
    q_int,
)

Q = Polynomial.monomial(1)


class TestPolynomial:
    """Test dense polynomial arithmetic."""

    def test_difference_of_squares(self):
        assert (1 + Q) * (1 - Q) == Polynomial([1, 0, -1])

    def test_long_division(self):
        quotient, remainder = divmod(Polynomial([1, 1, 1]), Polynomial([1, 1]))
        assert quotient == Q
        assert remainder == Polynomial.one()

    def test_additive_identity(self):
        p = Polynomial([3, Fraction(1, 2), 7])
        assert p + 0 == p
        assert p + Polynomial.zero() == p

    def test_zero_has_no_coefficients(self):
        assert Polynomial([0, 0, 0]).coeffs == ()
        assert Polynomial.zero().degree == -1

    def test_exact_division_rejects_remainder(self):
        with pytest.raises(InexactDivisionError):
            Polynomial([1, 1, 1]).exact_div(Polynomial([1, 1]))

    def test_division_by_zero(self):
        with pytest.raises(DomainError):
            divmod(Q, Polynomial.zero())

    def test_evaluation_and_substitution(self):
        p = Polynomial([1, 2, 3])
        assert p(2) == 17
        assert p.substitute_power(2) == Polynomial([1, 0, 2, 0, 3])


class TestPolynomialGcd:
    """Test the monic Euclidean gcd."""

    def test_gcd_with_common_square(self):
        a = (Q * Q + 1) * (Q + 1) ** 2
        b = (Q + 1) ** 3
        assert poly_gcd_monic(a, b) == (Q + 1) ** 2

    def test_gcd_with_zero_is_monic(self):
        assert poly_gcd_monic(Polynomial([2, 4]), Polynomial.zero()) == Polynomial([Fraction(1, 2), 1])

    def test_coprime(self):
        assert poly_gcd_monic(1 + Q, 1 - Q) == Polynomial.one()

    def test_gcd_zero_zero(self):
        with pytest.raises(DomainError):
            poly_gcd_monic(Polynomial.zero(), Polynomial.zero())


class TestQIntegers:
    """Test q-integers and cyclotomic polynomials."""

    def test_q_int(self):
        assert q_int(3) == LaurentPolynomial(0, [1, 1, 1])
        assert q_int(0).is_zero
        assert q_int(-2) == LaurentPolynomial(-2, [-1, -1])

    @pytest.mark.parametrize(
        "d, coeffs",
        [(1, [-1, 1]), (4, [1, 0, 1]), (6, [1, -1, 1])],
    )
    def test_cyclotomic(self, d, coeffs):
        assert cyclotomic(d) == Polynomial(coeffs)

    @pytest.mark.parametrize("d", range(1, 31))
    def test_cyclotomic_matches_sympy(self, d):
        x = sympy.Symbol("x")
        coeffs = sympy.Poly(sympy.cyclotomic_poly(d, x), x).all_coeffs()
        assert cyclotomic(d) == Polynomial([int(c) for c in reversed(coeffs)])

    def test_cyclotomic_rejects_zero(self):
        with pytest.raises(DomainError):
            cyclotomic(0)

    def test_q_binomial(self):
        assert q_binomial(2, 1) == Polynomial([1, 1])
        assert q_binomial(4, 2) == Polynomial([1, 1, 2, 1, 1])
        assert q_binomial(5, 0, base_exp=3) == Polynomial.one()

    def test_q_binomial_base(self):
        assert q_binomial(2, 1, base_exp=2) == Polynomial([1, 0, 1])

    def test_cyclotomic_valuation(self):
        assert cyclotomic_valuation((1 + Q) ** 3, 2) == 3
        assert cyclotomic_valuation(Polynomial([1, 1, 1]), 3) == 1
        assert cyclotomic_valuation(Polynomial([1, 0, 1]), 3) == 0


class TestLaurentQuotient:
    """Test the divisor-counting criterion against explicit division."""

    def test_trivial_quotient(self):
        ok, _ = laurent_quotient_test([2], [2])
        assert ok

    def test_failing_divisor_witness(self):
        ok, witness = laurent_quotient_test([3], [2])
        assert not ok
        assert witness.kind == "failing-divisor"
        assert witness.divisor == 2
        assert witness.table == [(2, 0, 1)]

    def test_zero_factor(self):
        ok, witness = laurent_quotient_test([0, 5], [2, 3])
        assert ok
        assert witness.kind == "zero-factor"

    def test_negative_denominator_rejected(self):
        with pytest.raises(DomainError):
            laurent_quotient_test([1], [0])

    @pytest.mark.parametrize(
        "a, b",
        [([4, 6], [2, 3]), ([5, 7], [2, 6]), ([-3, 8], [2, 4]), ([6, 10, 14], [2, 6, 10])],
    )
    def test_agrees_with_division(self, a, b):
        ok, _ = laurent_quotient_test(a, b)
        assert ok == laurent_quotient_by_division(a, b)


class TestRationalFunction:
    """Test reduced rational functions and u-polynomials."""

    def test_reduction(self):
        f = RationalFunction(Polynomial([1, 0, -1]), Polynomial([1, -1]))
        assert f.is_polynomial()
        assert f == 1 + Q

    def test_laurent(self):
        f = RationalFunction.q_power(-2) * (1 + Q)
        assert f.is_laurent_polynomial()
        assert f.to_laurent() == LaurentPolynomial(-2, [1, 1])

    def test_zero_denominator(self):
        with pytest.raises(DomainError):
            RationalFunction(Q, Polynomial.zero())

    def test_u_substitution(self):
        # (1 - u) at u = q^2
        h = UPolynomial([1, -1])
        assert h.at_q_power(2) == RationalFunction(Polynomial([1, 0, -1]))

    def test_scale_u(self):
        h = UPolynomial([0, 1])
        assert h.scale_u(Q) == UPolynomial([0, Q])
