"""
Exact univariate arithmetic over the rationals.

This module provides the objects every other formula lives in:
- ``Polynomial``: dense polynomials in q with ``Fraction`` coefficients
- ``LaurentPolynomial``: the same with a (possibly negative) lowest degree
- ``RationalFunction``: reduced quotients with a monic denominator
- ``UPolynomial``: polynomials in u with coefficients in Q(q)

plus the q-integers, cyclotomic polynomials, q-binomial coefficients and the
Laurent-quotient criterion for products of q-integers.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Literal, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field
from sympy import divisors

from .errors import DomainError, InexactDivisionError

Number = Union[int, Fraction]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _strip(coeffs: List[Fraction]) -> Tuple[Fraction, ...]:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _is_scalar(value: Any) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


class Polynomial:
    """Dense polynomial in q with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``q**i``. The zero polynomial has an
    empty coefficient tuple, so two equal polynomials always compare equal
    structurally.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Number] = ()):
        self.coeffs: Tuple[Fraction, ...] = _strip([Fraction(c) for c in coeffs])
        self._hash: Optional[int] = None

    @classmethod
    def _raw(cls, coeffs: List[Fraction]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.coeffs = _strip(coeffs)
        obj._hash = None
        return obj

    # Constructors

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls._raw([])

    @classmethod
    def one(cls) -> "Polynomial":
        return cls._raw([_ONE])

    @classmethod
    def constant(cls, value: Number) -> "Polynomial":
        return cls._raw([Fraction(value)])

    @classmethod
    def monomial(cls, degree: int, coeff: Number = 1) -> "Polynomial":
        if degree < 0:
            raise DomainError(f"Monomial degree must be nonnegative, got {degree}")
        return cls._raw([_ZERO] * degree + [Fraction(coeff)])

    @classmethod
    def one_minus_q_power(cls, a: int) -> "Polynomial":
        """Return ``1 - q**a`` for ``a >= 0``."""
        if a < 0:
            raise DomainError(f"Exponent must be nonnegative, got {a}")
        if a == 0:
            return cls.zero()
        coeffs = [_ZERO] * (a + 1)
        coeffs[0] = _ONE
        coeffs[a] = -_ONE
        return cls._raw(coeffs)

    # Basic properties

    @property
    def degree(self) -> int:
        """Degree of the polynomial; ``-1`` for zero."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_one(self) -> bool:
        return self.coeffs == (_ONE,)

    @property
    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            return _ZERO
        return self.coeffs[-1]

    def coefficient(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return _ZERO

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def is_nonnegative_integral(self) -> bool:
        """True iff the polynomial lies in N[q]."""
        return all(c.denominator == 1 and c >= 0 for c in self.coeffs)

    def is_symmetric(self) -> bool:
        return self.coeffs == tuple(reversed(self.coeffs))

    def integer_coefficients(self) -> List[int]:
        if not self.is_integral():
            raise DomainError(f"Polynomial {self} has non-integer coefficients")
        return [int(c) for c in self.coeffs]

    # Arithmetic

    @staticmethod
    def _coerce(other: Any) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            return other
        if _is_scalar(other):
            return Polynomial.constant(other)
        return None

    def __add__(self, other: Any) -> "Polynomial":
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        a, b = self.coeffs, other_poly.coeffs
        if len(a) < len(b):
            a, b = b, a
        result = list(a)
        for i, c in enumerate(b):
            result[i] += c
        return Polynomial._raw(result)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw([-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "Polynomial":
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        return self + (-other_poly)

    def __rsub__(self, other: Any) -> "Polynomial":
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        return other_poly - self

    def __mul__(self, other: Any) -> "Polynomial":
        if _is_scalar(other):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial.zero()
        result = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    result[i + j] += x * y
        return Polynomial._raw(result)

    __rmul__ = __mul__

    def scale(self, factor: Number) -> "Polynomial":
        factor = Fraction(factor)
        if factor == 0:
            return Polynomial.zero()
        return Polynomial._raw([c * factor for c in self.coeffs])

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise DomainError("Negative powers of a polynomial are not polynomials")
        result = Polynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def divmod(self, divisor: "Polynomial") -> Tuple["Polynomial", "Polynomial"]:
        """Long division: return ``(quotient, remainder)`` with
        ``deg(remainder) < deg(divisor)``."""
        divisor = self._coerce(divisor)
        if divisor is None or divisor.is_zero:
            raise DomainError("Division by the zero polynomial")
        remainder = list(self.coeffs)
        d = divisor.degree
        lead = divisor.coeffs[-1]
        if len(remainder) <= d:
            return Polynomial.zero(), self
        quotient = [_ZERO] * (len(remainder) - d)
        dcoeffs = divisor.coeffs
        for shift in range(len(remainder) - d - 1, -1, -1):
            c = remainder[shift + d]
            if c == 0:
                continue
            factor = c / lead
            quotient[shift] = factor
            for j, y in enumerate(dcoeffs):
                if y:
                    remainder[shift + j] -= factor * y
        return Polynomial._raw(quotient), Polynomial._raw(remainder[:d])

    def __divmod__(self, other: Any) -> Tuple["Polynomial", "Polynomial"]:
        return self.divmod(other)

    def __floordiv__(self, other: Any) -> "Polynomial":
        return self.divmod(other)[0]

    def __mod__(self, other: Any) -> "Polynomial":
        return self.divmod(other)[1]

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        quotient, remainder = self.divmod(divisor)
        if not remainder.is_zero:
            raise InexactDivisionError(
                f"{divisor} does not divide {self} (remainder {remainder})"
            )
        return quotient

    def divides(self, other: "Polynomial") -> bool:
        """True iff ``self`` divides ``other``."""
        return (other % self).is_zero

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading_coefficient)

    # Evaluation and substitution

    def __call__(self, x: Any) -> Any:
        result: Any = _ZERO
        for c in reversed(self.coeffs):
            result = result * x + c
        return result

    def substitute_power(self, exponent: int) -> "Polynomial":
        """Substitute ``q -> q**exponent`` (``exponent >= 1``)."""
        if exponent < 1:
            raise DomainError(f"Substitution exponent must be positive, got {exponent}")
        if exponent == 1 or self.degree <= 0:
            return self
        result = [_ZERO] * (self.degree * exponent + 1)
        for i, c in enumerate(self.coeffs):
            result[i * exponent] = c
        return Polynomial._raw(result)

    def shift(self, s: int) -> "Polynomial":
        """Multiply by ``q**s`` (``s >= 0``)."""
        if s < 0:
            raise DomainError("Use LaurentPolynomial for negative shifts")
        if self.is_zero or s == 0:
            return self
        return Polynomial._raw([_ZERO] * s + list(self.coeffs))

    # Comparison and display

    def __eq__(self, other: Any) -> bool:
        other_poly = self._coerce(other)
        if other_poly is None:
            return NotImplemented
        return self.coeffs == other_poly.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(("Polynomial", self.coeffs))
        return self._hash

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, var: str = "q") -> str:
        return _format_terms(enumerate(self.coeffs), var)


def _format_terms(terms: Iterable[Tuple[int, Fraction]], var: str) -> str:
    parts: List[str] = []
    for exp, c in terms:
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if exp == 0:
            body = str(mag)
        else:
            power = var if exp == 1 else f"{var}^{exp}"
            body = power if mag == 1 else f"{mag}*{power}"
        parts.append(f"{sign} {body}")
    if not parts:
        return "0"
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def poly_gcd_monic(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor via the Euclidean algorithm over Q."""
    if a.is_zero and b.is_zero:
        raise DomainError("gcd(0, 0) is undefined")
    a, b = a.monic(), b.monic()
    while not b.is_zero:
        a, b = b, (a % b).monic()
    return a.monic()


def poly_gcd_many(polys: Iterable[Polynomial]) -> Polynomial:
    """Fold :func:`poly_gcd_monic` left to right; zero entries are skipped."""
    result: Optional[Polynomial] = None
    for p in polys:
        if p.is_zero:
            continue
        result = p.monic() if result is None else poly_gcd_monic(result, p)
        if result.is_one:
            break
    if result is None:
        raise DomainError("gcd of an empty or all-zero family is undefined")
    return result


class LaurentPolynomial:
    """Laurent polynomial ``sum_i coeffs[i] * q**(min_deg + i)``."""

    __slots__ = ("min_deg", "coeffs")

    def __init__(self, min_deg: int, coeffs: Iterable[Number]):
        cs = [Fraction(c) for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        stripped = _strip(cs[start:])
        self.min_deg: int = min_deg + start if stripped else 0
        self.coeffs: Tuple[Fraction, ...] = stripped

    @classmethod
    def from_polynomial(cls, poly: Polynomial, shift: int = 0) -> "LaurentPolynomial":
        """Return ``q**shift * poly``."""
        return cls(shift, poly.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_deg(self) -> int:
        return self.min_deg + len(self.coeffs) - 1

    def is_polynomial(self) -> bool:
        return self.is_zero or self.min_deg >= 0

    def to_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise DomainError(f"{self} has negative powers of q")
        return Polynomial(self.coeffs).shift(self.min_deg) if self.coeffs else Polynomial.zero()

    def split(self) -> Tuple[Polynomial, int]:
        """Return ``(P, s)`` with ``self == q**s * P`` and ``P(0) != 0``."""
        return Polynomial(self.coeffs), self.min_deg

    def to_rational_function(self) -> "RationalFunction":
        poly, s = self.split()
        if s >= 0:
            return RationalFunction(poly.shift(s))
        return RationalFunction(poly, Polynomial.monomial(-s))

    @staticmethod
    def _coerce(other: Any) -> Optional["LaurentPolynomial"]:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, Polynomial):
            return LaurentPolynomial.from_polynomial(other)
        if _is_scalar(other):
            return LaurentPolynomial(0, [other])
        return None

    def __add__(self, other: Any) -> "LaurentPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        low = min(self.min_deg, o.min_deg)
        high = max(self.max_deg, o.max_deg)
        result = [_ZERO] * (high - low + 1)
        for i, c in enumerate(self.coeffs):
            result[self.min_deg - low + i] += c
        for i, c in enumerate(o.coeffs):
            result[o.min_deg - low + i] += c
        return LaurentPolynomial(low, result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPolynomial":
        return LaurentPolynomial(self.min_deg, [-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "LaurentPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other: Any) -> "LaurentPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        product = Polynomial(self.coeffs) * Polynomial(o.coeffs)
        return LaurentPolynomial(self.min_deg + o.min_deg, product.coeffs)

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.min_deg, self.coeffs) == (o.min_deg, o.coeffs)

    def __hash__(self) -> int:
        return hash(("LaurentPolynomial", self.min_deg, self.coeffs))

    def __repr__(self) -> str:
        return f"LaurentPolynomial({self.min_deg}, {[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return _format_terms(
            ((self.min_deg + i, c) for i, c in enumerate(self.coeffs)), "q"
        )


class RationalFunction:
    """Element of Q(q) kept as a reduced fraction with monic denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: Any, denominator: Any = None, reduce: bool = True):
        num = _as_polynomial(numerator)
        den = Polynomial.one() if denominator is None else _as_polynomial(denominator)
        if den.is_zero:
            raise DomainError("Rational function with zero denominator")
        if num.is_zero:
            num, den = Polynomial.zero(), Polynomial.one()
        elif reduce and den.degree > 0:
            g = poly_gcd_monic(num, den)
            if not g.is_one:
                num = num.exact_div(g)
                den = den.exact_div(g)
        lead = den.leading_coefficient
        if lead != 1:
            num = num.scale(1 / lead)
            den = den.scale(1 / lead)
        self.numerator: Polynomial = num
        self.denominator: Polynomial = den

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(Polynomial.zero())

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(Polynomial.one())

    @classmethod
    def q_power(cls, exponent: int) -> "RationalFunction":
        if exponent >= 0:
            return cls(Polynomial.monomial(exponent))
        return cls(Polynomial.one(), Polynomial.monomial(-exponent))

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def is_polynomial(self) -> bool:
        return self.denominator.is_one

    def is_laurent_polynomial(self) -> bool:
        """True iff the denominator is a power of q."""
        den = self.denominator.coeffs
        return all(c == 0 for c in den[:-1])

    def to_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise DomainError(f"{self} is not a polynomial")
        return self.numerator

    def to_laurent(self) -> LaurentPolynomial:
        if not self.is_laurent_polynomial():
            raise DomainError(f"{self} is not a Laurent polynomial")
        return LaurentPolynomial(-self.denominator.degree, self.numerator.coeffs)

    def is_nonnegative_integral_polynomial(self) -> bool:
        return self.is_polynomial() and self.numerator.is_nonnegative_integral()

    @staticmethod
    def _coerce(other: Any) -> Optional["RationalFunction"]:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, LaurentPolynomial):
            return other.to_rational_function()
        if isinstance(other, Polynomial) or _is_scalar(other):
            return RationalFunction(other, reduce=False)
        return None

    def __add__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero:
            return o
        if o.is_zero:
            return self
        if self.denominator == o.denominator:
            return RationalFunction(self.numerator + o.numerator, self.denominator)
        return RationalFunction(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.numerator, self.denominator, reduce=False)

    def __sub__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> "RationalFunction":
        if _is_scalar(other):
            return RationalFunction(
                self.numerator.scale(other), self.denominator, reduce=False
            )
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return RationalFunction.zero()
        # cross-cancel before multiplying to keep degrees small
        g1 = poly_gcd_monic(self.numerator, o.denominator)
        g2 = poly_gcd_monic(o.numerator, self.denominator)
        return RationalFunction(
            self.numerator.exact_div(g1) * o.numerator.exact_div(g2),
            self.denominator.exact_div(g2) * o.denominator.exact_div(g1),
            reduce=False,
        )

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.is_zero:
            raise DomainError("Division by zero rational function")
        return RationalFunction(self.denominator, self.numerator, reduce=False)

    def __truediv__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "RationalFunction":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "RationalFunction":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction(
            self.numerator ** exponent, self.denominator ** exponent, reduce=False
        )

    def __call__(self, x: Any) -> Any:
        den = self.denominator(x)
        if den == 0:
            raise DomainError(f"Denominator of {self} vanishes at {x}")
        return self.numerator(x) / den

    def substitute_power(self, exponent: int) -> "RationalFunction":
        return RationalFunction(
            self.numerator.substitute_power(exponent),
            self.denominator.substitute_power(exponent),
            reduce=False,
        )

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.numerator == o.numerator and self.denominator == o.denominator

    def __hash__(self) -> int:
        return hash(("RationalFunction", self.numerator, self.denominator))

    def __repr__(self) -> str:
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"

    def __str__(self) -> str:
        if self.denominator.is_one:
            return str(self.numerator)
        return f"({self.numerator})/({self.denominator})"


def _as_polynomial(value: Any) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if _is_scalar(value):
        return Polynomial.constant(value)
    if isinstance(value, LaurentPolynomial) and value.is_polynomial():
        return value.to_polynomial()
    raise DomainError(f"Cannot interpret {value!r} as a polynomial")


class UPolynomial:
    """Polynomial in u whose coefficients are rational functions of q.

    ``coeffs[j]`` is the coefficient of ``u**j``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Any] = ()):
        cs = [_as_rational_function(c) for c in coeffs]
        end = len(cs)
        while end and cs[end - 1].is_zero:
            end -= 1
        self.coeffs: Tuple[RationalFunction, ...] = tuple(cs[:end])

    @classmethod
    def constant(cls, value: Any) -> "UPolynomial":
        return cls([value])

    @classmethod
    def u(cls) -> "UPolynomial":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, j: int) -> RationalFunction:
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return RationalFunction.zero()

    @staticmethod
    def _coerce(other: Any) -> Optional["UPolynomial"]:
        if isinstance(other, UPolynomial):
            return other
        try:
            return UPolynomial([_as_rational_function(other)])
        except DomainError:
            return None

    def __add__(self, other: Any) -> "UPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UPolynomial([self.coefficient(j) + o.coefficient(j) for j in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "UPolynomial":
        return UPolynomial([-c for c in self.coeffs])

    def __sub__(self, other: Any) -> "UPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "UPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> "UPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return UPolynomial()
        result = [RationalFunction.zero()] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x.is_zero:
                continue
            for j, y in enumerate(o.coeffs):
                if not y.is_zero:
                    result[i + j] = result[i + j] + x * y
        return UPolynomial(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "UPolynomial":
        if exponent < 0:
            raise DomainError("Negative powers of a u-polynomial are not defined")
        result = UPolynomial.constant(1)
        for _ in range(exponent):
            result = result * self
        return result

    def substitute(self, value: Any) -> RationalFunction:
        """Evaluate at ``u = value`` (a rational function of q)."""
        value = _as_rational_function(value)
        result = RationalFunction.zero()
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def at_q_power(self, k: int) -> RationalFunction:
        """Substitute ``u = q**k``."""
        return self.substitute(RationalFunction.q_power(k))

    def scale_u(self, factor: Any) -> "UPolynomial":
        """Substitute ``u -> factor * u``."""
        factor = _as_rational_function(factor)
        result = []
        power = RationalFunction.one()
        for c in self.coeffs:
            result.append(c * power)
            power = power * factor
        return UPolynomial(result)

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self) -> int:
        return hash(("UPolynomial", self.coeffs))

    def __repr__(self) -> str:
        return f"UPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero:
                continue
            power = "" if j == 0 else ("u" if j == 1 else f"u^{j}")
            body = f"[{c}]"
            terms.append(body + (f"*{power}" if power else ""))
        return " + ".join(terms)


def _as_rational_function(value: Any) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, LaurentPolynomial):
        return value.to_rational_function()
    if isinstance(value, Polynomial) or _is_scalar(value):
        return RationalFunction(value, reduce=False)
    raise DomainError(f"Cannot interpret {value!r} as a rational function")


# q-integers, cyclotomic polynomials, q-binomials


def q_int(a: int) -> LaurentPolynomial:
    """The q-integer ``[a]_q``; for ``a < 0`` this is ``-q**a * [-a]_q``."""
    if a >= 0:
        return LaurentPolynomial(0, [1] * a)
    return LaurentPolynomial(a, [-1] * (-a))


def q_int_poly(a: int) -> Polynomial:
    """``[a]_q`` as a Polynomial (``a >= 0``)."""
    if a < 0:
        raise DomainError(f"[{a}]_q is not a polynomial")
    return Polynomial._raw([_ONE] * a)


_CYCLOTOMIC_CACHE: Dict[int, Polynomial] = {}
_CYCLOTOMIC_LOCK = threading.Lock()


def cyclotomic(d: int) -> Polynomial:
    """The d-th cyclotomic polynomial, memoized."""
    if d < 1:
        raise DomainError(f"Cyclotomic index must be positive, got {d}")
    cached = _CYCLOTOMIC_CACHE.get(d)
    if cached is not None:
        return cached
    product = Polynomial.one()
    for e in divisors(d)[:-1]:
        product = product * cyclotomic(e)
    q_d_minus_one = Polynomial.monomial(d) - 1
    result = q_d_minus_one.exact_div(product)
    with _CYCLOTOMIC_LOCK:
        _CYCLOTOMIC_CACHE.setdefault(d, result)
    return _CYCLOTOMIC_CACHE[d]


def q_binomial(i: int, j: int, base_exp: int = 1) -> Polynomial:
    """Gaussian binomial ``[i choose j]`` in base ``q**base_exp``."""
    if j < 0 or j > i:
        raise DomainError(f"q-binomial needs 0 <= j <= i, got i={i}, j={j}")
    if base_exp < 1:
        raise DomainError(f"Base exponent must be positive, got {base_exp}")
    result = Polynomial.one()
    # every partial product is itself a Gaussian binomial, so each step divides
    for l in range(1, j + 1):
        result = (result * Polynomial.one_minus_q_power((i - l + 1) * base_exp)).exact_div(
            Polynomial.one_minus_q_power(l * base_exp)
        )
    return result


def cyclotomic_valuation(p: Polynomial, d: int) -> int:
    """Multiplicity of ``Phi_d`` as a factor of ``p``."""
    if p.is_zero:
        raise DomainError("Cyclotomic valuation of the zero polynomial is infinite")
    phi = cyclotomic(d)
    count = 0
    while p.degree >= phi.degree:
        quotient, remainder = p.divmod(phi)
        if not remainder.is_zero:
            break
        p = quotient
        count += 1
    return count


class LaurentQuotientWitness(BaseModel):
    """Evidence produced by the Laurent-quotient test."""
    kind: Literal["zero-factor", "failing-divisor", "table"]
    divisor: Optional[int] = Field(None, description="First divisor d with N(d) < D(d)")
    table: List[Tuple[int, int, int]] = Field(
        default_factory=list, description="Rows (d, N(d), D(d))"
    )


def laurent_quotient_test(
    a: Sequence[int], b: Sequence[int]
) -> Tuple[bool, LaurentQuotientWitness]:
    """Decide whether ``prod [a_i]_q / prod [b_i]_q`` is a Laurent polynomial.

    The quotient is a Laurent polynomial iff some ``a_i`` is zero, or
    ``N(d) >= D(d)`` for every divisor ``d`` of some ``b_i``.
    """
    if any(x <= 0 for x in b):
        raise DomainError(f"Denominator q-integers must be positive, got {list(b)}")
    if any(x == 0 for x in a):
        return True, LaurentQuotientWitness(kind="zero-factor")
    support = sorted({d for x in b for d in divisors(x)})
    table = []
    for d in support:
        n_d = sum(1 for x in a if x % d == 0)
        d_d = sum(1 for x in b if x % d == 0)
        if n_d < d_d:
            return False, LaurentQuotientWitness(
                kind="failing-divisor", divisor=d, table=[(d, n_d, d_d)]
            )
        table.append((d, n_d, d_d))
    return True, LaurentQuotientWitness(kind="table", table=table)


def laurent_quotient_by_division(a: Sequence[int], b: Sequence[int]) -> bool:
    """Brute-force counterpart of :func:`laurent_quotient_test`.

    Builds both products explicitly and divides; used to cross-check the
    divisor criterion.
    """
    numerator = LaurentPolynomial(0, [1])
    for x in a:
        numerator = numerator * q_int(x)
    if numerator.is_zero:
        return True
    denominator = Polynomial.one()
    for x in b:
        denominator = denominator * q_int_poly(x)
    poly, _ = numerator.split()
    return denominator.divides(poly)
