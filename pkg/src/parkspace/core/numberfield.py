"""
Exact arithmetic in cyclotomic fields.

Elements of Q(zeta_m) are polynomials in zeta reduced modulo Phi_m. Class
function identities whose character values are sums of roots of unity are
checked in the ring of polynomials in q and u over such a field, after
clearing the q-denominators.
"""

from fractions import Fraction
from typing import Any, Dict, Iterable, Optional, Tuple

from .errors import DomainError
from .exact import Polynomial, cyclotomic


class CyclotomicNumber:
    """An element of Q(zeta_m), zeta a primitive m-th root of unity."""

    __slots__ = ("m", "poly")

    def __init__(self, m: int, poly: Any = 0):
        if m < 1:
            raise DomainError(f"Cyclotomic field order must be positive, got {m}")
        if not isinstance(poly, Polynomial):
            poly = Polynomial.constant(poly)
        self.m = m
        self.poly: Polynomial = poly % cyclotomic(m) if poly.degree >= 1 else poly

    @classmethod
    def zeta(cls, m: int, exponent: int = 1) -> "CyclotomicNumber":
        """``zeta^exponent``; negative exponents wrap around mod m."""
        return cls(m, Polynomial.monomial(exponent % m))

    @classmethod
    def rational(cls, m: int, value: Any) -> "CyclotomicNumber":
        return cls(m, Polynomial.constant(value))

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero

    @property
    def is_rational(self) -> bool:
        return self.poly.degree <= 0

    def to_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is not rational")
        return self.poly.coefficient(0)

    def _coerce(self, other: Any) -> Optional["CyclotomicNumber"]:
        if isinstance(other, CyclotomicNumber):
            if other.m != self.m:
                raise DomainError(f"Mixing Q(zeta_{self.m}) and Q(zeta_{other.m})")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return CyclotomicNumber(self.m, other)
        return None

    def __add__(self, other: Any) -> "CyclotomicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.m, self.poly + o.poly)

    __radd__ = __add__

    def __neg__(self) -> "CyclotomicNumber":
        return CyclotomicNumber(self.m, -self.poly)

    def __sub__(self, other: Any) -> "CyclotomicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.m, self.poly - o.poly)

    def __rsub__(self, other: Any) -> "CyclotomicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> "CyclotomicNumber":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(self.m, self.poly * o.poly)

    __rmul__ = __mul__

    def conjugate(self) -> "CyclotomicNumber":
        """Complex conjugation, ``zeta -> zeta^{-1}``."""
        result = CyclotomicNumber(self.m)
        for e, c in enumerate(self.poly.coeffs):
            if c:
                result = result + CyclotomicNumber.zeta(self.m, -e) * c
        return result

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.poly == o.poly

    def __hash__(self) -> int:
        return hash(("CyclotomicNumber", self.m, self.poly))

    def __repr__(self) -> str:
        return f"CyclotomicNumber({self.m}, {self.poly.to_text('z')!r})"


Monomial = Tuple[int, int]


class QUPolynomial:
    """Sparse polynomial in q and u with coefficients in Q(zeta_m).

    Terms are stored as ``{(i, j): c}`` for ``c q^i u^j``; zero coefficients
    are never stored.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: Optional[Dict[Monomial, Any]] = None):
        self.m = m
        self.terms: Dict[Monomial, CyclotomicNumber] = {}
        for key, value in (terms or {}).items():
            c = value if isinstance(value, CyclotomicNumber) else CyclotomicNumber(m, value)
            if not c.is_zero:
                self.terms[key] = c

    @classmethod
    def monomial(cls, m: int, q_exp: int, u_exp: int = 0, coeff: Any = 1) -> "QUPolynomial":
        if q_exp < 0 or u_exp < 0:
            raise DomainError(f"Negative exponent in q^{q_exp} u^{u_exp}")
        return cls(m, {(q_exp, u_exp): coeff})

    @classmethod
    def from_q_polynomial(cls, m: int, poly: Polynomial) -> "QUPolynomial":
        return cls(m, {(i, 0): c for i, c in enumerate(poly.coeffs)})

    @classmethod
    def from_u_polynomial(cls, m: int, poly: Polynomial) -> "QUPolynomial":
        return cls(m, {(0, j): c for j, c in enumerate(poly.coeffs)})

    @classmethod
    def linear(cls, m: int, pieces: Iterable[Tuple[int, int, Any]]) -> "QUPolynomial":
        """Sum of ``c q^i u^j`` over ``(i, j, c)``."""
        result = cls(m)
        for i, j, c in pieces:
            result = result + cls.monomial(m, i, j, c)
        return result

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _coerce(self, other: Any) -> Optional["QUPolynomial"]:
        if isinstance(other, QUPolynomial):
            return other
        if isinstance(other, CyclotomicNumber) or (
            isinstance(other, (int, Fraction)) and not isinstance(other, bool)
        ):
            return QUPolynomial(self.m, {(0, 0): other})
        return None

    def __add__(self, other: Any) -> "QUPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms = dict(self.terms)
        for key, c in o.terms.items():
            terms[key] = terms[key] + c if key in terms else c
        return QUPolynomial(self.m, terms)

    __radd__ = __add__

    def __neg__(self) -> "QUPolynomial":
        return QUPolynomial(self.m, {key: -c for key, c in self.terms.items()})

    def __sub__(self, other: Any) -> "QUPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __mul__(self, other: Any) -> "QUPolynomial":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        terms: Dict[Monomial, CyclotomicNumber] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in o.terms.items():
                key = (i1 + i2, j1 + j2)
                product = c1 * c2
                terms[key] = terms[key] + product if key in terms else product
        return QUPolynomial(self.m, terms)

    __rmul__ = __mul__

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero

    def __hash__(self) -> int:
        return hash(("QUPolynomial", self.m, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        shown = ", ".join(f"q^{i}u^{j}: {c!r}" for (i, j), c in sorted(self.terms.items()))
        return f"QUPolynomial({self.m}, {{{shown}}})"
