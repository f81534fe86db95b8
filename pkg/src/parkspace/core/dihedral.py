"""
Parking space characters of the dihedral group of order 2m.

The group is ``<a, b | a^m = b^2 = 1, bab = a^{-1}>``. Class functions are
stored on class representatives only: the identity, the rotations ``a^i``
for ``1 <= i <= m/2``, and the reflections ``b`` (and ``ab`` when m is even).

Irreducible characters are labelled ``xi_0`` (trivial), ``xi_1`` (det),
``xi_2``, ``xi_3`` (m even only) and the two-dimensional ``chi_j``. The
multiplicity of every irreducible in the two-variable character has the
common denominator ``(1 - q^2)(1 - q^m)``; numerators are kept as
polynomials in q and u over Q(zeta_m) so the reconstruction identity can be
checked exactly on every class.
"""

from fractions import Fraction
from typing import Any, Dict, Iterator, List, NamedTuple, Optional, Tuple

from ..utils.logging import get_logger
from .certify import q_binomial_basis
from .errors import DomainError, InvariantError
from .exact import Polynomial, RationalFunction, UPolynomial, q_int_poly
from .models import Basis, Decomposition, DecompositionEntry, DihedralCheck, QBinomialCertificate
from .numberfield import CyclotomicNumber, QUPolynomial


def _require_m(m: int) -> None:
    if m < 2:
        raise DomainError(f"Dihedral parameter must be at least 2, got {m}")


def _require_k(k: int) -> None:
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")


class DihedralClass(NamedTuple):
    label: str
    kind: str  # "rotation" or "reflection"
    index: int
    size: int


def dihedral_classes(m: int) -> List[DihedralClass]:
    """Conjugacy class representatives with their class sizes."""
    _require_m(m)
    classes = [DihedralClass("1", "rotation", 0, 1)]
    for i in range(1, m // 2 + 1):
        size = 1 if 2 * i == m else 2
        classes.append(DihedralClass(f"a^{i}", "rotation", i, size))
    if m % 2 == 0:
        classes.append(DihedralClass("b", "reflection", 0, m // 2))
        classes.append(DihedralClass("ab", "reflection", 1, m // 2))
    else:
        classes.append(DihedralClass("b", "reflection", 0, m))
    return classes


def dihedral_irreducibles(m: int) -> List[str]:
    _require_m(m)
    labels = ["xi_0", "xi_1"]
    if m % 2 == 0:
        labels += ["xi_2", "xi_3"]
    labels += [f"chi_{j}" for j in range(1, (m - 1) // 2 + 1)]
    return labels


def _chi_index(label: str) -> int:
    return int(label.split("_")[1])


def dihedral_character_value(m: int, label: str, cls: DihedralClass) -> CyclotomicNumber:
    """Value of the irreducible character ``label`` on the class ``cls``."""
    one = CyclotomicNumber.rational(m, 1)
    if label == "xi_0":
        return one
    if label == "xi_1":
        return one if cls.kind == "rotation" else -one
    if label in ("xi_2", "xi_3"):
        if cls.kind == "rotation":
            return one if cls.index % 2 == 0 else -one
        positive_on = 0 if label == "xi_2" else 1
        return one if cls.index == positive_on else -one
    if label.startswith("chi_"):
        if cls.kind == "reflection":
            return CyclotomicNumber(m)
        j = _chi_index(label)
        return CyclotomicNumber.zeta(m, cls.index * j) + CyclotomicNumber.zeta(m, -cls.index * j)
    raise DomainError(f"Unknown dihedral character {label!r}")


def dihedral_character_table(m: int) -> Dict[str, Dict[str, CyclotomicNumber]]:
    """``{character: {class: value}}``."""
    classes = dihedral_classes(m)
    return {
        label: {cls.label: dihedral_character_value(m, label, cls) for cls in classes}
        for label in dihedral_irreducibles(m)
    }


class DihedralClassFunction:
    """Values of a class function on the class representatives."""

    __slots__ = ("m", "values")

    def __init__(self, m: int, values: Dict[str, Any]):
        expected = [cls.label for cls in dihedral_classes(m)]
        if sorted(values) != sorted(expected):
            raise InvariantError(
                f"Class function for D{m} needs values on {expected}, got {sorted(values)}"
            )
        self.m = m
        self.values = dict(values)

    def __getitem__(self, label: str) -> Any:
        return self.values[label]

    def __iter__(self) -> Iterator[str]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __repr__(self) -> str:
        return f"DihedralClassFunction({self.m}, {self.values!r})"


def phi_dihedral(m: int, k: int) -> DihedralClassFunction:
    """``phi_k(w) = k^{dim V^w}``: k^2 at the identity, 1 on other rotations, k on reflections."""
    _require_k(k)
    values: Dict[str, Any] = {}
    for cls in dihedral_classes(m):
        if cls.kind == "reflection":
            values[cls.label] = k
        else:
            values[cls.label] = k * k if cls.index == 0 else 1
    return DihedralClassFunction(m, values)


def _qu(m: int, *pieces: Tuple[int, int, Any]) -> QUPolynomial:
    return QUPolynomial.linear(m, pieces)


def phi_hat_dihedral(m: int) -> DihedralClassFunction:
    """``det(1 - uw) / det(1 - qw)`` as (numerator, denominator) pairs over Q(zeta_m)."""
    values: Dict[str, Any] = {}
    for cls in dihedral_classes(m):
        if cls.kind == "reflection":
            values[cls.label] = (_qu(m, (0, 0, 1), (0, 2, -1)), _qu(m, (0, 0, 1), (2, 0, -1)))
            continue
        z = CyclotomicNumber.zeta(m, cls.index)
        zbar = CyclotomicNumber.zeta(m, -cls.index)
        trace = z + zbar
        numerator = _qu(m, (0, 0, 1), (0, 1, -trace), (0, 2, 1))
        denominator = _qu(m, (0, 0, 1), (1, 0, -trace), (2, 0, 1))
        values[cls.label] = (numerator, denominator)
    return DihedralClassFunction(m, values)


# Multiplicities


def _common_denominator(m: int) -> Polynomial:
    return Polynomial.one_minus_q_power(2) * Polynomial.one_minus_q_power(m)


def dihedral_numerators(m: int) -> Dict[str, QUPolynomial]:
    """Numerators of the multiplicities over ``(1 - q^2)(1 - q^m)``.

    All of them except those of xi_0 and xi_1 are multiples of
    ``(1 - uq)(q - u)``, which is ``q`` times the numerator of M(u).
    """
    _require_m(m)
    xi_0 = _qu(m, (0, 0, 1), (1, 1, -1)) * _qu(m, (0, 0, 1), (m - 1, 1, -1))
    xi_1 = _qu(m, (1, 0, 1), (0, 1, -1)) * _qu(m, (m - 1, 0, 1), (0, 1, -1))
    base = _qu(m, (0, 0, 1), (1, 1, -1)) * _qu(m, (1, 0, 1), (0, 1, -1))
    numerators = {"xi_0": xi_0, "xi_1": xi_1}
    if m % 2 == 0:
        half = QUPolynomial.monomial(m, m // 2 - 1) * base
        numerators["xi_2"] = half
        numerators["xi_3"] = half
    for j in range(1, (m - 1) // 2 + 1):
        weight = QUPolynomial.monomial(m, j - 1) + QUPolynomial.monomial(m, m - j - 1)
        numerators[f"chi_{j}"] = weight * base
    return numerators


def _to_u_polynomial(numerator: QUPolynomial, denominator: Polynomial) -> UPolynomial:
    by_u: Dict[int, Polynomial] = {}
    for (i, j), c in numerator.terms.items():
        by_u[j] = by_u.get(j, Polynomial.zero()) + Polynomial.monomial(i, c.to_fraction())
    degree = max(by_u, default=-1)
    return UPolynomial(
        [RationalFunction(by_u.get(j, Polynomial.zero()), denominator) for j in range(degree + 1)]
    )


def dihedral_hat_multiplicities(m: int) -> Dict[str, UPolynomial]:
    """Multiplicity of every irreducible in the two-variable character."""
    denominator = _common_denominator(m)
    return {
        label: _to_u_polynomial(numerator, denominator)
        for label, numerator in dihedral_numerators(m).items()
    }


def dihedral_ungraded_multiplicities(m: int, k: int) -> Dict[str, Fraction]:
    """Multiplicities in phi_k, the ``q -> 1`` limit at ``u = q^k``."""
    _require_m(m)
    _require_k(k)
    result = {
        "xi_0": Fraction((k + 1) * (k + m - 1), 2 * m),
        "xi_1": Fraction((k - 1) * (k - m + 1), 2 * m),
    }
    if m % 2 == 0:
        result["xi_2"] = Fraction(k * k - 1, 2 * m)
        result["xi_3"] = Fraction(k * k - 1, 2 * m)
    for j in range(1, (m - 1) // 2 + 1):
        result[f"chi_{j}"] = Fraction(k * k - 1, m)
    return result


def dihedral_inner_product(m: int, k: int) -> Dict[str, Fraction]:
    """``<phi_k, chi>`` for every irreducible, summed over the classes."""
    classes = dihedral_classes(m)
    phi = phi_dihedral(m, k)
    result = {}
    for label in dihedral_irreducibles(m):
        total = CyclotomicNumber(m)
        for cls in classes:
            value = dihedral_character_value(m, label, cls).conjugate()
            total = total + value * (cls.size * phi[cls.label])
        result[label] = total.to_fraction() / (2 * m)
    return result


def _entry(label: str, coeff: Any) -> DecompositionEntry:
    if isinstance(coeff, Fraction):
        valid = coeff.denominator == 1 and coeff >= 0
    elif isinstance(coeff, RationalFunction):
        valid = coeff.is_nonnegative_integral_polynomial()
    else:
        valid = False
    return DecompositionEntry(key=label, label=label, coeff=coeff, valid=valid)


def dihedral_decomposition(
    m: int, substitute_k: Optional[int] = None, graded: bool = True
) -> Decomposition:
    """The two-variable character (or phi_k, graded or not) in irreducibles."""
    if not graded:
        if substitute_k is None:
            raise DomainError("Ungraded dihedral multiplicities need a value of k")
        ungraded = dihedral_ungraded_multiplicities(m, substitute_k)
        entries = [_entry(label, coeff) for label, coeff in ungraded.items()]
    else:
        hat = dihedral_hat_multiplicities(m)
        if substitute_k is not None:
            _require_k(substitute_k)
        entries = [
            _entry(label, poly if substitute_k is None else poly.at_q_power(substitute_k))
            for label, poly in hat.items()
        ]
    return Decomposition(
        group=f"D{m}", k=substitute_k, graded=graded, basis=Basis.IRREDUCIBLE, entries=entries
    )


def dihedral_closure_check(m: int) -> Dict[str, bool]:
    """Per class, whether ``sum_chi m^chi(u) chi(w)`` equals the two-variable character.

    Both sides are multiplied by ``(1 - q^2)(1 - q^m) det(1 - qw)`` and
    compared as polynomials in q and u over Q(zeta_m).
    """
    numerators = dihedral_numerators(m)
    phi_hat = phi_hat_dihedral(m)
    denominator = QUPolynomial.from_q_polynomial(m, _common_denominator(m))
    result = {}
    for cls in dihedral_classes(m):
        total = QUPolynomial(m)
        for label, numerator in numerators.items():
            value = dihedral_character_value(m, label, cls)
            if not value.is_zero:
                total = total + numerator * value
        phi_numerator, phi_denominator = phi_hat[cls.label]
        result[cls.label] = total * phi_denominator == phi_numerator * denominator
        if not result[cls.label]:
            get_logger().error(f"D{m}: reconstruction fails on class {cls.label}")
    return result


# Permutation characters


def dihedral_perm_labels(m: int) -> List[str]:
    _require_m(m)
    return ["triv", "eta_1", "eta_2", "eta_reg"] if m % 2 == 0 else ["triv", "eta_1", "eta_reg"]


def dihedral_perm_character(m: int, label: str, cls: DihedralClass) -> int:
    """Permutation characters on the cosets of the trivial subgroup, ``<b>``, ``<ab>`` and D."""
    if label == "triv":
        return 1
    identity = cls.kind == "rotation" and cls.index == 0
    if label == "eta_reg":
        return 2 * m if identity else 0
    if label not in ("eta_1", "eta_2"):
        raise DomainError(f"Unknown dihedral permutation character {label!r}")
    if identity:
        return m
    if cls.kind == "rotation":
        return 0
    if m % 2:
        return 1 if label == "eta_1" else 0
    fixed_class = 0 if label == "eta_1" else 1
    return 2 if cls.index == fixed_class else 0


def dihedral_perm_coefficients(m: int, k: int) -> Dict[str, Fraction]:
    """Coefficients of phi_k over the permutation characters."""
    _require_m(m)
    _require_k(k)
    regular = Fraction((k - 1) * (k - m + 1), 2 * m)
    if m % 2 == 0:
        return {
            "triv": Fraction(1),
            "eta_1": Fraction(k - 1, 2),
            "eta_2": Fraction(k - 1, 2),
            "eta_reg": regular,
        }
    return {"triv": Fraction(1), "eta_1": Fraction(k - 1), "eta_reg": regular}


def dihedral_perm_reconstruct(m: int, k: int) -> Dict[str, Fraction]:
    """The permutation expansion evaluated on every class."""
    coefficients = dihedral_perm_coefficients(m, k)
    return {
        cls.label: sum(
            (c * dihedral_perm_character(m, label, cls) for label, c in coefficients.items()),
            start=Fraction(0),
        )
        for cls in dihedral_classes(m)
    }


def dihedral_condition_check(m: int, k: int) -> DihedralCheck:
    """Whether phi_k is a character, and a sum of the permutation characters above."""
    multiplicities = dihedral_ungraded_multiplicities(m, k)
    perm = dihedral_perm_coefficients(m, k)

    def natural(value: Fraction) -> bool:
        return value.denominator == 1 and value >= 0

    return DihedralCheck(
        m=m,
        k=k,
        is_character=all(natural(v) for v in multiplicities.values()),
        is_perm_decomposable=all(natural(v) for v in perm.values()),
        multiplicities=multiplicities,
        perm_coefficients=perm,
    )


# Shifted expansions in the q-binomial basis of base q^m


class ShiftedExpansion(NamedTuple):
    name: str
    function: UPolynomial
    expected: List[RationalFunction]
    certificate: QBinomialCertificate

    @property
    def matches(self) -> bool:
        size = max(len(self.expected), len(self.certificate.coefficients))
        padded = self.certificate.coefficients + [RationalFunction.zero()] * size
        wanted = self.expected + [RationalFunction.zero()] * size
        return all(padded[i] == wanted[i] for i in range(size))


def _ratio(a: int, b: int) -> RationalFunction:
    return RationalFunction(q_int_poly(a), q_int_poly(b))


def _q(e: int) -> RationalFunction:
    return RationalFunction.q_power(e)


def _m_function(m: int) -> UPolynomial:
    """``M(u) = (1 - uq)(1 - u/q) / ((1 - q^2)(1 - q^m))``."""
    denominator = _common_denominator(m)
    return UPolynomial(
        [
            RationalFunction(1, denominator),
            RationalFunction(-(Polynomial.monomial(2) + 1), Polynomial.monomial(1) * denominator),
            RationalFunction(1, denominator),
        ]
    )


def dihedral_shifted_expansions(m: int) -> List[ShiftedExpansion]:
    """Closed-form q-binomial coordinates of xi_0, xi_1 and M after ``u -> qu``
    and ``u -> q^{m-1} u``, next to the coordinates from the recursion."""
    hat = dihedral_hat_multiplicities(m)
    m_function = _m_function(m)
    r2m = _ratio(2 * m, 2)
    r2m2 = _ratio(2 * m - 2, 2)
    zero = RationalFunction.zero()
    one = RationalFunction.one()
    cases = [
        ("xi_0(qu)", hat["xi_0"], 1, [one, _q(m) + _q(2) * r2m, _q(2 * m + 2) * r2m]),
        (
            "xi_0(q^(m-1)u)",
            hat["xi_0"],
            m - 1,
            [r2m2, _q(m) * (r2m2 + _q(m - 2) * r2m), _q(4 * m - 2) * r2m],
        ),
        ("xi_1(qu)", hat["xi_1"], 1, [zero, _q(m), _q(m + 2) * r2m]),
        ("xi_1(q^(m-1)u)", hat["xi_1"], m - 1, [zero, _q(m) * r2m2, _q(3 * m - 2) * r2m]),
        ("M(qu)", m_function, 1, [zero, _ratio(m + 2, 2), _q(m + 2) * r2m]),
        (
            "M(q^(m-1)u)",
            m_function,
            m - 1,
            [_ratio(m - 2, 2), _q(m - 2) * r2m + _q(m) * _ratio(m - 2, 2), _q(3 * m - 2) * r2m],
        ),
    ]
    expansions = []
    for name, function, shift, expected in cases:
        shifted = function.scale_u(_q(shift))
        expansions.append(
            ShiftedExpansion(
                name=name,
                function=shifted,
                expected=expected,
                certificate=q_binomial_basis(shifted, m),
            )
        )
    return expansions


def dihedral_certificates(m: int) -> Dict[Tuple[str, int], QBinomialCertificate]:
    """q-binomial certificates of every multiplicity shifted by ``q`` and ``q^{m-1}``.

    When all of them are certified, every multiplicity is in N[q] at
    ``k ≡ ±1 mod m``.
    """
    result = {}
    for label, poly in dihedral_hat_multiplicities(m).items():
        for shift in sorted({1, m - 1}):
            result[(label, shift)] = q_binomial_basis(poly.scale_u(_q(shift)), m)
    return result


def dihedral_perm_decomposition(m: int, k: int) -> Decomposition:
    """phi_k over the permutation characters; valid iff every coefficient is in N."""
    entries = [_entry(label, c) for label, c in dihedral_perm_coefficients(m, k).items()]
    return Decomposition(group=f"D{m}", k=k, basis=Basis.PERMUTATION, entries=entries)
