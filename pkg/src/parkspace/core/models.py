"""
Result models for parkspace.

This module defines the serializable data structures shared by the library
and the command line:
- Reflection group data and residue conditions
- Decompositions of class functions into characters
- Certificates and table verification reports
"""

from enum import Enum
from fractions import Fraction
from math import gcd, lcm, prod
from typing import Any, Callable, Dict, Iterable, List, Literal, Optional, Tuple

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    computed_field,
    field_serializer,
    field_validator,
    model_validator,
)
from sympy import primefactors

from .exact import Polynomial, RationalFunction


class GroupFamily(str, Enum):
    """Families of irreducible complex reflection groups."""
    SYMMETRIC = "symmetric"
    IMPRIMITIVE = "imprimitive"
    CYCLIC = "cyclic"
    DIHEDRAL = "dihedral"
    EXCEPTIONAL = "exceptional"


class Basis(str, Enum):
    """Bases a class function can be decomposed in."""
    IRREDUCIBLE = "irreducible"
    PERMUTATION = "permutation"


class ReflectionGroupData(BaseModel):
    """Degrees and codegrees of an irreducible complex reflection group."""
    model_config = ConfigDict(frozen=True, use_enum_values=True)

    label: str = Field(..., description="Canonical group label, e.g. 'S4', 'G(4,2,3)', 'G23'")
    family: GroupFamily = Field(..., description="Family the group belongs to")
    params: Tuple[int, ...] = Field(default=(), description="Family parameters")
    degrees: Tuple[int, ...] = Field(..., description="Degrees, ascending")
    codegrees: Tuple[int, ...] = Field(..., description="Codegrees, ascending")

    @model_validator(mode="after")
    def _check_invariants(self) -> "ReflectionGroupData":
        if not self.degrees:
            raise ValueError("A reflection group needs at least one degree")
        if len(self.degrees) != len(self.codegrees):
            raise ValueError("Degrees and codegrees must have the same length")
        if list(self.degrees) != sorted(self.degrees):
            raise ValueError("Degrees must be sorted ascending")
        if list(self.codegrees) != sorted(self.codegrees):
            raise ValueError("Codegrees must be sorted ascending")
        if any(d < 1 for d in self.degrees) or any(c < 0 for c in self.codegrees):
            raise ValueError("Degrees must be positive and codegrees nonnegative")
        return self

    @computed_field  # type: ignore[misc]
    @property
    def rank(self) -> int:
        return len(self.degrees)

    @computed_field  # type: ignore[misc]
    @property
    def order(self) -> int:
        return prod(self.degrees)

    @computed_field  # type: ignore[misc]
    @property
    def N(self) -> int:
        """Number of reflecting hyperplanes."""
        return sum(c + 1 for c in self.codegrees)

    @property
    def is_well_generated(self) -> bool:
        """True iff ``d_i + d*_{r+1-i}`` is constant."""
        sums = {d + c for d, c in zip(self.degrees, reversed(self.codegrees))}
        return len(sums) == 1

    @property
    def coxeter_number(self) -> int:
        return self.degrees[-1]


def _normalize_residue(r: int, modulus: int) -> int:
    return (r - 1) % modulus + 1


class ResidueCondition(BaseModel):
    """A condition ``k mod H in K``, optionally with a floor on k.

    Residues are stored as representatives in ``[1..H]`` (``H`` stands for
    ``0 mod H``). When ``min_k`` is set, k must also satisfy ``k >= min_k``
    unless ``k == 1``.
    """
    model_config = ConfigDict(frozen=True)

    modulus: int = Field(..., ge=1, description="Period H")
    residues: Tuple[int, ...] = Field(..., description="Sorted residues in [1..H]")
    min_k: Optional[int] = Field(None, description="Floor constraint; k = 1 is exempt")

    @model_validator(mode="before")
    @classmethod
    def _normalize(cls, data: Any) -> Any:
        if isinstance(data, dict) and "modulus" in data and "residues" in data:
            modulus = int(data["modulus"])
            if modulus >= 1:
                residues = sorted({_normalize_residue(int(r), modulus) for r in data["residues"]})
                data = {**data, "modulus": modulus, "residues": tuple(residues)}
        return data

    # Construction

    @classmethod
    def from_predicate(
        cls, modulus: int, predicate: Callable[[int], bool], min_k: Optional[int] = None
    ) -> "ResidueCondition":
        return cls(
            modulus=modulus,
            residues=[r for r in range(1, modulus + 1) if predicate(r)],
            min_k=min_k,
        )

    @classmethod
    def everything(cls) -> "ResidueCondition":
        return cls(modulus=1, residues=[1])

    @classmethod
    def nothing(cls) -> "ResidueCondition":
        return cls(modulus=1, residues=[])

    # Queries

    def contains(self, k: int) -> bool:
        if _normalize_residue(k, self.modulus) not in self.residues:
            return False
        return self.min_k is None or k == 1 or k >= self.min_k

    def __contains__(self, k: int) -> bool:
        return self.contains(k)

    def members(self, limit: int) -> List[int]:
        """All k in ``[1..limit]`` satisfying the condition."""
        return [k for k in range(1, limit + 1) if self.contains(k)]

    @property
    def is_empty(self) -> bool:
        return not self.residues

    # Algebra

    def canonical(self) -> "ResidueCondition":
        """Return the equivalent condition with the minimal modulus."""
        modulus = self.modulus
        residues = set(self.residues)
        reduced = True
        while reduced and modulus > 1:
            reduced = False
            for p in primefactors(modulus):
                step = modulus // p
                if all(_normalize_residue(r + step, modulus) in residues for r in residues):
                    modulus = step
                    residues = {_normalize_residue(r, modulus) for r in residues}
                    reduced = True
                    break
        min_k = self.min_k
        # a floor that every matching k above 1 already clears is no constraint
        if min_k is not None and all(
            not self._raw_match(k, modulus, residues) for k in range(2, min_k)
        ):
            min_k = None
        return ResidueCondition(modulus=modulus, residues=sorted(residues), min_k=min_k)

    @staticmethod
    def _raw_match(k: int, modulus: int, residues: Iterable[int]) -> bool:
        return _normalize_residue(k, modulus) in set(residues)

    def lift(self, modulus: int) -> "ResidueCondition":
        """Re-express the condition with a multiple of the current modulus."""
        if modulus % self.modulus:
            raise ValueError(f"{modulus} is not a multiple of {self.modulus}")
        return ResidueCondition.from_predicate(
            modulus,
            lambda r: _normalize_residue(r, self.modulus) in self.residues,
            self.min_k,
        )

    def intersect(self, other: "ResidueCondition") -> "ResidueCondition":
        modulus = lcm(self.modulus, other.modulus)
        floors = [f for f in (self.min_k, other.min_k) if f is not None]
        return ResidueCondition.from_predicate(
            modulus,
            lambda r: _normalize_residue(r, self.modulus) in self.residues
            and _normalize_residue(r, other.modulus) in other.residues,
            max(floors) if floors else None,
        ).canonical()

    def union(self, other: "ResidueCondition") -> "ResidueCondition":
        if self.min_k is not None or other.min_k is not None:
            raise ValueError("Union of floor-constrained conditions is not a residue condition")
        modulus = lcm(self.modulus, other.modulus)
        return ResidueCondition.from_predicate(
            modulus,
            lambda r: _normalize_residue(r, self.modulus) in self.residues
            or _normalize_residue(r, other.modulus) in other.residues,
        ).canonical()

    def equivalent(self, other: "ResidueCondition") -> bool:
        """Equality of the sets of k the two conditions describe."""
        return self.canonical() == other.canonical()

    def describe(self) -> str:
        if self.is_empty:
            return "no k"
        if self.modulus == 1:
            text = "all k"
        else:
            shown = ",".join(str(r % self.modulus) for r in self.residues)
            text = f"k ≡ {shown} mod {self.modulus}"
        if self.min_k is not None:
            text = f"k = 1, or {text} with k >= {self.min_k}"
        return text


class PolynomialityConditions(BaseModel):
    """Residue characterisation of q-polynomiality of Cat_k and Cat*_k."""
    model_config = ConfigDict(frozen=True)

    group: str
    cat: ResidueCondition
    cat_star: ResidueCondition
    both: ResidueCondition
    zero_cases: List[int] = Field(
        default_factory=list, description="Values k = d*_i + 1 where Cat*_k vanishes"
    )
    scan_modulus: int = Field(..., description="Period scanned")


class DecompositionEntry(BaseModel):
    """One character with its multiplicity."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    key: Any = Field(..., description="Character label object")
    label: str = Field(..., description="Text form of the label")
    coeff: Any = Field(..., description="Fraction, Polynomial, RationalFunction or UPolynomial")
    valid: bool = Field(..., description="Coefficient is in N (resp. N[q])")


class Decomposition(BaseModel):
    """A class function written in a basis of characters."""
    model_config = ConfigDict(arbitrary_types_allowed=True, use_enum_values=True)

    group: str
    k: Optional[int] = None
    graded: bool = False
    basis: Basis = Basis.IRREDUCIBLE
    entries: List[DecompositionEntry] = Field(default_factory=list)

    @computed_field  # type: ignore[misc]
    @property
    def representation_valid(self) -> bool:
        return all(entry.valid for entry in self.entries)

    def coefficient(self, key: Any) -> Any:
        for entry in self.entries:
            if entry.key == key:
                return entry.coeff
        raise KeyError(key)

    def as_dict(self) -> Dict[Any, Any]:
        return {entry.key: entry.coeff for entry in self.entries}

    def nonzero(self) -> List[DecompositionEntry]:
        return [e for e in self.entries if not _is_zero(e.coeff)]


def _is_zero(value: Any) -> bool:
    if hasattr(value, "is_zero"):
        return bool(value.is_zero)
    return value == 0


# Exact fields accept and produce the shapes of utils.serialization.


def _encoded(value: Any) -> Any:
    from ..utils.serialization import to_jsonable

    return to_jsonable(value)


def _fraction_field(value: Any) -> Any:
    if isinstance(value, (list, str, int)) and not isinstance(value, bool):
        from ..utils.serialization import parse_fraction

        return parse_fraction(value)
    return value


def _polynomial_field(value: Any) -> Any:
    if isinstance(value, dict):
        from ..utils.serialization import parse_polynomial

        return parse_polynomial(value)
    return value


def _rational_function_field(value: Any) -> Any:
    if isinstance(value, dict):
        from ..utils.serialization import parse_rational_function

        return parse_rational_function(value)
    return value


class BinomialCertificate(BaseModel):
    """Expansion ``g(t) = sum_i b_i binom(t, i)``."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    coefficients: List[Fraction] = Field(..., description="b_0..b_r")
    all_nonneg_integers: bool

    @field_validator("coefficients", mode="before")
    @classmethod
    def decode_coefficients(cls, v: Any) -> Any:
        return [_fraction_field(c) for c in v] if isinstance(v, list) else v

    @field_serializer("coefficients", when_used="json")
    def encode_coefficients(self, v: List[Fraction]) -> Any:
        return _encoded(v)


class QBinomialCertificate(BaseModel):
    """Expansion of a u-polynomial in the q-binomial basis of base q^M."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    base_exp: int = Field(..., ge=1)
    coefficients: List[RationalFunction] = Field(..., description="c_0..c_r")
    all_in_Nq: bool

    @field_validator("coefficients", mode="before")
    @classmethod
    def decode_coefficients(cls, v: Any) -> Any:
        return [_rational_function_field(c) for c in v] if isinstance(v, list) else v

    @field_serializer("coefficients", when_used="json")
    def encode_coefficients(self, v: List[RationalFunction]) -> Any:
        return _encoded(v)


class PeriodScanResult(BaseModel):
    """Outcome of residue enumeration under a certified period."""
    status: Literal["certified", "indeterminate"]
    condition: Optional[ResidueCondition] = None
    period: int
    difference_certificate: Optional[BinomialCertificate] = None


class GcdRecord(BaseModel):
    """Brute-force gcds of specialised Schur functions of a fixed degree."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    n: int
    k: int
    gcd_int: int
    gcd_poly: Polynomial
    predicted_int: int
    predicted_poly: Polynomial

    @field_validator("gcd_poly", "predicted_poly", mode="before")
    @classmethod
    def decode_polynomial(cls, v: Any) -> Any:
        return _polynomial_field(v)

    @field_serializer("gcd_poly", "predicted_poly", when_used="json")
    def encode_polynomial(self, v: Polynomial) -> Any:
        return _encoded(v)

    @computed_field  # type: ignore[misc]
    @property
    def matches(self) -> bool:
        return self.gcd_int == self.predicted_int and self.gcd_poly == self.predicted_poly


class UnimodalityResult(BaseModel):
    """Unimodality verdicts for the coefficients of a Schur quotient."""
    partition: str
    k: int
    coefficients: List[int]
    even_ok: bool
    odd_ok: bool
    whole_ok: bool


class DihedralCheck(BaseModel):
    """Whether phi_k is a character and a permutation character for a dihedral group."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    m: int
    k: int
    is_character: bool
    is_perm_decomposable: bool
    multiplicities: Dict[str, Fraction]
    perm_coefficients: Dict[str, Fraction]

    @field_validator("multiplicities", "perm_coefficients", mode="before")
    @classmethod
    def decode_fractions(cls, v: Any) -> Any:
        if isinstance(v, dict):
            return {str(label): _fraction_field(c) for label, c in v.items()}
        return v

    @field_serializer("multiplicities", "perm_coefficients", when_used="json")
    def encode_fractions(self, v: Dict[str, Fraction]) -> Any:
        return _encoded(v)


class TableRow(BaseModel):
    """One checked row of a reproduced table."""
    table: str
    group: str
    expected: str
    computed: str
    ok: bool


class TableReport(BaseModel):
    """Outcome of reproducing the congruence tables."""
    rows: List[TableRow] = Field(default_factory=list)

    @computed_field  # type: ignore[misc]
    @property
    def ok(self) -> bool:
        return all(row.ok for row in self.rows)

    def failures(self) -> List[TableRow]:
        return [row for row in self.rows if not row.ok]

    def by_table(self) -> Dict[str, List[TableRow]]:
        grouped: Dict[str, List[TableRow]] = {}
        for row in self.rows:
            grouped.setdefault(row.table, []).append(row)
        return grouped


def coprime_condition(n: int) -> ResidueCondition:
    """``gcd(k, n) = 1`` as a residue condition."""
    return ResidueCondition.from_predicate(n, lambda r: gcd(r, n) == 1).canonical()
