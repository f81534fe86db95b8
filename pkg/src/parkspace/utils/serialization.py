"""
Canonical JSON for exact values and result models.

Rationals are written as ``["num", "den"]`` with decimal strings, polynomials
as ``{"min_deg": d, "coeffs": [...]}``, rational functions as a numerator and
denominator pair and u-polynomials as ``{"u_coeffs": [...]}``. Integers that
do not fit a double exactly are written as decimal strings.
"""

import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Type, TypeVar, Union

from pydantic import BaseModel
from pydantic import ValidationError as PydanticValidationError

from ..core.exact import LaurentPolynomial, Polynomial, RationalFunction, UPolynomial
from ..core.models import (
    BinomialCertificate,
    Decomposition,
    DecompositionEntry,
    DihedralCheck,
    GcdRecord,
    PeriodScanResult,
    PolynomialityConditions,
    QBinomialCertificate,
    ResidueCondition,
    TableReport,
    UnimodalityResult,
)
from .validators import ValidationError

_SAFE_INT = 2 ** 53

M = TypeVar("M", bound=BaseModel)


def _int(value: int) -> Union[int, str]:
    return value if -_SAFE_INT < value < _SAFE_INT else str(value)


def _fraction(value: Fraction) -> list:
    return [str(value.numerator), str(value.denominator)]


def _coeffs(coeffs: Any) -> list:
    return [_fraction(Fraction(c)) for c in coeffs]


def to_jsonable(value: Any) -> Any:
    """Convert a value into plain JSON types."""
    if value is None or isinstance(value, (bool, str, float)):
        return value
    if isinstance(value, int):
        return _int(value)
    if isinstance(value, Fraction):
        return _fraction(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, Polynomial):
        return {"min_deg": 0, "coeffs": _coeffs(value.coeffs)}
    if isinstance(value, LaurentPolynomial):
        return {"min_deg": value.min_deg, "coeffs": _coeffs(value.coeffs)}
    if isinstance(value, RationalFunction):
        return {
            "numerator": to_jsonable(value.numerator),
            "denominator": to_jsonable(value.denominator),
        }
    if isinstance(value, UPolynomial):
        return {"u_coeffs": [to_jsonable(c) for c in value.coeffs]}
    if isinstance(value, ResidueCondition):
        data: Dict[str, Any] = {"modulus": value.modulus, "residues": list(value.residues)}
        if value.min_k is not None:
            data["min_k"] = value.min_k
        return data
    if isinstance(value, Decomposition):
        return {
            "group": value.group,
            "k": value.k,
            "graded": value.graded,
            "basis": to_jsonable(value.basis),
            "entries": [
                {"label": e.label, "coeff": to_jsonable(e.coeff), "valid": e.valid}
                for e in value.entries
            ],
            "representation_valid": value.representation_valid,
        }
    if isinstance(value, BaseModel):
        fields = list(type(value).model_fields) + list(type(value).model_computed_fields)
        return {name: to_jsonable(getattr(value, name)) for name in fields}
    if isinstance(value, dict):
        return {_key(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "to_text"):
        return value.to_text()
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def _key(key: Any) -> str:
    if isinstance(key, tuple):
        return "|".join(_key(k) for k in key)
    if hasattr(key, "to_text"):
        return key.to_text()
    return str(key)


def to_json(value: Any, indent: Optional[int] = None) -> str:
    return json.dumps(to_jsonable(value), indent=indent, ensure_ascii=False)


# Parsers


def parse_int(data: Any) -> int:
    if isinstance(data, bool):
        raise ValidationError(f"Expected an integer, got {data!r}")
    try:
        return int(data)
    except (TypeError, ValueError) as e:
        raise ValidationError(f"Expected an integer, got {data!r}") from e


def parse_fraction(data: Any) -> Fraction:
    if isinstance(data, list) and len(data) == 2:
        return Fraction(parse_int(data[0]), parse_int(data[1]))
    return Fraction(parse_int(data))


def parse_laurent(data: Dict[str, Any]) -> LaurentPolynomial:
    try:
        return LaurentPolynomial(
            parse_int(data["min_deg"]), [parse_fraction(c) for c in data["coeffs"]]
        )
    except (KeyError, TypeError) as e:
        raise ValidationError(f"Malformed polynomial {data!r}") from e


def parse_polynomial(data: Dict[str, Any]) -> Polynomial:
    laurent = parse_laurent(data)
    if not laurent.is_polynomial():
        raise ValidationError(f"Negative powers in polynomial {data!r}")
    return laurent.to_polynomial()


def parse_rational_function(data: Dict[str, Any]) -> RationalFunction:
    try:
        return RationalFunction(
            parse_polynomial(data["numerator"]), parse_polynomial(data["denominator"])
        )
    except KeyError as e:
        raise ValidationError(f"Malformed rational function {data!r}") from e


def parse_upolynomial(data: Dict[str, Any]) -> UPolynomial:
    try:
        return UPolynomial([parse_rational_function(c) for c in data["u_coeffs"]])
    except KeyError as e:
        raise ValidationError(f"Malformed u-polynomial {data!r}") from e


def parse_coefficient(data: Any) -> Any:
    """Decode a coefficient by its shape."""
    if isinstance(data, dict):
        if "u_coeffs" in data:
            return parse_upolynomial(data)
        if "numerator" in data:
            return parse_rational_function(data)
        if "min_deg" in data:
            laurent = parse_laurent(data)
            return laurent.to_polynomial() if laurent.is_polynomial() else laurent
    return parse_fraction(data)


def parse_residue_condition(data: Dict[str, Any]) -> ResidueCondition:
    try:
        return ResidueCondition.model_validate(
            {
                "modulus": parse_int(data["modulus"]),
                "residues": [parse_int(r) for r in data["residues"]],
                "min_k": data.get("min_k"),
            }
        )
    except (KeyError, ValueError) as e:
        raise ValidationError(f"Malformed residue condition {data!r}") from e


def parse_decomposition(data: Dict[str, Any]) -> Decomposition:
    """Entries come back keyed by their text labels."""
    try:
        entries = [
            DecompositionEntry(
                key=e["label"],
                label=e["label"],
                coeff=parse_coefficient(e["coeff"]),
                valid=bool(e["valid"]),
            )
            for e in data["entries"]
        ]
        return Decomposition(
            group=data["group"],
            k=data.get("k"),
            graded=bool(data.get("graded", False)),
            basis=data.get("basis", "irreducible"),
            entries=entries,
        )
    except (KeyError, TypeError) as e:
        raise ValidationError(f"Malformed decomposition: {e}") from e


def _validated(model: Type[M], data: Any) -> M:
    try:
        return model.model_validate(data)
    except PydanticValidationError as e:
        raise ValidationError(f"Malformed {model.__name__}: {e}") from e


def parse_binomial_certificate(data: Dict[str, Any]) -> BinomialCertificate:
    return _validated(BinomialCertificate, data)


def parse_q_binomial_certificate(data: Dict[str, Any]) -> QBinomialCertificate:
    return _validated(QBinomialCertificate, data)


def parse_gcd_record(data: Dict[str, Any]) -> GcdRecord:
    return _validated(GcdRecord, data)


def parse_unimodality_result(data: Dict[str, Any]) -> UnimodalityResult:
    return _validated(UnimodalityResult, data)


def parse_dihedral_check(data: Dict[str, Any]) -> DihedralCheck:
    return _validated(DihedralCheck, data)


def parse_polynomiality_conditions(data: Dict[str, Any]) -> PolynomialityConditions:
    return _validated(PolynomialityConditions, data)


def parse_table_report(data: Dict[str, Any]) -> TableReport:
    return _validated(TableReport, data)


def parse_catalan(data: Any) -> Any:
    """Decode ``catalan`` output: a number with ``--at-one``, otherwise the q-payload."""
    if not isinstance(data, dict):
        return parse_fraction(data)
    try:
        return {
            "group": str(data["group"]),
            "k": parse_int(data["k"]),
            "dual": bool(data["dual"]),
            "value": parse_coefficient(data["value"]),
            "is_polynomial": bool(data["is_polynomial"]),
        }
    except KeyError as e:
        raise ValidationError(f"Malformed catalan result: missing {e}") from e


def parse_period_scan(data: Dict[str, Any]) -> PeriodScanResult:
    condition = data.get("condition")
    certificate = data.get("difference_certificate")
    return PeriodScanResult(
        status=data["status"],
        period=parse_int(data["period"]),
        condition=parse_residue_condition(condition) if condition else None,
        difference_certificate=parse_binomial_certificate(certificate) if certificate else None,
    )


def from_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ValidationError(f"Invalid JSON: {e}") from e
