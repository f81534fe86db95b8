"""
Tests for the canonical JSON encoding of exact values and results.
"""

import json
from fractions import Fraction

import pytest
from typer.testing import CliRunner

from src.parkspace.cli.main import app
from src.parkspace.core.certify import period_enumerate, q_binomial_basis
from src.parkspace.core.characters import sym_irr_decomposition
from src.parkspace.core.conditions import q_polynomiality_condition
from src.parkspace.core.dihedral import dihedral_condition_check
from src.parkspace.core.exact import LaurentPolynomial, Polynomial, RationalFunction, UPolynomial
from src.parkspace.core.groups import catalan_polynomial, catalan_q, group_data
from src.parkspace.core.models import ResidueCondition
from src.parkspace.core.partitions import MultiPartition, Partition
from src.parkspace.core.symfunc import gcd_record, unimodality_check
from src.parkspace.core.tables import verify_tables
from src.parkspace.utils.serialization import (
    from_json,
    parse_catalan,
    parse_coefficient,
    parse_decomposition,
    parse_dihedral_check,
    parse_fraction,
    parse_gcd_record,
    parse_int,
    parse_period_scan,
    parse_polynomiality_conditions,
    parse_q_binomial_certificate,
    parse_residue_condition,
    parse_table_report,
    parse_unimodality_result,
    to_json,
    to_jsonable,
)
from src.parkspace.utils.validators import ValidationError


class TestEncoding:
    """Test the shapes produced by to_jsonable."""

    def test_integers(self):
        assert to_jsonable(5) == 5
        assert to_jsonable(-(2 ** 52)) == -(2 ** 52)
        assert to_jsonable(2 ** 60) == str(2 ** 60)
        assert to_jsonable(True) is True

    def test_fraction(self):
        assert to_jsonable(Fraction(-3, 4)) == ["-3", "4"]
        assert to_jsonable(Fraction(6, 3)) == ["2", "1"]

    def test_polynomials(self):
        assert to_jsonable(Polynomial([1, 0, Fraction(1, 2)])) == {
            "min_deg": 0,
            "coeffs": [["1", "1"], ["0", "1"], ["1", "2"]],
        }
        assert to_jsonable(LaurentPolynomial(-2, [1]))["min_deg"] == -2

    def test_rational_function(self):
        value = to_jsonable(RationalFunction(Polynomial([1]), Polynomial([1, 1])))
        assert value["numerator"]["coeffs"] == [["1", "1"]]
        assert value["denominator"]["coeffs"] == [["1", "1"], ["1", "1"]]

    def test_upolynomial(self):
        value = to_jsonable(UPolynomial([1, 2]))
        assert len(value["u_coeffs"]) == 2
        assert value["u_coeffs"][1]["numerator"]["coeffs"] == [["2", "1"]]

    def test_residue_condition(self):
        assert to_jsonable(ResidueCondition(modulus=10, residues=[9, 1, 5])) == {
            "modulus": 10,
            "residues": [1, 5, 9],
        }
        floored = ResidueCondition(modulus=24, residues=[1, 5], min_k=11)
        assert to_jsonable(floored)["min_k"] == 11

    def test_labels_and_keys(self):
        assert to_jsonable(Partition([2, 1])) == "2,1"
        assert to_jsonable({(1, Partition([1])): 3}) == {"1|1": 3}
        assert to_jsonable({MultiPartition.parse("2;-"): Fraction(1, 2)}) == {"2;-": ["1", "2"]}

    def test_decomposition(self):
        value = to_jsonable(sym_irr_decomposition(3, 4))
        assert value["group"] == "S3"
        assert value["basis"] == "irreducible"
        assert value["representation_valid"] is True
        coeffs = {entry["label"]: entry["coeff"] for entry in value["entries"]}
        assert coeffs["3"] == ["5", "1"]

    def test_unknown_type(self):
        with pytest.raises(TypeError):
            to_jsonable(object())

    def test_to_json_is_valid_json(self):
        text = to_json(ResidueCondition(modulus=2, residues=[1]), indent=2)
        assert json.loads(text) == {"modulus": 2, "residues": [1]}


class TestParsing:
    """Test decoding back into exact values."""

    def test_parse_int(self):
        assert parse_int("123456789012345678901234567890") == 123456789012345678901234567890
        assert parse_int(7) == 7
        with pytest.raises(ValidationError):
            parse_int(True)
        with pytest.raises(ValidationError):
            parse_int("x")

    def test_parse_fraction(self):
        assert parse_fraction(["-3", "4"]) == Fraction(-3, 4)
        assert parse_fraction(5) == 5

    def test_parse_coefficient_shapes(self):
        assert parse_coefficient({"min_deg": 0, "coeffs": [["1", "1"], ["2", "1"]]}) == Polynomial([1, 2])
        laurent = parse_coefficient({"min_deg": -1, "coeffs": [["1", "1"]]})
        assert isinstance(laurent, LaurentPolynomial)
        assert parse_coefficient(["1", "3"]) == Fraction(1, 3)

    def test_parse_residue_condition(self):
        condition = parse_residue_condition({"modulus": "10", "residues": [1, 5, 9]})
        assert condition.contains(15)
        with pytest.raises(ValidationError):
            parse_residue_condition({"residues": [1]})

    def test_decomposition_from_json(self):
        decomposition = sym_irr_decomposition(3, 4)
        parsed = parse_decomposition(from_json(to_json(decomposition)))
        assert parsed.coefficient("3") == 5
        assert parsed.coefficient("2,1") == decomposition.coefficient(Partition([2, 1]))
        assert parsed.representation_valid

    def test_period_scan_from_json(self):
        result = period_enumerate(catalan_polynomial(group_data("H3")), 120, 10)
        parsed = parse_period_scan(from_json(to_json(result)))
        assert parsed.status == "certified"
        assert parsed.condition == result.condition

    def test_malformed(self):
        with pytest.raises(ValidationError):
            from_json("{")
        with pytest.raises(ValidationError):
            parse_decomposition({"group": "S3"})


class TestResultRoundTrip:
    """Test that every result model comes back equal from its JSON."""

    def test_gcd_record(self):
        record = gcd_record(4, 6)
        parsed = parse_gcd_record(from_json(to_json(record)))
        assert parsed == record
        assert isinstance(parsed.gcd_poly, Polynomial)
        assert parsed.matches

    def test_unimodality_result(self):
        result = unimodality_check(Partition([3, 1, 1]), 5)
        assert parse_unimodality_result(from_json(to_json(result))) == result

    @pytest.mark.parametrize("m, k", [(4, 3), (5, 2), (6, 7)])
    def test_dihedral_check(self, m, k):
        check = dihedral_condition_check(m, k)
        parsed = parse_dihedral_check(from_json(to_json(check)))
        assert parsed == check
        assert all(isinstance(c, Fraction) for c in parsed.multiplicities.values())

    def test_polynomiality_conditions(self):
        conditions = q_polynomiality_condition(group_data("G25"))
        assert parse_polynomiality_conditions(from_json(to_json(conditions))) == conditions

    def test_table_report(self):
        report = verify_tables(tables=["cat-exceptions"])
        parsed = parse_table_report(from_json(to_json(report)))
        assert parsed == report
        assert parsed.ok

    def test_catalan_payload(self):
        value = catalan_q(group_data("S3"), 4)
        payload = {"group": "S3", "k": 4, "dual": False, "value": value, "is_polynomial": True}
        parsed = parse_catalan(from_json(to_json(payload)))
        assert parsed["value"] == value
        assert parsed["k"] == 4

    def test_catalan_at_one(self):
        assert parse_catalan(from_json(to_json(Fraction(3, 2)))) == Fraction(3, 2)
        assert parse_catalan(from_json(to_json(5))) == 5

    def test_q_binomial_certificate(self):
        certificate = q_binomial_basis(UPolynomial([1, -1]), 2)
        parsed = parse_q_binomial_certificate(from_json(to_json(certificate)))
        assert parsed == certificate
        assert all(isinstance(c, RationalFunction) for c in parsed.coefficients)

    def test_model_dump_json_matches_canonical_form(self):
        record = gcd_record(3, 4)
        assert json.loads(record.model_dump_json()) == to_jsonable(record)

    def test_malformed_polynomial_field(self):
        data = to_jsonable(gcd_record(2, 2))
        data["gcd_poly"] = {"min_deg": -1, "coeffs": [["1", "1"]]}
        with pytest.raises(ValidationError):
            parse_gcd_record(data)

    def test_missing_field(self):
        with pytest.raises(ValidationError):
            parse_dihedral_check({"m": 4, "k": 3})


class TestCommandOutputRoundTrip:
    """Test that command output parses back into the library results."""

    def setup_method(self):
        self.runner = CliRunner()

    def _output(self, args):
        result = self.runner.invoke(app, args)
        assert result.exit_code == 0
        return from_json(result.stdout.strip().splitlines()[-1])

    def test_gcd_record(self):
        parsed = parse_gcd_record(self._output(["gcd", "--n", "4", "--k", "6", "--record"]))
        assert parsed == gcd_record(4, 6)

    def test_dihedral(self):
        parsed = parse_dihedral_check(self._output(["dihedral", "--m", "4", "--k", "3"]))
        assert parsed == dihedral_condition_check(4, 3)

    def test_unimodality(self):
        parsed = parse_unimodality_result(
            self._output(["unimodality", "--partition", "3,1,1", "--k", "5"])
        )
        assert parsed == unimodality_check(Partition([3, 1, 1]), 5)

    def test_catalan(self):
        parsed = parse_catalan(self._output(["catalan", "--group", "S3", "--k", "4"]))
        assert parsed["value"] == catalan_q(group_data("S3"), 4)
        assert parsed["is_polynomial"]

    def test_verify_tables(self):
        parsed = parse_table_report(self._output(["verify-tables", "--table", "cat-exceptions"]))
        assert parsed.ok
        assert parsed.rows
