"""
Test Typer integration and CLI functionality.

This module tests the Typer-based CLI of parkspace.
"""

import json

import pytest
from typer.testing import CliRunner

from src.parkspace.cli.main import app


def payload(result):
    """JSON printed on the last line of stdout."""
    return json.loads(result.stdout.strip().splitlines()[-1])


class TestTyperIntegration:
    """Test Typer CLI integration."""

    def setup_method(self):
        """Set up test environment."""
        self.runner = CliRunner()

    def test_app_help(self):
        """Test that the app shows help."""
        result = self.runner.invoke(app, ["--help"])
        assert result.exit_code == 0
        assert "parkspace" in result.output

    @pytest.mark.parametrize("command", [
        "catalan", "condition", "verify-tables", "gcd", "mult",
        "decompose", "dihedral", "unimodality", "stirling", "certify",
    ])
    def test_command_help(self, command):
        result = self.runner.invoke(app, [command, "--help"])
        assert result.exit_code == 0
        assert "--" in result.output

    def test_version_command(self):
        """Test version command."""
        result = self.runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert "parkspace v" in result.output

    def test_config_command(self):
        """Test config command."""
        result = self.runner.invoke(app, ["config"])
        assert result.exit_code == 0
        assert "Current Configuration" in result.output

    def test_validate_command(self):
        result = self.runner.invoke(app, ["validate"])
        assert result.exit_code == 0
        assert "Configuration is valid" in result.output

    def test_init_command(self, tmp_path):
        target = tmp_path / "config.yaml"
        result = self.runner.invoke(app, ["init", "-o", str(target)])
        assert result.exit_code == 0
        assert target.exists()

    def test_missing_config_file(self, tmp_path):
        result = self.runner.invoke(app, ["-c", str(tmp_path / "absent.yaml"), "version"])
        assert result.exit_code == 1


class TestCatalanCommands:
    """Test catalan, condition and certify."""

    def setup_method(self):
        self.runner = CliRunner()

    def test_catalan_at_one(self):
        result = self.runner.invoke(app, ["catalan", "--group", "S3", "--k", "4", "--at-one"])
        assert result.exit_code == 0
        assert payload(result) == 5

    def test_catalan_dual_at_one(self):
        result = self.runner.invoke(app, ["catalan", "--group", "S3", "--k", "4", "--dual", "--at-one"])
        assert result.exit_code == 0
        assert payload(result) == 1

    def test_catalan_q(self):
        result = self.runner.invoke(app, ["catalan", "--group", "S3", "--k", "4"])
        assert result.exit_code == 0
        data = payload(result)
        assert data["group"] == "S3"
        assert data["is_polynomial"] is True

    def test_text_mode(self):
        result = self.runner.invoke(app, ["--text", "catalan", "--group", "S3", "--k", "4", "--at-one"])
        assert result.exit_code == 0
        assert result.stdout.strip() == "5"

    def test_invalid_group(self):
        result = self.runner.invoke(app, ["catalan", "--group", "X9", "--k", "4"])
        assert result.exit_code == 1
        assert "Error" in result.output

    def test_invalid_k(self):
        result = self.runner.invoke(app, ["catalan", "--group", "S3", "--k", "0"])
        assert result.exit_code == 1

    def test_condition(self):
        result = self.runner.invoke(app, ["condition", "--group", "G23"])
        assert result.exit_code == 0
        assert payload(result) == {"modulus": 10, "residues": [1, 5, 9]}

    def test_condition_alias_integrality(self):
        result = self.runner.invoke(app, ["condition", "--group", "H3", "--kind", "integrality"])
        assert result.exit_code == 0
        assert payload(result) == {"modulus": 10, "residues": [1, 5, 9]}

    def test_certify(self):
        result = self.runner.invoke(
            app, ["certify", "--group", "H3", "--period", "120", "--modulus", "10"]
        )
        assert result.exit_code == 0
        data = payload(result)
        assert data["status"] == "certified"
        assert data["condition"] == {"modulus": 10, "residues": [1, 5, 9]}

    def test_certify_indeterminate(self):
        result = self.runner.invoke(app, ["certify", "--group", "S2", "--period", "1", "--modulus", "1"])
        assert result.exit_code == 1
        assert payload(result)["status"] == "indeterminate"

    def test_certify_bad_modulus(self):
        result = self.runner.invoke(app, ["certify", "--group", "H3", "--period", "120", "--modulus", "7"])
        assert result.exit_code == 1

    @pytest.mark.slow
    def test_verify_tables(self):
        result = self.runner.invoke(app, ["verify-tables", "--table", "cat-exceptions"])
        assert result.exit_code == 0
        assert payload(result)["ok"] is True

    def test_verify_tables_unknown(self):
        result = self.runner.invoke(app, ["verify-tables", "--table", "orbit-counts"])
        assert result.exit_code == 1


class TestCharacterCommands:
    """Test decompose, mult and dihedral."""

    def setup_method(self):
        self.runner = CliRunner()

    def test_decompose(self):
        result = self.runner.invoke(app, ["decompose", "--group", "S3", "--k", "4"])
        assert result.exit_code == 0
        data = payload(result)
        coeffs = {entry["label"]: entry["coeff"] for entry in data["entries"]}
        assert coeffs["3"] == ["5", "1"]
        assert data["representation_valid"] is True

    def test_decompose_perm(self):
        result = self.runner.invoke(app, ["decompose", "--group", "D4", "--k", "3", "--perm"])
        assert result.exit_code == 0
        data = payload(result)
        assert data["basis"] == "permutation"
        coeffs = {entry["label"]: entry["coeff"] for entry in data["entries"]}
        assert coeffs["eta_reg"] == ["0", "1"]

    def test_decompose_graded(self):
        result = self.runner.invoke(app, ["decompose", "--group", "G(2,1,2)", "--k", "3", "--q"])
        assert result.exit_code == 0
        assert payload(result)["representation_valid"] is True

    def test_decompose_subgroup(self):
        result = self.runner.invoke(app, ["decompose", "--group", "G(4,2,2)", "--k", "5"])
        assert result.exit_code == 0
        assert payload(result)["group"] == "G(4,2,2)"

    def test_decompose_exceptional(self):
        result = self.runner.invoke(app, ["decompose", "--group", "G4", "--k", "5"])
        assert result.exit_code == 1

    def test_mult(self):
        result = self.runner.invoke(app, ["mult", "--group", "G(2,1,2)", "--label", "2;-", "--k", "3"])
        assert result.exit_code == 0
        entries = payload(result)["entries"]
        assert len(entries) == 1
        assert entries[0]["coeff"] == ["3", "1"]

    def test_mult_hat(self):
        result = self.runner.invoke(app, ["mult", "--group", "D4", "--label", "xi_0", "--hat"])
        assert result.exit_code == 0
        assert "u_coeffs" in payload(result)["coeff"]

    def test_mult_unknown_label(self):
        result = self.runner.invoke(app, ["mult", "--group", "S3", "--label", "4", "--k", "4"])
        assert result.exit_code == 1

    def test_dihedral(self):
        result = self.runner.invoke(app, ["dihedral", "--m", "4", "--k", "3"])
        assert result.exit_code == 0
        data = payload(result)
        assert data["is_character"] is True
        assert data["is_perm_decomposable"] is True

    def test_dihedral_not_a_character(self):
        result = self.runner.invoke(app, ["dihedral", "--m", "5", "--k", "2"])
        assert result.exit_code == 0
        assert payload(result)["is_character"] is False

    def test_dihedral_closure(self):
        result = self.runner.invoke(app, ["dihedral", "--m", "4", "--closure"])
        assert result.exit_code == 0
        assert all(payload(result).values())


class TestSchurCommands:
    """Test gcd, unimodality and stirling."""

    def setup_method(self):
        self.runner = CliRunner()

    def test_gcd(self):
        result = self.runner.invoke(app, ["gcd", "--n", "2", "--k", "3"])
        assert result.exit_code == 0
        assert payload(result) == 3

    def test_gcd_record(self):
        result = self.runner.invoke(app, ["gcd", "--n", "3", "--k", "4", "--record"])
        assert result.exit_code == 0
        assert payload(result)["matches"] is True

    def test_unimodality(self):
        result = self.runner.invoke(app, ["unimodality", "--partition", "2", "--k", "3"])
        assert result.exit_code == 0
        assert payload(result)["coefficients"] == [1, 0, 1]

    def test_stirling(self):
        result = self.runner.invoke(app, ["stirling", "--n", "5"])
        assert result.exit_code == 0
        data = payload(result)
        assert data["holds"] is True
        assert data["stirling"] == [0, 24, 50, 35, 10, 1]

    def test_stirling_class(self):
        result = self.runner.invoke(app, ["stirling", "--n", "4", "--partition", "2,1,1"])
        assert result.exit_code == 0
        assert payload(result)["holds"] is True

    def test_stirling_class_not_applicable(self):
        result = self.runner.invoke(app, ["stirling", "--n", "4", "--partition", "2,2"])
        assert result.exit_code == 1
