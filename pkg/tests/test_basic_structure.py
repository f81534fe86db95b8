"""
Basic structure tests for parkspace.

This module tests configuration, validation, logging and package imports.
"""

import logging

import pytest

from src.parkspace.core.errors import ParkspaceError
from src.parkspace.core.models import GroupFamily
from src.parkspace.utils import config as config_module
from src.parkspace.utils import logging as logging_module
from src.parkspace.utils.config import (
    ComputeConfig,
    Config,
    LoggingConfig,
    VerifyLimits,
    create_default_config,
    load_config,
)
from src.parkspace.utils.logging import get_logger, setup_logging
from src.parkspace.utils.parallel import parallel_map, resolve_threads
from src.parkspace.utils.validators import (
    ValidationError,
    validate_choice,
    validate_group_label,
    validate_multipartition,
    validate_partition,
    validate_positive,
)


@pytest.fixture
def fresh_globals(monkeypatch):
    """Isolate the global config and logger instances."""
    monkeypatch.setattr(config_module, "_config", None)
    monkeypatch.setattr(logging_module, "_logger", None)
    for name in ("THREADS", "LOG_LEVEL", "LOG_FILE", "OUTPUT_MODE", "DEBUG"):
        monkeypatch.delenv(f"PARKSPACE_{name}", raising=False)


class TestConfiguration:
    """Test configuration functionality."""

    def test_default_config(self):
        """Test default configuration creation."""
        config = Config()

        assert config.project_name == "parkspace"
        assert config.logging.level == "WARNING"
        assert config.compute.threads == 1
        assert config.compute.scan_periods == 2
        assert config.compute.verify_limits.sym_max_n == 8
        assert config.output.mode == "json"

    def test_invalid_values(self):
        """Test that invalid values are rejected."""
        with pytest.raises(ValueError):
            LoggingConfig(level="LOUD")
        with pytest.raises(ValueError):
            ComputeConfig(threads=0)
        with pytest.raises(ValueError):
            Config(environment="staging")
        with pytest.raises(ValueError):
            VerifyLimits(dihedral_max_m=2)

    def test_save_and_load(self, tmp_path, fresh_globals):
        """Test YAML round trip through a file."""
        config = Config()
        config.compute.threads = 3
        config.output.mode = "text"
        path = tmp_path / "conf" / "parkspace.yaml"
        config.save_to_file(path)

        loaded = load_config(path)
        assert loaded.compute.threads == 3
        assert loaded.output.mode == "text"

    def test_create_default_config(self, tmp_path):
        path = tmp_path / "config.yaml"
        config = create_default_config(path)
        assert path.exists()
        assert config.project_name == "parkspace"

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            Config().load_from_file(tmp_path / "absent.yaml")

    def test_env_overrides(self, tmp_path, monkeypatch, fresh_globals):
        """Test PARKSPACE_* environment variables."""
        monkeypatch.setenv("PARKSPACE_THREADS", "4")
        monkeypatch.setenv("PARKSPACE_LOG_LEVEL", "debug")
        monkeypatch.setenv("PARKSPACE_OUTPUT_MODE", "TEXT")
        monkeypatch.setenv("PARKSPACE_DEBUG", "yes")

        config = load_config(tmp_path / "absent.yaml")
        assert config.compute.threads == 4
        assert config.logging.level == "DEBUG"
        assert config.output.mode == "text"
        assert config.debug

    def test_config_validation(self):
        """Test configuration validation."""
        assert Config().validate_config() == []

        config = Config()
        config.compute.verify_limits = VerifyLimits(imprimitive_max_m=20)
        issues = config.validate_config()
        assert any("verify_limits" in issue for issue in issues)


class TestValidators:
    """Test validation functionality."""

    @pytest.mark.parametrize("label,family", [
        ("S4", GroupFamily.SYMMETRIC),
        ("G(4,2,3)", GroupFamily.IMPRIMITIVE),
        ("C5", GroupFamily.CYCLIC),
        ("D6", GroupFamily.DIHEDRAL),
        ("G31", GroupFamily.EXCEPTIONAL),
        ("e8", GroupFamily.EXCEPTIONAL),
    ])
    def test_group_labels(self, label, family):
        assert validate_group_label(label).family == family

    @pytest.mark.parametrize("label", ["", "  ", "X3", "G(2,2,2)", "G(4,3,2)", "G3", "S1"])
    def test_bad_group_labels(self, label):
        with pytest.raises(ValidationError):
            validate_group_label(label)

    def test_positive(self):
        assert validate_positive("k", 3) == 3
        with pytest.raises(ValidationError):
            validate_positive("k", 0)
        with pytest.raises(ValidationError):
            validate_positive("k", None)
        with pytest.raises(ValidationError):
            validate_positive("m", 1, minimum=2)

    def test_partitions(self):
        assert validate_partition("1,2,1").parts == (2, 1, 1)
        with pytest.raises(ValidationError):
            validate_partition("2,1", size=4)
        with pytest.raises(ValidationError):
            validate_partition("two")
        with pytest.raises(ValidationError):
            validate_partition("2,0")

    def test_multipartitions(self):
        assert validate_multipartition("2;-;1", m=3).size == 3
        with pytest.raises(ValidationError):
            validate_multipartition("1;-", m=3)

    def test_choice(self):
        assert validate_choice("table", "main", ["main", "zero-cases"]) == "main"
        with pytest.raises(ValidationError):
            validate_choice("table", "other", ["main"])

    def test_validation_error_hierarchy(self):
        assert issubclass(ValidationError, ParkspaceError)
        assert issubclass(ValidationError, ValueError)


class TestLogging:
    """Test logging functionality."""

    def test_logger_creation(self, fresh_globals):
        """Test logger creation."""
        logger = get_logger()
        assert logger is not None
        assert logger.name == "parkspace"
        assert logger is get_logger()

    def test_logs_go_to_stderr(self, capsys, fresh_globals):
        setup_logging(Config(logging=LoggingConfig(level="INFO")))
        get_logger().info("scan finished")
        get_logger().debug("hidden detail")

        captured = capsys.readouterr()
        assert "scan finished" in captured.err
        assert "hidden detail" not in captured.err
        assert captured.out == ""

    def test_debug_mode(self, fresh_globals):
        setup_logging(Config(debug=True))
        assert get_logger().is_debug()
        assert get_logger().logger.level == logging.DEBUG

    def test_log_file(self, tmp_path, fresh_globals):
        log_file = tmp_path / "logs" / "parkspace.log"
        setup_logging(Config(logging=LoggingConfig(file_path=str(log_file))))
        get_logger().warning("table row differs")

        assert log_file.exists()
        assert "table row differs" in log_file.read_text(encoding="utf-8")


class TestParallel:
    """Test the thread-pool helper."""

    def test_order_is_kept(self):
        items = list(range(20))
        assert parallel_map(lambda x: x * x, items, threads=4) == [x * x for x in items]
        assert parallel_map(lambda x: x + 1, items, threads=1) == [x + 1 for x in items]

    def test_resolve_threads(self, fresh_globals):
        assert resolve_threads(3) == 3
        assert resolve_threads(0) == 1


class TestProjectStructure:
    """Test project structure and imports."""

    def test_core_imports(self):
        """Test core module imports."""
        from src.parkspace.core import certify, characters, conditions, dihedral, exact, groups
        from src.parkspace.core import models, numberfield, partitions, symfunc, tables

        for module in (certify, characters, conditions, dihedral, exact, groups):
            assert module is not None
        for module in (models, numberfield, partitions, symfunc, tables):
            assert module is not None

    def test_cli_imports(self):
        """Test CLI module imports."""
        from src.parkspace.cli import main
        from src.parkspace.cli.main import app, cli

        assert main is not None
        assert app is not None
        assert cli is not None

    def test_package_exports(self):
        import src.parkspace as parkspace

        assert parkspace.__version__ == "0.1.0"
        assert parkspace.group_data("S3").order == 6
