"""
Logging for parkspace.

Everything is logged to stderr (stdout carries command results), optionally
mirrored into a rotating log file. The helpers at the bottom name the events
the library reports: residue scans, table rows and certificates.
"""

import logging
import logging.handlers
import sys
from pathlib import Path
from typing import Any, Optional

from .config import Config, get_config

DETAILED_FORMAT = "%(asctime)s %(levelname)s [%(name)s] %(filename)s:%(lineno)d %(message)s"


class ColoredFormatter(logging.Formatter):
    """Formatter that colours the level name with ANSI escapes."""

    COLORS = {
        "DEBUG": "\033[36m",
        "INFO": "\033[32m",
        "WARNING": "\033[33m",
        "ERROR": "\033[31m",
        "CRITICAL": "\033[35m",
    }
    RESET = "\033[0m"

    def format(self, record: logging.LogRecord) -> str:
        level_name = record.levelname
        color = self.COLORS.get(level_name)
        if color:
            record.levelname = f"{color}{level_name}{self.RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = level_name


def _resolve_level(config: Config) -> int:
    if config.debug:
        return logging.DEBUG
    return logging.getLevelName(config.logging.level.upper())


def _console_handler(config: Config, level: int) -> logging.Handler:
    handler = logging.StreamHandler(sys.stderr)
    handler.setLevel(level)
    handler.setFormatter(ColoredFormatter(DETAILED_FORMAT if config.debug else config.logging.format))
    return handler


def _file_handler(config: Config, level: int) -> logging.Handler:
    path = Path(config.logging.file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    handler = logging.handlers.RotatingFileHandler(
        path,
        maxBytes=config.logging.max_file_size,
        backupCount=config.logging.backup_count,
        encoding="utf-8",
    )
    handler.setLevel(level)
    handler.setFormatter(logging.Formatter(DETAILED_FORMAT))
    return handler


class ParkspaceLogger:
    """The ``parkspace`` logger, configured from a :class:`Config`."""

    def __init__(self, name: str = "parkspace", config: Optional[Config] = None):
        self.name = name
        self.logger = logging.getLogger(name)
        self.configure(config or get_config())

    def configure(self, config: Config) -> None:
        """Replace the handlers according to ``config``."""
        level = _resolve_level(config)
        self.logger.handlers.clear()
        self.logger.setLevel(level)
        self.logger.addHandler(_console_handler(config, level))
        if config.logging.file_path:
            self.logger.addHandler(_file_handler(config, level))
        self.logger.propagate = False

    def is_debug(self) -> bool:
        return self.logger.isEnabledFor(logging.DEBUG)

    def debug(self, message: str, **kwargs: Any) -> None:
        self.logger.debug(message, **kwargs)

    def info(self, message: str, **kwargs: Any) -> None:
        self.logger.info(message, **kwargs)

    def warning(self, message: str, **kwargs: Any) -> None:
        self.logger.warning(message, **kwargs)

    def error(self, message: str, **kwargs: Any) -> None:
        self.logger.error(message, **kwargs)

    def critical(self, message: str, **kwargs: Any) -> None:
        self.logger.critical(message, **kwargs)

    def exception(self, message: str, **kwargs: Any) -> None:
        """Error with the current traceback attached."""
        self.logger.exception(message, **kwargs)


_logger: Optional[ParkspaceLogger] = None


def get_logger(name: str = "parkspace") -> ParkspaceLogger:
    """The shared logger, created from the global config on first use."""
    global _logger
    if _logger is None:
        _logger = ParkspaceLogger(name)
    return _logger


def setup_logging(config: Optional[Config] = None) -> None:
    """Install ``config`` as the global configuration and rebuild the logger from it."""
    from .config import set_config

    config = config or get_config()
    set_config(config)

    global _logger
    _logger = ParkspaceLogger(config=config)


def log_performance(operation: str, duration: float) -> None:
    get_logger().info(f"{operation} took {duration:.2f}s")


def log_error_with_context(error: Exception, context: str = "") -> None:
    where = f" in {context}" if context else ""
    get_logger().error(f"{type(error).__name__}{where}: {error}")


def log_validation_error(field: str, value: str, error: str) -> None:
    get_logger().warning(f"Rejected {field}={value!r}: {error}")


def log_scan_stats(group: str, modulus: int, residues: int) -> None:
    """One residue scan finished."""
    get_logger().info(f"{group}: {residues} admissible residues mod {modulus}")


def log_table_check(table: str, row: str, ok: bool) -> None:
    """One reproduced table row; mismatches are warnings."""
    if ok:
        get_logger().debug(f"[{table}] {row} reproduced")
    else:
        get_logger().warning(f"[{table}] {row} does not match the reference value")


def log_certificate(kind: str, verdict: bool) -> None:
    get_logger().debug(f"{kind} certificate: {'holds' if verdict else 'fails'}")


def log_config_loaded(config_path: str) -> None:
    get_logger().info(f"Using configuration {config_path}")


def log_startup() -> None:
    get_logger().debug("parkspace session start")


def log_shutdown() -> None:
    get_logger().debug("parkspace session end")
