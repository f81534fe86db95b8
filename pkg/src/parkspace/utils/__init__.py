"""
Utilities module for configuration, logging and parallel execution.

This module provides:
- Configuration management
- Logging setup and utilities
- A thread-pool map for scans
"""

from .config import Config, get_config
from .logging import get_logger, setup_logging

__all__ = [
    "Config",
    "get_config",
    "setup_logging",
    "get_logger",
]
