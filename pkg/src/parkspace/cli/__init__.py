"""
CLI module for parkspace.

This module provides command-line access to:
- q-Catalan numbers and congruence conditions
- Character decompositions and multiplicities
- Certificates and table reproduction
"""

from .main import cli

__all__ = ["cli"]
