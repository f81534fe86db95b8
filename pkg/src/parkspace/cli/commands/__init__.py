"""
CLI commands for parkspace.

This module contains all CLI commands organized by functionality.
"""

from .catalan import catalan_cmd
from .certify import certify_cmd
from .characters import decompose_cmd, dihedral_cmd, mult_cmd
from .conditions import condition_cmd, verify_tables_cmd
from .schur import gcd_cmd, stirling_cmd, unimodality_cmd

__all__ = [
    "catalan_cmd",
    "certify_cmd",
    "condition_cmd",
    "decompose_cmd",
    "dihedral_cmd",
    "gcd_cmd",
    "mult_cmd",
    "stirling_cmd",
    "unimodality_cmd",
    "verify_tables_cmd",
]
