"""
Validation utilities for parkspace.

Every command-line argument passes through one of these functions before
any computation starts; failures are logged and raised as ValidationError.
"""

from typing import Iterable, List, Optional

from ..core.errors import DomainError, ParkspaceError
from ..core.groups import group_data
from ..core.models import ReflectionGroupData
from ..core.partitions import MultiPartition, Partition
from .logging import log_validation_error


class ValidationError(ParkspaceError, ValueError):
    """Malformed user input."""
    pass


def validate_group_label(label: str) -> ReflectionGroupData:
    """Resolve a group label such as ``S4``, ``G(4,2,3)``, ``D6`` or ``G23``."""
    if not label or not label.strip():
        log_validation_error("group", label, "Group label cannot be empty")
        raise ValidationError("Group label cannot be empty")
    try:
        return group_data(label)
    except DomainError as e:
        log_validation_error("group", label, str(e))
        raise ValidationError(str(e)) from e


def validate_positive(name: str, value: Optional[int], minimum: int = 1) -> int:
    """An integer at least ``minimum``."""
    if value is None:
        log_validation_error(name, str(value), "Value is required")
        raise ValidationError(f"--{name} is required")
    if value < minimum:
        log_validation_error(name, str(value), f"Must be >= {minimum}")
        raise ValidationError(f"--{name} must be >= {minimum}, got {value}")
    return value


def validate_partition(text: str, size: Optional[int] = None) -> Partition:
    """Parse ``"3,1,1"``; with ``size`` the partition must have that size."""
    try:
        partition = Partition.parse(text)
    except DomainError as e:
        log_validation_error("partition", text, str(e))
        raise ValidationError(str(e)) from e
    if size is not None and partition.size != size:
        message = f"Partition {partition} has size {partition.size}, expected {size}"
        log_validation_error("partition", text, message)
        raise ValidationError(message)
    return partition


def validate_multipartition(text: str, m: Optional[int] = None) -> MultiPartition:
    """Parse ``"2,1;-;1"``; with ``m`` the tuple must have m components."""
    try:
        multipartition = MultiPartition.parse(text)
    except DomainError as e:
        log_validation_error("multipartition", text, str(e))
        raise ValidationError(str(e)) from e
    if m is not None and multipartition.m != m:
        message = f"Expected {m} components, got {multipartition.m}"
        log_validation_error("multipartition", text, message)
        raise ValidationError(message)
    return multipartition


def validate_choice(name: str, value: str, choices: Iterable[str]) -> str:
    options: List[str] = list(choices)
    if value not in options:
        log_validation_error(name, value, f"Must be one of {options}")
        raise ValidationError(f"--{name} must be one of {options}, got {value!r}")
    return value
