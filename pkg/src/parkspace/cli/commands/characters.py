"""
Character commands: multiplicities and decompositions of phi_k.
"""

from typing import Optional

import typer

from ...core.characters import (
    ShiftOrbit,
    cyclic_decomposition,
    g_m1n_decomposition,
    g_m1n_hat_multiplicity,
    g_m1n_perm_decomposition,
    gmpn_decomposition,
    sym_irr_decomposition,
    sym_perm_decomposition,
)
from ...core.dihedral import (
    dihedral_closure_check,
    dihedral_condition_check,
    dihedral_decomposition,
    dihedral_hat_multiplicities,
    dihedral_perm_decomposition,
    dihedral_shifted_expansions,
)
from ...core.errors import NotApplicableError
from ...core.models import Decomposition, GroupFamily, ReflectionGroupData
from ...utils.config import get_config
from ...utils.logging import get_logger
from ...utils.validators import (
    ValidationError,
    validate_group_label,
    validate_multipartition,
    validate_partition,
    validate_positive,
)
from ..output import command_errors, emit


def build_decomposition(
    data: ReflectionGroupData, k: int, graded: bool, perm: bool, threads: Optional[int] = None
) -> Decomposition:
    """phi_k of the group in the irreducible (or permutation) basis."""
    family = GroupFamily(data.family)
    if family == GroupFamily.SYMMETRIC:
        n = data.params[0]
        return sym_perm_decomposition(n, k) if perm else sym_irr_decomposition(n, k, graded)
    if family == GroupFamily.CYCLIC:
        m = data.params[0]
        return g_m1n_perm_decomposition(m, 1, k) if perm else cyclic_decomposition(m, k, graded)
    if family == GroupFamily.DIHEDRAL:
        m = data.params[0]
        return dihedral_perm_decomposition(m, k) if perm else dihedral_decomposition(m, k, graded)
    if family == GroupFamily.IMPRIMITIVE:
        m, p, n = data.params
        if p == 1:
            if perm:
                return g_m1n_perm_decomposition(m, n, k)
            return g_m1n_decomposition(m, n, k, graded, threads)
        if perm:
            raise NotApplicableError(f"No permutation basis for {data.label}")
        return gmpn_decomposition(m, p, n, k, graded, threads)
    raise NotApplicableError(f"Character tables of {data.label} are not available")


def _matches(data: ReflectionGroupData, key: object, label: str) -> bool:
    family = GroupFamily(data.family)
    if family == GroupFamily.SYMMETRIC:
        return key == validate_partition(label, size=data.params[0])
    if family in (GroupFamily.CYCLIC, GroupFamily.DIHEDRAL):
        return False
    multipartition = validate_multipartition(label, m=data.params[0])
    if isinstance(key, ShiftOrbit):
        return multipartition in key
    return key == multipartition


def _format(decomposition: Decomposition) -> str:
    lines = [f"{decomposition.group} k={decomposition.k} ({decomposition.basis})"]
    for entry in decomposition.entries:
        lines.append(f"  {entry.label}: {entry.coeff}{'' if entry.valid else '  ✗'}")
    lines.append(f"representation valid: {decomposition.representation_valid}")
    return "\n".join(lines)


def decompose_cmd(
    group: str = typer.Option(..., "--group", help="S<n>, G(m,p,n), C<m> or D<m>"),
    k: int = typer.Option(..., "--k", help="Positive integer k"),
    q: bool = typer.Option(False, "--q", help="Graded multiplicities"),
    perm: bool = typer.Option(False, "--perm", help="Permutation character basis"),
):
    """
    Decompose phi_k into irreducible (or permutation) characters.

    Examples:

    \b
    parkspace decompose --group S3 --k 4
    parkspace decompose --group "G(2,1,2)" --k 3 --q
    parkspace decompose --group D4 --k 3 --perm
    """
    logger = get_logger()
    with command_errors("decompose"):
        data = validate_group_label(group)
        validate_positive("k", k)
        logger.info(f"Decomposing phi_{k} of {data.label}")
        decomposition = build_decomposition(data, k, q, perm, get_config().compute.threads)
        emit(decomposition, _format(decomposition))


def mult_cmd(
    group: str = typer.Option(..., "--group", help="S<n>, G(m,p,n), C<m> or D<m>"),
    label: str = typer.Option(..., "--label", help="Partition '2,1', tuple '2;-;1', or chi_r / xi_i"),
    k: Optional[int] = typer.Option(None, "--k", help="Positive integer k; omit with --hat"),
    q: bool = typer.Option(False, "--q", help="Graded multiplicity"),
    hat: bool = typer.Option(False, "--hat", help="Two-variable multiplicity as a polynomial in u"),
):
    """Multiplicity of one irreducible character in phi_k."""
    with command_errors("mult"):
        data = validate_group_label(group)
        family = GroupFamily(data.family)

        if hat:
            if family == GroupFamily.DIHEDRAL:
                values = dihedral_hat_multiplicities(data.params[0])
                if label not in values:
                    raise ValidationError(f"Unknown character {label!r}; choose from {list(values)}")
                value = values[label]
            elif family == GroupFamily.IMPRIMITIVE and data.params[1] == 1:
                multipartition = validate_multipartition(label, m=data.params[0])
                if multipartition.size != data.params[2]:
                    raise ValidationError(f"{label!r} is not a multipartition of {data.params[2]}")
                value = g_m1n_hat_multiplicity(multipartition)
            else:
                raise NotApplicableError(f"Two-variable multiplicities need D<m> or G(m,1,n), got {data.label}")
            emit({"group": data.label, "label": label, "coeff": value}, str(value))
            return

        validate_positive("k", k)
        decomposition = build_decomposition(data, k, q, perm=False)
        selected = [
            entry
            for entry in decomposition.entries
            if entry.label == label or _matches(data, entry.key, label)
        ]
        if not selected:
            raise ValidationError(f"No character {label!r} for {data.label}")
        result = decomposition.model_copy(update={"entries": selected[:1]})
        emit(result, _format(result))


def dihedral_cmd(
    m: int = typer.Option(..., "--m", help="Dihedral parameter, the group has order 2m"),
    k: Optional[int] = typer.Option(None, "--k", help="Check phi_k for this k"),
    closure: bool = typer.Option(False, "--closure", help="Check the reconstruction identity on every class"),
    expansions: bool = typer.Option(False, "--expansions", help="Check the shifted q-binomial expansions"),
):
    """Character and permutation-character checks for the dihedral group of order 2m."""
    with command_errors("dihedral"):
        validate_positive("m", m, minimum=2)
        if closure:
            result = dihedral_closure_check(m)
            emit(result, ", ".join(f"{c}: {ok}" for c, ok in result.items()))
            if not all(result.values()):
                raise typer.Exit(1)
            return
        if expansions:
            rows = {e.name: e.matches for e in dihedral_shifted_expansions(m)}
            emit(rows, "\n".join(f"{name}: {ok}" for name, ok in rows.items()))
            if not all(rows.values()):
                raise typer.Exit(1)
            return
        validate_positive("k", k)
        check = dihedral_condition_check(m, k)
        emit(check, f"character={check.is_character} permutation={check.is_perm_decomposable}")
