"""
Certify command: residue conditions from a certified period.
"""

import typer

from ...core.certify import period_enumerate
from ...core.groups import catalan_polynomial
from ...utils.logging import get_logger
from ...utils.validators import validate_group_label, validate_positive
from ..output import command_errors, emit


def certify_cmd(
    group: str = typer.Option(..., "--group", help="Group label"),
    period: int = typer.Option(..., "--period", help="Candidate period L of Cat_k(W,1)"),
    modulus: int = typer.Option(..., "--modulus", help="Modulus H dividing L"),
    dual: bool = typer.Option(False, "--dual", help="Use Cat*_k(W,1)"),
):
    """
    Residues k mod L with Cat_k(W,1) in N, if the period L is certified.

    The period is certified when f(t+L) - f(t) has non-negative integer
    coefficients in the basis binom(t, i). Otherwise the result is
    indeterminate and exits with code 1.

    \b
    parkspace certify --group H3 --period 120 --modulus 10
    """
    logger = get_logger()
    with command_errors("certify"):
        data = validate_group_label(group)
        validate_positive("period", period)
        validate_positive("modulus", modulus)
        logger.info(f"Certifying period {period} for {data.label}")
        result = period_enumerate(catalan_polynomial(data, dual), period, modulus)

    text = result.condition.describe() if result.condition is not None else "indeterminate"
    emit(result, text)
    if result.status != "certified":
        raise typer.Exit(1)
