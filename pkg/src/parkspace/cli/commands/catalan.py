"""
Catalan command: q-Catalan numbers of a reflection group.
"""

from typing import Any, Dict

import typer

from ...core.groups import catalan_at_one, catalan_q, catalan_star_at_one, catalan_star_q
from ...utils.logging import get_logger
from ...utils.validators import validate_group_label, validate_positive
from ..output import command_errors, emit


def catalan_cmd(
    group: str = typer.Option(..., "--group", help="Group label: S<n>, G(m,p,n), C<m>, D<m>, G4..G37"),
    k: int = typer.Option(..., "--k", help="Positive integer k"),
    dual: bool = typer.Option(False, "--dual", help="Cat*_k instead of Cat_k"),
    at_one: bool = typer.Option(False, "--at-one", help="Evaluate at q = 1"),
):
    """
    Compute Cat_k(W,q) = prod [k+d_i-1]_q / [d_i]_q, or Cat*_k(W,q) with --dual.

    Examples:

    \b
    parkspace catalan --group S3 --k 4 --at-one
    parkspace catalan --group G23 --k 11 --dual
    """
    logger = get_logger()
    with command_errors("catalan"):
        data = validate_group_label(group)
        validate_positive("k", k)
        logger.info(f"{'Cat*' if dual else 'Cat'}_{k}({data.label})")

        if at_one:
            value = (catalan_star_at_one if dual else catalan_at_one)(data, k)
            result: Any = value.numerator if value.denominator == 1 else value
            emit(result, str(value))
            return

        value_q = (catalan_star_q if dual else catalan_q)(data, k)
        payload: Dict[str, Any] = {
            "group": data.label,
            "k": k,
            "dual": dual,
            "value": value_q,
            "is_polynomial": value_q.is_polynomial(),
        }
        emit(payload, str(value_q))
