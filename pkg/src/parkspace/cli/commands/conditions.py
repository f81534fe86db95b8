"""
Condition commands: congruence conditions on k and table reproduction.
"""

from enum import Enum
from typing import List, Optional

import typer

from ...core.conditions import integrality_condition, main_condition, q_polynomiality_condition
from ...core.tables import TABLES, verify_tables
from ...utils.config import get_config
from ...utils.logging import get_logger
from ...utils.validators import validate_choice, validate_group_label
from ..output import command_errors, emit


class ConditionKind(str, Enum):
    both = "both"
    cat = "cat"
    integrality = "integrality"
    main = "main"


def condition_cmd(
    group: str = typer.Option(..., "--group", help="Group label"),
    kind: ConditionKind = typer.Option(ConditionKind.both, "--kind", help="Which condition"),
    dual: bool = typer.Option(False, "--dual", help="Use Cat* (for --kind cat and integrality)"),
    ungraded: bool = typer.Option(False, "--ungraded", help="Ungraded character condition (dihedral)"),
):
    """
    Residue condition on k.

    \b
    both        Cat_k and Cat*_k both polynomials in q (the default)
    cat         Cat_k polynomial in q; Cat*_k with --dual
    integrality Cat_k(W,1) an integer; Cat*_k(W,1) with --dual
    main        the reference condition of the group
    """
    logger = get_logger()
    with command_errors("condition"):
        data = validate_group_label(group)
        logger.info(f"Condition {kind.value} for {data.label}")

        if kind == ConditionKind.main:
            result = main_condition(data, ungraded=ungraded)
        elif kind == ConditionKind.integrality:
            result = integrality_condition(data, dual=dual)
        else:
            conditions = q_polynomiality_condition(data, threads=get_config().compute.threads)
            if kind == ConditionKind.both:
                result = conditions.both
            else:
                result = conditions.cat_star if dual else conditions.cat
        emit(result, result.describe())


def verify_tables_cmd(
    table: Optional[List[str]] = typer.Option(None, "--table", help=f"Restrict to tables: {', '.join(TABLES)}"),
):
    """
    Recompute the congruence tables and compare with the reference values.

    Exits with code 0 iff every row is reproduced.
    """
    with command_errors("verify-tables"):
        for name in table or []:
            validate_choice("table", name, TABLES)
        report = verify_tables(tables=table or None, threads=get_config().compute.threads)

    lines = [
        f"{'✅' if row.ok else '❌'} [{row.table}] {row.group}: {row.computed}"
        + ("" if row.ok else f" (expected {row.expected})")
        for row in report.rows
    ]
    lines.append(f"{len(report.rows) - len(report.failures())}/{len(report.rows)} rows reproduced")
    emit(report, "\n".join(lines))
    if not report.ok:
        raise typer.Exit(1)
