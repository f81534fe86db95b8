"""
Commands on specialised Schur functions and Stirling numbers.
"""

from typing import Optional

import typer

from ...core.partitions import class_divisibility_check, stirling_divisibility_check, stirling_first
from ...core.symfunc import gcd_int_schur, gcd_poly_schur, gcd_record, unimodality_check
from ...utils.validators import validate_partition, validate_positive
from ..output import command_errors, emit


def gcd_cmd(
    n: int = typer.Option(..., "--n", help="Degree of the partitions"),
    k: int = typer.Option(..., "--k", help="Number of variables"),
    q: bool = typer.Option(False, "--q", help="gcd over Q[q] of the principal specialisations"),
    record: bool = typer.Option(False, "--record", help="Show computed and predicted gcds"),
):
    """gcd of s_lambda(1^k) (or of s_lambda(1,q,...,q^{k-1})) over all partitions of n."""
    with command_errors("gcd"):
        validate_positive("n", n)
        validate_positive("k", k)
        if record:
            result = gcd_record(n, k)
            emit(result, f"gcd={result.gcd_int}, q-gcd={result.gcd_poly}, matches={result.matches}")
        elif q:
            value = gcd_poly_schur(n, k)
            emit(value, str(value))
        else:
            gcd = gcd_int_schur(n, k)
            emit(gcd, str(gcd))


def unimodality_cmd(
    partition: str = typer.Option(..., "--partition", help="Partition, e.g. 3,1,1"),
    k: int = typer.Option(..., "--k", help="Number of variables, at least the length"),
):
    """Unimodality of the coefficients of s_lambda(1,...,q^{k-1}) / ([k]_q/[d]_q)."""
    with command_errors("unimodality"):
        lam = validate_partition(partition)
        validate_positive("k", k)
        result = unimodality_check(lam, k)
        emit(
            result,
            f"{result.coefficients}: even={result.even_ok} odd={result.odd_ok} whole={result.whole_ok}",
        )


def stirling_cmd(
    n: int = typer.Option(..., "--n", help="Size n >= 2"),
    partition: Optional[str] = typer.Option(None, "--partition", help="Check one class instead"),
):
    """binom(n,2) divides c(n,j) for n-j odd, or the size of a class of S_n."""
    with command_errors("stirling"):
        validate_positive("n", n, minimum=2)
        if partition is not None:
            lam = validate_partition(partition, size=n)
            holds = class_divisibility_check(lam)
            emit({"n": n, "partition": lam.to_text(), "holds": holds}, str(holds))
            return
        holds = stirling_divisibility_check(n)
        values = [stirling_first(n, j) for j in range(n + 1)]
        emit({"n": n, "stirling": values, "holds": holds}, f"{values}: {holds}")
