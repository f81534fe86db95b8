"""
Reproduction of the congruence tables.

- ``main``: for every group in range, k with both Cat_k and Cat*_k
  polynomials in q is exactly the reference condition
- ``cat-exceptions``: the two exceptional groups whose Cat condition alone
  differs from the reference one
- ``integrality`` / ``integrality-dual``: k with Cat_k(W,1) (resp.
  Cat*_k(W,1)) an integer, for every exceptional group
- ``zero-cases``: zero cases of Cat* outside the periodic Cat* set
"""

import time
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from ..utils.config import VerifyLimits, get_config
from ..utils.logging import get_logger, log_performance, log_table_check
from ..utils.parallel import parallel_map
from .conditions import integrality_condition, main_condition, q_polynomiality_condition, zero_case_report
from .errors import DomainError
from .groups import (
    all_exceptional_groups,
    cyclic_group,
    dihedral_group,
    imprimitive_group,
    symmetric_group,
)
from .models import ReflectionGroupData, ResidueCondition, TableReport, TableRow

TABLES = ("main", "cat-exceptions", "integrality", "integrality-dual", "zero-cases")


def _condition(*pieces: Tuple[int, Sequence[int]]) -> ResidueCondition:
    result = ResidueCondition.nothing()
    for modulus, residues in pieces:
        result = result.union(ResidueCondition(modulus=modulus, residues=list(residues)))
    return result


CAT_EXCEPTIONS: Dict[int, ResidueCondition] = {
    13: _condition((12, (1, 5))),
    15: _condition((12, (1,))),
}

INTEGRALITY_EXCEPTIONS: Dict[int, ResidueCondition] = {
    13: _condition((12, (1, 5))),
    15: _condition((12, (1,))),
    25: _condition((6, (1,)), (24, (16,))),
    33: _condition((6, (1,)), (54, (45, 51))),
    35: _condition((6, (1, 5)), (96, (28, 56, 88, 92))),
    36: _condition((6, (1, 5)), (162, (153,))),
}

DUAL_INTEGRALITY_EXCEPTIONS: Dict[int, ResidueCondition] = {
    25: _condition((6, (1,)), (24, (4,))),
    33: _condition((6, (1,)), (54, (9, 15))),
    35: _condition((6, (1, 5)), (96, (4, 8, 40, 68))),
    36: _condition((6, (1, 5)), (162, (9,))),
}

ZERO_CASES_OUTSIDE: Dict[int, Tuple[int, ...]] = {25: (4,), 33: (9, 15), 35: (4, 8), 36: (9,)}


def family_groups(limits: VerifyLimits) -> List[ReflectionGroupData]:
    """Groups of the infinite families covered by the given limits."""
    groups = [symmetric_group(n) for n in range(2, limits.sym_max_n + 1)]
    for m in range(2, limits.imprimitive_max_m + 1):
        for p in (d for d in range(1, m + 1) if m % d == 0):
            for n in range(2, limits.imprimitive_max_n + 1):
                if (m, p, n) != (2, 2, 2):
                    groups.append(imprimitive_group(m, p, n))
    groups += [cyclic_group(m) for m in range(2, limits.cyclic_max_m + 1)]
    groups += [dihedral_group(m) for m in range(3, limits.dihedral_max_m + 1)]
    return groups


def _row(table: str, group: str, expected: ResidueCondition, computed: ResidueCondition) -> TableRow:
    ok = expected.equivalent(computed)
    log_table_check(table, group, ok)
    return TableRow(
        table=table,
        group=group,
        expected=expected.canonical().describe(),
        computed=computed.canonical().describe(),
        ok=ok,
    )


def _index(group: ReflectionGroupData) -> int:
    return group.params[0]


def _main_rows(groups: Iterable[ReflectionGroupData], threads: Optional[int]) -> List[TableRow]:
    def check(group: ReflectionGroupData) -> List[TableRow]:
        conditions = q_polynomiality_condition(group, threads=1)
        expected = main_condition(group)
        rows = [_row("main", group.label, expected, conditions.both)]
        if group.family == "exceptional":
            rows.append(_row("main", f"{group.label} Cat*", expected, conditions.cat_star))
            if _index(group) not in CAT_EXCEPTIONS:
                rows.append(_row("main", f"{group.label} Cat", expected, conditions.cat))
        return rows

    return [row for rows in parallel_map(check, list(groups), threads) for row in rows]


def _cat_exception_rows() -> List[TableRow]:
    rows = []
    for group in all_exceptional_groups():
        if _index(group) in CAT_EXCEPTIONS:
            conditions = q_polynomiality_condition(group, threads=1)
            rows.append(
                _row("cat-exceptions", group.label, CAT_EXCEPTIONS[_index(group)], conditions.cat)
            )
    return rows


def _integrality_rows(dual: bool, threads: Optional[int]) -> List[TableRow]:
    table = "integrality-dual" if dual else "integrality"
    exceptions = DUAL_INTEGRALITY_EXCEPTIONS if dual else INTEGRALITY_EXCEPTIONS

    def check(group: ReflectionGroupData) -> TableRow:
        expected = exceptions.get(_index(group), main_condition(group))
        return _row(table, group.label, expected, integrality_condition(group, dual=dual))

    return parallel_map(check, all_exceptional_groups(), threads)


def _zero_case_rows() -> List[TableRow]:
    found: Dict[int, Tuple[int, ...]] = {}
    failing_cat = True
    for group in all_exceptional_groups():
        conditions = q_polynomiality_condition(group, threads=1)
        outside = zero_case_report(group, conditions)
        if outside:
            found[_index(group)] = tuple(outside)
            failing_cat = failing_cat and not any(conditions.cat.contains(k) for k in outside)

    def text(cases: Dict[int, Tuple[int, ...]]) -> str:
        return "; ".join(f"G{i}: {','.join(map(str, ks))}" for i, ks in sorted(cases.items()))

    return [
        TableRow(
            table="zero-cases",
            group="exceptional",
            expected=text(ZERO_CASES_OUTSIDE),
            computed=text(found),
            ok=found == ZERO_CASES_OUTSIDE,
        ),
        TableRow(
            table="zero-cases",
            group="exceptional Cat",
            expected="every zero case fails the Cat condition",
            computed="yes" if failing_cat else "no",
            ok=failing_cat,
        ),
    ]


def verify_tables(
    limits: Optional[VerifyLimits] = None,
    threads: Optional[int] = None,
    tables: Optional[Sequence[str]] = None,
) -> TableReport:
    """Recompute every table row and compare with the reference values."""
    start = time.perf_counter()
    limits = limits or get_config().compute.verify_limits
    selected = list(tables) if tables else list(TABLES)
    unknown = [t for t in selected if t not in TABLES]
    if unknown:
        raise DomainError(f"Unknown tables {unknown}; choose from {list(TABLES)}")

    rows: List[TableRow] = []
    if "main" in selected:
        rows += _main_rows(all_exceptional_groups() + family_groups(limits), threads)
    if "cat-exceptions" in selected:
        rows += _cat_exception_rows()
    if "integrality" in selected:
        rows += _integrality_rows(False, threads)
    if "integrality-dual" in selected:
        rows += _integrality_rows(True, threads)
    if "zero-cases" in selected:
        rows += _zero_case_rows()

    report = TableReport(rows=rows)
    log_performance("table verification", time.perf_counter() - start)
    if report.ok:
        get_logger().info(f"All {len(rows)} table rows reproduced")
    else:
        get_logger().warning(f"{len(report.failures())} of {len(rows)} table rows differ")
    return report
