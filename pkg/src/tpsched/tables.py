"""Contribution-rate sweep tables and fixed-decimal rendering.

Rows are kept at full precision and only rounded when rendered.  Rates the
curve cannot support become infeasible-marked rows rather than aborting
the sweep.
"""

import json
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .curves import CalibratedCurve, Family, unit_curve
from .errors import (
    InfeasibleContributionError,
    NegativeEffectiveContributionError,
    ScenarioError,
)
from .solver import ScheduleRequest, solve_schedule

PLAIN_COLUMNS = ("c", "x", "n")
EXTENDED_COLUMNS = ("c", "x", "t", "f", "n", "n_adjusted")
INFEASIBLE = "infeasible"


def format_fixed(value: float, places: int) -> str:
    """Fixed-point rendering with halves rounded away from zero.

    Bankers' rounding would take 0.0025 to 0.002; published schedule
    tables round it up, so round() is not usable here.
    """
    exponent = Decimal(1).scaleb(-places)
    quantized = Decimal(repr(float(value))).quantize(exponent, rounding=ROUND_HALF_UP)
    if quantized == 0:
        quantized = abs(quantized)  # never render -0.000
    return str(quantized)


@dataclass(frozen=True)
class SweepRow:
    """One sweep entry at full precision; value fields are None when the
    rate is infeasible on the curve."""

    c: float
    feasible: bool
    x: float | None = None
    t: float | None = None
    f: float | None = None
    n: float | None = None
    n_adjusted: float | None = None
    at_feasibility_boundary: bool = False


@dataclass(frozen=True)
class SweepTable:
    """Rows over descending c plus the rendering conventions for them."""

    family: Family
    rows: tuple[SweepRow, ...]
    extended: bool = False
    c_decimals: int = 2
    x_decimals: int = 3
    value_decimals: int = 3

    @property
    def columns(self) -> tuple[str, ...]:
        return EXTENDED_COLUMNS if self.extended else PLAIN_COLUMNS


def sweep(
    curve: CalibratedCurve,
    c_values,
    *,
    vc_a: float = 0.0,
    extended: bool = False,
    rounding: int = 3,
) -> SweepTable:
    """Solve a schedule for every rate in c_values, highest first."""
    rows = []
    for c in sorted((float(c) for c in c_values), reverse=True):
        try:
            solved = solve_schedule(ScheduleRequest(curve=curve, c_real=c, vc_a=vc_a))
        except (InfeasibleContributionError, NegativeEffectiveContributionError):
            rows.append(SweepRow(c=c, feasible=False))
            continue
        rows.append(
            SweepRow(
                c=c,
                feasible=True,
                x=solved.x,
                t=solved.t,
                f=solved.f,
                n=solved.n,
                n_adjusted=solved.n_adjusted,
                at_feasibility_boundary=solved.at_feasibility_boundary,
            )
        )
    return SweepTable(
        family=curve.family,
        rows=tuple(rows),
        extended=extended,
        c_decimals=rounding,
        x_decimals=rounding,
        value_decimals=rounding,
    )


# Canonical rate grids of the published reference tables, with the decimal
# places each table prints for x.  n is printed at 3 places throughout.
_REFERENCE_TABLES = {
    1: (
        Family.LINEAR,
        (0.50, 0.48, 0.46, 0.42, 0.38, 0.32, 0.26, 0.18, 0.09, 0.00),
        2,
    ),
    3: (
        Family.QUADRATIC,
        (0.57, 0.55, 0.50, 0.45, 0.40, 0.35, 0.30, 0.25, 0.20, 0.15, 0.10, 0.05, 0.00),
        3,
    ),
    4: (
        Family.EXPONENTIAL,
        (0.43, 0.42, 0.40, 0.38, 0.36, 0.34, 0.32, 0.30, 0.28, 0.26, 0.24, 0.22,
         0.20, 0.18, 0.16, 0.14, 0.12, 0.10, 0.08, 0.06, 0.04, 0.02, 0.00),
        3,
    ),
}


def reference_table(which: int) -> SweepTable:
    """One of the published reference schedules on a unit curve.

    1 is the linear table, 3 the quadratic and 4 the exponential, each over
    its canonical set of contribution rates and rounding conventions.
    """
    try:
        family, rates, x_decimals = _REFERENCE_TABLES[which]
    except KeyError:
        raise ScenarioError(f"no reference table {which}; choose 1, 3 or 4") from None
    base = sweep(unit_curve(family), rates)
    return SweepTable(
        family=family,
        rows=base.rows,
        extended=False,
        c_decimals=2,
        x_decimals=x_decimals,
        value_decimals=3,
    )


def _row_cells(table: SweepTable, row: SweepRow) -> list[str]:
    cells = [format_fixed(row.c, table.c_decimals)]
    if not row.feasible:
        return cells + [INFEASIBLE] * (len(table.columns) - 1)
    cells.append(format_fixed(row.x, table.x_decimals))
    if table.extended:
        cells.append(format_fixed(row.t, table.value_decimals))
        cells.append(format_fixed(row.f, table.value_decimals))
    cells.append(format_fixed(row.n, table.value_decimals))
    if table.extended:
        cells.append(format_fixed(row.n_adjusted, table.value_decimals))
    return cells


def render_csv(table: SweepTable) -> str:
    """Delimited rendering: one header line, one line per rate."""
    lines = [",".join(table.columns)]
    lines.extend(",".join(_row_cells(table, row)) for row in table.rows)
    return "\n".join(lines) + "\n"


def render_text(table: SweepTable) -> str:
    """Right-aligned plain text rendering."""
    header = list(table.columns)
    body = [_row_cells(table, row) for row in table.rows]
    widths = [
        max(len(name), *(len(cells[i]) for cells in body)) if body else len(name)
        for i, name in enumerate(header)
    ]

    def line(cells):
        return "  ".join(cell.rjust(width) for cell, width in zip(cells, widths))

    return "\n".join([line(header)] + [line(cells) for cells in body]) + "\n"


def render_json(table: SweepTable) -> str:
    """Full-precision JSON rendering."""
    rows = []
    for row in table.rows:
        entry: dict = {"c": row.c, "feasible": row.feasible}
        if row.feasible:
            entry["x"] = row.x
            entry["n"] = row.n
            if table.extended:
                entry["t"] = row.t
                entry["f"] = row.f
                entry["n_adjusted"] = row.n_adjusted
            if row.at_feasibility_boundary:
                entry["at_feasibility_boundary"] = True
        rows.append(entry)
    payload = {
        "family": table.family.value,
        "columns": list(table.columns),
        "rows": rows,
    }
    return json.dumps(payload, indent=2) + "\n"
