"""Command line interface.

Subcommands:

    solve      price one schedule and report it (text, csv or json)
    table      sweep a grid of contribution rates, or emit a published
               reference table
    curve      export plot-ready curve geometry as delimited data
    validate   check a scenario without solving it

A scenario is a flat JSON object; command line flags override file fields.
Recognised keys: family, a, b, p, q, points, c_real, vc_a, currency_label,
sweep.  Exactly one curve parameterisation may be present: (a, b), (p, q)
or points.  With only a family given, the curve defaults to unit scale
p = q = 1 and all money columns are in units of p.

Exit codes: 0 on success, 1 when the curve carries validity warnings,
2 on usage or domain errors.  Domain errors print a single line of the
form ``error[<code>]: message`` to stderr.
"""

import argparse
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

from .curves import CalibratedCurve, CurveSpec, Family, calibrate
from .errors import InfeasibleContributionError, ScenarioError, ScheduleDomainError
from .solver import (
    Schedule,
    ScheduleRequest,
    adjust_for_variable_cost,
    max_feasible_c,
    solve_schedule,
)
from .tables import (
    format_fixed,
    reference_table,
    render_csv,
    render_json,
    render_text,
    sweep,
)

_WARNING_TEXT = {
    "not-decreasing": "net average revenue is not positive and non-increasing"
    " over (0, q]",
}


@dataclass(frozen=True)
class Scenario:
    """Fully resolved inputs for one invocation."""

    spec: CurveSpec
    c_real: float = 0.0
    vc_a: float = 0.0
    currency_label: str = ""
    sweep: tuple[float, ...] | None = None
    scaled: bool = True  # False when the curve defaulted to p = q = 1


def load_scenario_data(path) -> dict:
    """Read a scenario file into a plain dict; unknown keys are ignored."""
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read scenario file: {exc}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ScenarioError(f"scenario file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ScenarioError("scenario file must hold a JSON object")
    return data


def build_scenario(args) -> Scenario:
    """Merge the scenario file (if any) with command line flags."""
    data = load_scenario_data(args.scenario) if args.scenario else {}
    for key in ("family", "p", "q", "c_real", "vc_a"):
        value = getattr(args, key, None)
        if value is not None:
            data[key] = value
    spec, scaled = _curve_spec_from(data)
    try:
        c_real = float(data.get("c_real", 0.0))
        vc_a = float(data.get("vc_a", 0.0))
    except (TypeError, ValueError):
        raise ScenarioError("c_real and vc_a must be numbers") from None
    raw_sweep = data.get("sweep")
    return Scenario(
        spec=spec,
        c_real=c_real,
        vc_a=vc_a,
        currency_label=str(data.get("currency_label", "")),
        sweep=_sweep_values_from(raw_sweep) if raw_sweep is not None else None,
        scaled=scaled,
    )


def _curve_spec_from(data: dict) -> tuple[CurveSpec, bool]:
    family = data.get("family")
    if family is None:
        raise ScenarioError("no curve family given (use --family or a scenario key)")
    try:
        family = Family(str(family))
    except ValueError:
        raise ScenarioError(f"unknown curve family {family!r}") from None
    if family is Family.POINTS:
        points = data.get("points")
        if points is None:
            raise ScenarioError("points family needs a points list in the scenario")
        try:
            pairs = tuple((float(f), float(v)) for f, v in points)
        except (TypeError, ValueError):
            raise ScenarioError("points must be [f, nar] pairs") from None
        return CurveSpec(family=family, points=pairs), True
    has_ab = data.get("a") is not None and data.get("b") is not None
    has_pq = data.get("p") is not None and data.get("q") is not None
    if has_ab and has_pq:
        raise ScenarioError("give the curve as (a, b) or as (p, q), not both")
    try:
        if has_ab:
            return CurveSpec(family=family, a=float(data["a"]), b=float(data["b"])), True
        if has_pq:
            return CurveSpec.from_pq(family, float(data["p"]), float(data["q"])), True
    except (TypeError, ValueError) as exc:
        if isinstance(exc, ScenarioError):
            raise
        raise ScenarioError("curve parameters must be numbers") from None
    if data.get("a") is not None or data.get("b") is not None:
        raise ScenarioError(f"{family.value} curve needs both a and b")
    if data.get("p") is not None or data.get("q") is not None:
        raise ScenarioError(f"{family.value} curve needs both p and q")
    return CurveSpec.from_pq(family, 1.0, 1.0), False


def _range_values(start: float, stop: float, step: float) -> tuple[float, ...]:
    span = stop - start
    if step == 0.0 or (span != 0.0 and (span > 0.0) != (step > 0.0)):
        raise ScenarioError("sweep step does not run from start to stop")
    if span == 0.0:
        return (start,)
    count = int(math.floor(span / step + 1e-9))
    return tuple(start + i * step for i in range(count + 1))


def _sweep_values_from(raw) -> tuple[float, ...]:
    if isinstance(raw, dict):
        try:
            start = float(raw["start"])
            stop = float(raw["stop"])
            step = float(raw["step"])
        except (KeyError, TypeError, ValueError):
            raise ScenarioError("sweep object needs numeric start, stop and step") from None
        if step <= 0.0:
            raise ScenarioError("sweep step must be positive")
        return _range_values(start, stop, step if stop >= start else -step)
    if isinstance(raw, (list, tuple)):
        try:
            return tuple(float(v) for v in raw)
        except (TypeError, ValueError):
            raise ScenarioError("sweep list must hold numbers") from None
    raise ScenarioError("sweep must be a list of rates or {start, stop, step}")


def parse_grid(text: str) -> tuple[float, ...]:
    """Parse --grid: start:stop:step (inclusive) or comma-separated rates."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ScenarioError("grid ranges look like start:stop:step")
        try:
            start, stop, step = (float(part) for part in parts)
        except ValueError:
            raise ScenarioError(f"cannot parse grid {text!r}") from None
        return _range_values(start, stop, step)
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise ScenarioError(f"cannot parse grid {text!r}") from None


def _emit(text: str, out) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# solve


def _solve_text(scenario: Scenario, curve: CalibratedCurve, s: Schedule) -> str:
    label = scenario.currency_label

    def money(value: float) -> str:
        return f"{label}{format_fixed(value, 2)}"

    lines = [
        f"family:            {curve.family.value}",
        f"p (value at q):    {money(curve.p)}",
        f"q (optimal units): {format_fixed(curve.q, 2)}",
        f"c_real:            {format_fixed(scenario.c_real, 3)}",
    ]
    if scenario.vc_a:
        lines.append(f"variable cost:     {money(scenario.vc_a)}")
        lines.append(f"c_effective:       {format_fixed(s.c_effective, 3)}")
    lines.extend(
        [
            f"c_max:             {format_fixed(max_feasible_c(curve), 3)}",
            f"x (covered):       {format_fixed(s.x, 3)}",
            f"f (units at t):    {format_fixed(s.f, 2)}",
            f"t (price):         {money(s.t)}",
            f"n (negotiation):   {format_fixed(s.n, 3)}",
        ]
    )
    if scenario.vc_a:
        lines.append(f"n adjusted:        {format_fixed(s.n_adjusted, 3)}")
    if s.at_feasibility_boundary:
        lines.append("note: c sits on the feasibility boundary; the schedule is"
                     " the tangent point")
    for code in curve.warnings:
        lines.append(f"warning[{code}]: {_WARNING_TEXT.get(code, code)}")
    return "\n".join(lines) + "\n"


def _solve_csv(s: Schedule, scenario: Scenario) -> str:
    header = "c_real,c_effective,x,f,t,n,n_adjusted"
    row = ",".join(
        [
            format_fixed(scenario.c_real, 3),
            format_fixed(s.c_effective, 3),
            format_fixed(s.x, 3),
            format_fixed(s.f, 2),
            format_fixed(s.t, 2),
            format_fixed(s.n, 3),
            format_fixed(s.n_adjusted, 3),
        ]
    )
    return header + "\n" + row + "\n"


def _solve_json(scenario: Scenario, curve: CalibratedCurve, s: Schedule) -> str:
    payload: dict = {"family": curve.family.value}
    spec = scenario.spec
    if spec.points is not None:
        payload["points"] = [list(pair) for pair in spec.points]
    else:
        payload["a"] = spec.a
        payload["b"] = spec.b
    payload["c_real"] = scenario.c_real
    payload["vc_a"] = scenario.vc_a
    if scenario.currency_label:
        payload["currency_label"] = scenario.currency_label
    payload["result"] = {
        "p": curve.p,
        "q": curve.q,
        "c_max": max_feasible_c(curve),
        "c_effective": s.c_effective,
        "x": s.x,
        "f": s.f,
        "t": s.t,
        "n": s.n,
        "n_adjusted": s.n_adjusted,
        "at_feasibility_boundary": s.at_feasibility_boundary,
        "warnings": list(curve.warnings),
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_solve(args) -> int:
    scenario = build_scenario(args)
    curve = calibrate(scenario.spec)
    schedule = solve_schedule(
        ScheduleRequest(curve=curve, c_real=scenario.c_real, vc_a=scenario.vc_a)
    )
    if args.format == "json":
        text = _solve_json(scenario, curve, schedule)
    elif args.format == "csv":
        text = _solve_csv(schedule, scenario)
    else:
        text = _solve_text(scenario, curve, schedule)
    _emit(text, args.out)
    return 1 if curve.warnings else 0


# ---------------------------------------------------------------------------
# table


def cmd_table(args) -> int:
    if not 0 <= args.round <= 10:
        raise ScenarioError("--round must lie between 0 and 10")
    warnings: tuple[str, ...] = ()
    if args.paper_table is not None:
        table = reference_table(args.paper_table)
    else:
        scenario = build_scenario(args)
        curve = calibrate(scenario.spec)
        warnings = curve.warnings
        values = parse_grid(args.grid) if args.grid else scenario.sweep
        if values is None:
            raise ScenarioError("nothing to sweep: give --grid, --paper-table"
                                " or a scenario sweep")
        extended = scenario.scaled or scenario.vc_a > 0.0
        table = sweep(
            curve,
            values,
            vc_a=scenario.vc_a,
            extended=extended,
            rounding=args.round,
        )
    renderer = {"csv": render_csv, "json": render_json, "text": render_text}
    _emit(renderer[args.format](table), args.out)
    if args.plot:
        from .figures import render_sweep_figure

        render_sweep_figure(table, args.plot)
    return 1 if warnings else 0


# ---------------------------------------------------------------------------
# curve


def _curve_rows(curve: CalibratedCurve, s: Schedule, samples: int):
    p, q, c = curve.p, curve.q, s.c_effective
    rows = []
    for i in range(1, samples + 1):
        f = q * i / samples
        rows.append((f, curve.nar(f), curve.nmr(f), c * p * q / f, 0))
    rows.append((s.f, curve.nar(s.f), curve.nmr(s.f), c * p * q / s.f, 1))
    return rows


def _curve_csv(rows) -> str:
    lines = ["f,nar,nmr,hyperbola,is_solution"]
    lines.extend(
        f"{f!r},{nar!r},{nmr!r},{hyp!r},{flag}" for f, nar, nmr, hyp, flag in rows
    )
    return "\n".join(lines) + "\n"


def _curve_text(rows) -> str:
    lines = [f"{'f':>14}  {'nar':>14}  {'nmr':>14}  {'hyperbola':>14}"]
    for f, nar, nmr, hyp, flag in rows:
        marker = "  <- schedule" if flag else ""
        lines.append(f"{f:>14.6g}  {nar:>14.6g}  {nmr:>14.6g}  {hyp:>14.6g}{marker}")
    return "\n".join(lines) + "\n"


def _curve_json(curve: CalibratedCurve, s: Schedule, rows) -> str:
    samples = [
        {"f": f, "nar": nar, "nmr": nmr, "hyperbola": hyp}
        for f, nar, nmr, hyp, flag in rows
        if not flag
    ]
    payload = {
        "family": curve.family.value,
        "p": curve.p,
        "q": curve.q,
        "c_effective": s.c_effective,
        "samples": samples,
        "solution": {"f": s.f, "t": s.t, "x": s.x},
    }
    return json.dumps(payload, indent=2) + "\n"


def cmd_curve(args) -> int:
    if args.samples < 2:
        raise ScenarioError("--samples must be at least 2")
    scenario = build_scenario(args)
    curve = calibrate(scenario.spec)
    schedule = solve_schedule(
        ScheduleRequest(curve=curve, c_real=scenario.c_real, vc_a=scenario.vc_a)
    )
    rows = _curve_rows(curve, schedule, args.samples)
    if args.format == "json":
        text = _curve_json(curve, schedule, rows)
    elif args.format == "csv":
        text = _curve_csv(rows)
    else:
        text = _curve_text(rows)
    _emit(text, args.out)
    if args.plot:
        from .figures import render_curve_figure

        render_curve_figure(curve, schedule, args.plot, samples=max(args.samples, 64))
    return 1 if curve.warnings else 0


# ---------------------------------------------------------------------------
# validate


def cmd_validate(args) -> int:
    scenario = build_scenario(args)
    curve = calibrate(scenario.spec)
    status = 0
    lines = [
        f"ok: {curve.family.value} curve calibrates to p = {curve.p!r},"
        f" q = {curve.q!r}",
    ]
    c_max = max_feasible_c(curve)
    lines.append(f"ok: feasible contribution rates span [0, {c_max!r}]")
    for code in curve.warnings:
        lines.append(f"warning[{code}]: {_WARNING_TEXT.get(code, code)}")
        status = 1
    if scenario.c_real or scenario.vc_a:
        c_eff = adjust_for_variable_cost(scenario.c_real, curve.p, scenario.vc_a)
        if c_eff > c_max + 1e-9:
            raise InfeasibleContributionError(
                f"c_effective = {c_eff:.6g} exceeds the maximum {c_max:.6g}"
            )
        lines.append(f"ok: c_effective = {c_eff!r} is feasible")
    sys.stdout.write("\n".join(lines) + "\n")
    return status


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tpsched",
        description="Cost-plus transfer price schedules with a negotiated"
        " remainder.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--scenario", metavar="FILE", help="JSON scenario file")
        p.add_argument(
            "--family",
            choices=[family.value for family in Family],
            help="curve shape",
        )
        p.add_argument("--p", type=float, help="unit value at the optimum")
        p.add_argument("--q", type=float, help="optimal transfer volume")
        p.add_argument(
            "--c-real",
            type=float,
            dest="c_real",
            help="target contribution rate as a share of p",
        )
        p.add_argument(
            "--vc-a",
            type=float,
            dest="vc_a",
            help="seller variable cost per unit",
        )
        p.add_argument(
            "--format", choices=("text", "csv", "json"), default="text",
            help="report format (default text)",
        )
        p.add_argument(
            "--out", metavar="FILE", help="write the report here instead of stdout"
        )

    solve = sub.add_parser("solve", help="price one schedule")
    add_common(solve)
    solve.set_defaults(func=cmd_solve)

    table = sub.add_parser("table", help="sweep a grid of contribution rates")
    add_common(table)
    table.add_argument(
        "--grid", help="start:stop:step (inclusive) or comma-separated rates"
    )
    table.add_argument(
        "--paper-table",
        type=int,
        choices=(1, 3, 4),
        dest="paper_table",
        help="emit a published reference table instead of sweeping",
    )
    table.add_argument(
        "--round", type=int, default=3, help="decimal places for rendered cells"
    )
    table.add_argument(
        "--plot", metavar="FILE", help="also draw the sweep to this image file"
    )
    table.set_defaults(func=cmd_table)

    curve = sub.add_parser("curve", help="export plot-ready curve geometry")
    add_common(curve)
    curve.add_argument(
        "--samples", type=int, default=256, help="sample count along (0, q]"
    )
    curve.add_argument(
        "--plot", metavar="FILE", help="also draw the geometry to this image file"
    )
    curve.set_defaults(func=cmd_curve)

    validate = sub.add_parser("validate", help="check a scenario without solving")
    add_common(validate)
    validate.set_defaults(func=cmd_validate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ScheduleDomainError as exc:
        sys.stderr.write(f"error[{exc.code}]: {exc}\n")
        return 2


def entry() -> None:
    raise SystemExit(main())
