"""Command-line interface.

Exit codes: 0 success, 1 input/config error, 2 infeasible or degenerate
analysis (no fit possible, no staffing answer, horizon exceeded).
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .domain import annualize
from .errors import (
    ConfigError,
    DegenerateFit,
    DomainError,
    HorizonExceeded,
    Infeasible,
    InsufficientData,
    ParseError,
    PendencyError,
)
from .ingest import WindowSpec, load_dataset, validate_dataset
from .projection import Scenario, apply_disposal_floor, build_ramp, final_rate, project
from .report import FORMATS, PipelineConfig, court_rates, emit, run_pipeline
from .solver import SolverRequest, classify_sufficiency, judges_to_zero_rate, required_judges
from .trend import court_trend

INPUT_ERRORS = (ParseError, ConfigError, DomainError, FileNotFoundError, OSError)
ANALYSIS_ERRORS = (Infeasible, DegenerateFit, InsufficientData, HorizonExceeded)


def _add_data_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--data-dir", type=Path, help="directory holding snapshots.csv, strength.csv, overrides.json, windows.json")
    parser.add_argument("--snapshots", type=Path)
    parser.add_argument("--strength", type=Path)
    parser.add_argument("--overrides", type=Path)
    parser.add_argument("--windows", type=Path)


def _resolve_paths(args) -> dict[str, Path | None]:
    paths = {
        "snapshots": args.snapshots,
        "strength": args.strength,
        "overrides": args.overrides,
        "windows": args.windows,
    }
    if args.data_dir:
        defaults = {
            "snapshots": args.data_dir / "snapshots.csv",
            "strength": args.data_dir / "strength.csv",
            "overrides": args.data_dir / "overrides.json",
            "windows": args.data_dir / "windows.json",
        }
        for key, default in defaults.items():
            if paths[key] is None and (key in ("snapshots", "strength") or default.exists()):
                paths[key] = default
    if paths["snapshots"] is None or paths["strength"] is None:
        raise ConfigError("need --data-dir or both --snapshots and --strength")
    return paths


def _load(args):
    paths = _resolve_paths(args)
    return load_dataset(
        paths["snapshots"], paths["strength"], paths["overrides"], paths["windows"]
    )


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_ingest(args) -> int:
    ds, windows = _load(args)
    validation = validate_dataset(ds)
    summary = {
        "courts": len(ds.courts),
        "observations": sum(len(s) for s in ds.series.values()),
        "overrides": sorted(ds.overrides),
        "windows": {cid: spec.describe() for cid, spec in windows.items()},
        "findings": validation.counts(),
    }
    _print_json(summary)
    if args.findings_out:
        Path(args.findings_out).write_text(validation.to_text(), encoding="utf-8")
    return 0


def cmd_fit(args) -> int:
    ds, windows = _load(args)
    out = []
    for cid in ds.court_ids:
        if cid not in ds.series and cid not in ds.overrides:
            continue
        window = windows.get(cid, WindowSpec.full())
        trend = court_trend(ds, cid, window, args.p0_mode)
        out.append(
            {
                "court_id": cid,
                "slope_per_day": trend.daily_rate,
                "p0": trend.p0,
                "n": trend.n,
                "window": window.describe(),
            }
        )
    _print_json(out)
    return 0


def _scenario_for_court(ds, windows, args):
    window = windows.get(args.court, WindowSpec.full())
    court, trend, d_daily = court_rates(ds, args.court, window)
    if args.floor is not None:
        d_daily = apply_disposal_floor(d_daily, args.floor)
    if args.target == "sanctioned":
        target = court.sanctioned_strength
    else:
        target = float(args.target)
    scenario = Scenario(
        p0=trend.p0,
        r0=annualize(trend.daily_rate),
        d=annualize(d_daily),
        schedule=build_ramp(court.working_strength, target, args.ramp_years),
    )
    return court, trend, d_daily, scenario


def cmd_project(args) -> int:
    ds, windows = _load(args)
    court, trend, d_daily, scenario = _scenario_for_court(ds, windows, args)
    traj = project(scenario)
    cleared = traj.final.pending <= 0
    _print_json(
        {
            "court_id": court.court_id,
            "inputs": {
                "p0": scenario.p0,
                "rate_daily": trend.daily_rate,
                "d_daily": d_daily,
                "ramp_years": args.ramp_years,
                "target_strength": scenario.schedule.target,
            },
            "trajectory": [
                {"t": p.t, "p": p.pending, "r": p.rate, "w": p.strength}
                for p in traj.points
            ],
            "verdict": "clears_in" if cleared else "never_clears",
            "years_to_clear": traj.final.t if cleared else None,
            "final_rate": final_rate(scenario),
        }
    )
    return 0


def cmd_solve_judges(args) -> int:
    ds, windows = _load(args)
    rows = []
    for cid in ds.court_ids:
        court, trend, d_daily = court_rates(ds, cid, windows.get(cid, WindowSpec.full()))
        result = required_judges(
            SolverRequest(
                p0=trend.p0,
                r0=annualize(trend.daily_rate),
                d=annualize(d_daily),
                w0=court.working_strength,
                sanctioned_floor=court.sanctioned_strength,
                target_years=args.target_years,
            )
        )
        rows.append(
            {
                "court": cid,
                "required": result.required_judges,
                "sanctioned": court.sanctioned_strength,
                "working": court.working_strength,
                "binding": result.binding.value,
            }
        )
    _print_json(rows)
    return 0


def cmd_zero_rate(args) -> int:
    ds, windows = _load(args)
    rows = []
    for cid in ds.court_ids:
        court, trend, d_daily = court_rates(ds, cid, windows.get(cid, WindowSpec.full()))
        delta = judges_to_zero_rate(annualize(trend.daily_rate), annualize(d_daily))
        classification = classify_sufficiency(
            delta, court.sanctioned_strength, court.working_strength
        )
        rows.append(
            {
                "court": cid,
                "additional_judges": delta,
                "vacancy": court.sanctioned_strength - court.working_strength,
                "classification": classification.value,
            }
        )
    _print_json(rows)
    return 0


def cmd_report(args) -> int:
    paths = _resolve_paths(args)
    config = PipelineConfig(
        snapshots=paths["snapshots"],
        strength=paths["strength"],
        overrides=paths["overrides"],
        windows=paths["windows"],
        p0_mode=args.p0_mode,
    )
    bundle = run_pipeline(config)
    if not bundle.rows:
        print("warning: empty dataset, nothing to report", file=sys.stderr)
    formats = [f.strip() for f in args.format.split(",") if f.strip()]
    paths_written = emit(bundle, args.out, formats)
    _print_json({"written": [str(p) for p in paths_written]})
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    paths = _resolve_paths(args)
    app = create_app(paths=paths)
    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pendency",
        description="Court backlog forecasting and judge-staffing policy engine",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="parse inputs and report data-quality findings")
    _add_data_args(p)
    p.add_argument("--findings-out", type=Path, help="write full findings CSV here")
    p.set_defaults(func=cmd_ingest)

    p = sub.add_parser("fit", help="fit per-court pendency trends")
    _add_data_args(p)
    p.add_argument("--p0", "--p0-mode", dest="p0_mode", choices=["observed", "fitted"], default="observed")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("project", help="project one court's backlog under a hiring ramp")
    _add_data_args(p)
    p.add_argument("--court", required=True)
    p.add_argument("--ramp-years", type=int, required=True)
    p.add_argument("--target", default="sanctioned", help="'sanctioned' or a judge count")
    p.add_argument("--floor", type=float, help="minimum disposal rate per judge per day")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("solve-judges", help="judges needed per court to clear by a deadline")
    _add_data_args(p)
    p.add_argument("--target-years", type=int, required=True)
    p.set_defaults(func=cmd_solve_judges)

    p = sub.add_parser("zero-rate", help="extra judges per court to stop backlog growth")
    _add_data_args(p)
    p.set_defaults(func=cmd_zero_rate)

    p = sub.add_parser("report", help="run the full pipeline and write artifacts")
    _add_data_args(p)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument(
        "--format",
        default="json",
        help=f"comma-separated list from {', '.join(FORMATS)}",
    )
    p.add_argument("--p0", "--p0-mode", dest="p0_mode", choices=["observed", "fitted"], default="observed")
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("serve", help="serve the what-if scenario JSON API")
    _add_data_args(p)
    p.add_argument("--port", type=int, default=8000)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ANALYSIS_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PendencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
