"""End-to-end pipeline: ingest -> fit -> project/solve -> report artifacts.

Reports are fully deterministic: identical input files produce byte-identical
output files. Aggregates are always recomputed from the rows, never stored.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Mapping, Sequence

from .domain import (
    DAYS_PER_YEAR,
    CourtRecord,
    RatesBundle,
    annualize,
    disposal_rate_per_judge_day,
    load_ratio,
)
from .errors import ConfigError, InsufficientData, PendencyError
from .ingest import Dataset, WindowSpec, load_dataset, select_window
from .projection import Scenario, build_ramp, years_to_clear
from .solver import SolverRequest, judges_to_zero_rate, required_judges
from .trend import PendencyTrend, court_trend, day_index

FORMATS = ("csv", "json", "markdown-table", "plot-points")


@dataclass(frozen=True)
class PipelineConfig:
    snapshots: Path
    strength: Path
    overrides: Path | None = None
    windows: Path | None = None
    p0_mode: str = "observed"
    days_per_year: float = DAYS_PER_YEAR
    ramp_years: tuple[int, int] = (10, 20)
    solve_years: tuple[int, int] = (5, 15)
    horizon_cap: int = 10_000


@dataclass(frozen=True)
class CourtReportRow:
    court_id: str
    name: str
    sanctioned: float
    working: float
    p0: float
    rate_daily: float
    d_daily: float
    load_ratio: float
    years_10y_ramp: int | None
    years_20y_ramp: int | None
    judges_5y: int
    judges_5y_binding: str
    judges_15y: int
    judges_15y_binding: str
    zero_rate_delta: int
    zero_rate_within_vacancy: bool


@dataclass(frozen=True)
class CourtPlot:
    """Scatter points plus fitted-line endpoints for one court's chart."""

    points: tuple[tuple[str, int], ...]  # (iso date, pending)
    fit_endpoints: tuple[tuple[str, float], tuple[str, float]]


@dataclass(frozen=True)
class ReportBundle:
    rows: tuple[CourtReportRow, ...]
    plots: Mapping[str, CourtPlot] = field(default_factory=dict)

    @property
    def aggregates(self) -> dict:
        """Recomputed on access; never trusted from storage."""
        y10 = [r.years_10y_ramp for r in self.rows if r.years_10y_ramp is not None]
        y20 = [r.years_20y_ramp for r in self.rows if r.years_20y_ramp is not None]
        return {
            "mean_years_10y_ramp": sum(y10) / len(y10) if y10 else None,
            "mean_years_20y_ramp": sum(y20) / len(y20) if y20 else None,
            "never_clears_count": sum(1 for r in self.rows if r.years_10y_ramp is None),
            "totals": {
                "judges_5y": sum(r.judges_5y for r in self.rows),
                "judges_15y": sum(r.judges_15y for r in self.rows),
                "sanctioned": sum(r.sanctioned for r in self.rows),
                "working": sum(r.working for r in self.rows),
            },
        }

    def to_dict(self) -> dict:
        return {
            "rows": [
                {f.name: getattr(r, f.name) for f in fields(CourtReportRow)}
                for r in self.rows
            ],
            "plots": {
                cid: {
                    "points": [list(p) for p in plot.points],
                    "fit_endpoints": [list(p) for p in plot.fit_endpoints],
                }
                for cid, plot in sorted(self.plots.items())
            },
            "aggregates": self.aggregates,
        }

    @classmethod
    def from_dict(cls, payload: Mapping) -> "ReportBundle":
        rows = tuple(CourtReportRow(**row) for row in payload["rows"])
        plots = {
            cid: CourtPlot(
                points=tuple((p[0], int(p[1])) for p in plot["points"]),
                fit_endpoints=tuple((p[0], float(p[1])) for p in plot["fit_endpoints"]),
            )
            for cid, plot in payload.get("plots", {}).items()
        }
        return cls(rows=rows, plots=plots)


def court_rates(
    ds: Dataset,
    court_id: str,
    window: WindowSpec,
    p0_mode: str = "observed",
) -> tuple[CourtRecord, PendencyTrend, float]:
    """Trend plus mean daily per-judge disposal for one court.

    Disposal is averaged over the windowed observations that carry a monthly
    figure; with no usable window (possible only for overridden courts) the
    whole series is used, and with no disposal data at all the rate is 0.
    The three numbers are validated together as a RatesBundle, so impossible
    combinations (negative p0, negative disposal) fail here with context.
    """
    court = ds.court(court_id)
    if court.sanctioned_strength is None or court.working_strength is None:
        raise ConfigError("no strength data")
    trend = court_trend(ds, court_id, window, p0_mode)
    series = ds.series_for(court_id)
    try:
        observations = select_window(series, window).observations
    except InsufficientData:
        if court_id not in ds.overrides:
            raise
        observations = series.observations
    rates = [
        disposal_rate_per_judge_day(o.disposed_monthly, court.working_strength)
        for o in observations
        if o.disposed_monthly is not None
    ]
    d_daily = sum(rates) / len(rates) if rates else 0.0
    bundle = RatesBundle(
        daily_pendency_rate=trend.daily_rate,
        daily_disposal_per_judge=d_daily,
        p0=trend.p0,
    )
    return court, trend, bundle.daily_disposal_per_judge


def _court_plot(ds: Dataset, court_id: str, window: WindowSpec, trend: PendencyTrend) -> CourtPlot | None:
    try:
        series = select_window(ds.series_for(court_id), window)
    except InsufficientData:
        return None
    pts = tuple((o.date.isoformat(), o.pending_total) for o in series.observations)
    first, last = series.observations[0], series.observations[-1]
    if trend.fit is not None:
        y0 = trend.fit.value_at(day_index(first.date))
        y1 = trend.fit.value_at(day_index(last.date))
    else:
        # fully overridden court: line through (last date, p0) at the override slope
        span = day_index(last.date) - day_index(first.date)
        y1 = trend.p0
        y0 = trend.p0 - trend.daily_rate * span
    return CourtPlot(
        points=pts,
        fit_endpoints=(
            (first.date.isoformat(), y0),
            (last.date.isoformat(), y1),
        ),
    )


def run_pipeline(config: PipelineConfig) -> ReportBundle:
    ds, windows = load_dataset(
        config.snapshots, config.strength, config.overrides, config.windows
    )
    rows: list[CourtReportRow] = []
    plots: dict[str, CourtPlot] = {}
    for cid in ds.court_ids:
        try:
            row, plot = _court_row(ds, cid, windows, config)
        except PendencyError as exc:
            raise type(exc)(f"court {cid}: {exc}") from exc
        rows.append(row)
        if plot is not None:
            plots[cid] = plot
    return ReportBundle(rows=tuple(rows), plots=plots)


def _court_row(
    ds: Dataset,
    cid: str,
    windows: Mapping[str, WindowSpec],
    config: PipelineConfig,
) -> tuple[CourtReportRow, CourtPlot | None]:
    window = windows.get(cid, WindowSpec.full())
    court, trend, d_daily = court_rates(ds, cid, window, config.p0_mode)

    r0 = annualize(trend.daily_rate, config.days_per_year)
    d_year = annualize(d_daily, config.days_per_year)
    w0 = court.working_strength
    sanctioned = court.sanctioned_strength

    def clear_years(ramp: int) -> int | None:
        scenario = Scenario(
            trend.p0, r0, d_year, build_ramp(w0, sanctioned, ramp), config.horizon_cap
        )
        return years_to_clear(scenario).years

    def solve(target_years: int):
        return required_judges(
            SolverRequest(
                p0=trend.p0,
                r0=r0,
                d=d_year,
                w0=w0,
                sanctioned_floor=sanctioned,
                target_years=target_years,
            )
        )

    solved = {t: solve(t) for t in config.solve_years}
    delta = judges_to_zero_rate(r0, d_year)
    row = CourtReportRow(
        court_id=cid,
        name=court.name,
        sanctioned=sanctioned,
        working=w0,
        p0=trend.p0,
        rate_daily=trend.daily_rate,
        d_daily=d_daily,
        load_ratio=load_ratio(trend.p0, w0),
        years_10y_ramp=clear_years(config.ramp_years[0]),
        years_20y_ramp=clear_years(config.ramp_years[1]),
        judges_5y=solved[config.solve_years[0]].required_judges,
        judges_5y_binding=solved[config.solve_years[0]].binding.value,
        judges_15y=solved[config.solve_years[1]].required_judges,
        judges_15y_binding=solved[config.solve_years[1]].binding.value,
        zero_rate_delta=delta,
        zero_rate_within_vacancy=delta <= sanctioned - w0,
    )
    return row, _court_plot(ds, cid, window, trend)


def _fmt(value) -> str:
    """Stable human-readable number formatting for tables."""
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, float):
        return str(int(value)) if value.is_integer() else f"{value:.2f}"
    return str(value)


def _years_table(bundle: ReportBundle) -> str:
    def key(r: CourtReportRow):
        # clearing courts by descending years; never-clears rows last
        return (r.years_10y_ramp is None, -(r.years_10y_ramp or 0), r.name)

    lines = [
        "| # | High Court | 10-Year Ramp | 20-Year Ramp |",
        "|---|---|---|---|",
    ]
    for i, r in enumerate(sorted(bundle.rows, key=key), start=1):
        lines.append(
            f"| {i} | {r.name} | {_fmt(r.years_10y_ramp)} | {_fmt(r.years_20y_ramp)} |"
        )
    agg = bundle.aggregates
    lines.append("")
    lines.append(
        "Mean years over clearing courts: "
        f"{_fmt(agg['mean_years_10y_ramp'])} (10-year ramp), "
        f"{_fmt(agg['mean_years_20y_ramp'])} (20-year ramp); "
        f"never clears: {agg['never_clears_count']} court(s) excluded."
    )
    return "\n".join(lines) + "\n"


def _judges_table(bundle: ReportBundle) -> str:
    lines = [
        "| # | High Court | 5 Years | 15 Years | Sanctioned | Working |",
        "|---|---|---|---|---|---|",
    ]
    ordered = sorted(bundle.rows, key=lambda r: (-r.judges_5y, r.name))
    for i, r in enumerate(ordered, start=1):
        lines.append(
            f"| {i} | {r.name} | {r.judges_5y} | {r.judges_15y} "
            f"| {_fmt(r.sanctioned)} | {_fmt(r.working)} |"
        )
    totals = bundle.aggregates["totals"]
    lines.append(
        f"| | Total | {totals['judges_5y']} | {totals['judges_15y']} "
        f"| {_fmt(totals['sanctioned'])} | {_fmt(totals['working'])} |"
    )
    return "\n".join(lines) + "\n"


def _rows_csv(bundle: ReportBundle) -> str:
    buf = io.StringIO()
    names = [f.name for f in fields(CourtReportRow)]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(names)
    for r in bundle.rows:
        writer.writerow(
            ["" if (v := getattr(r, n)) is None else v for n in names]
        )
    return buf.getvalue()


def emit(bundle: ReportBundle, out_dir: Path | str, formats: Sequence[str]) -> list[Path]:
    """Write the bundle in the requested formats; returns the written paths."""
    out_dir = Path(out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise ConfigError(f"cannot create output directory {out_dir}: {exc}") from exc
    written: list[Path] = []

    def write(path: Path, text: str) -> None:
        try:
            path.write_text(text, encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot write {path}: {exc}") from exc
        written.append(path)

    for fmt in formats:
        if fmt == "json":
            write(
                out_dir / "report.json",
                json.dumps(bundle.to_dict(), indent=2, sort_keys=True) + "\n",
            )
        elif fmt == "csv":
            write(out_dir / "report.csv", _rows_csv(bundle))
        elif fmt == "markdown-table":
            write(out_dir / "years_to_clear.md", _years_table(bundle))
            write(out_dir / "judges_required.md", _judges_table(bundle))
        elif fmt == "plot-points":
            plot_dir = out_dir / "plots"
            plot_dir.mkdir(parents=True, exist_ok=True)
            for cid in sorted(bundle.plots):
                plot = bundle.plots[cid]
                points = "date,pending\n" + "".join(
                    f"{d},{y}\n" for d, y in plot.points
                )
                write(plot_dir / f"{cid}.points.csv", points)
                fit = "date,fitted\n" + "".join(
                    f"{d},{y!r}\n" for d, y in plot.fit_endpoints
                )
                write(plot_dir / f"{cid}.fit.csv", fit)
        else:
            raise ConfigError(f"unknown report format {fmt!r} (want one of {FORMATS})")
    return written
