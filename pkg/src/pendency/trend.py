"""Straight-line pendency trend fitting.

The daily growth rate of a court's backlog is the slope of the least-squares
line through its (day, pending_total) points. Deliberately plain OLS: noisy
portal updates are handled by choosing an analysis window, not by a robust
estimator.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from typing import Sequence

from .domain import SnapshotSeries
from .errors import DegenerateFit, DomainError
from .ingest import Dataset, OverrideEntry, WindowSpec, select_window

EPOCH = date(1970, 1, 1)


def day_index(d: date) -> int:
    """Integer day number since 1970-01-01 (calendar days, UTC dates)."""
    return (d - EPOCH).days


@dataclass(frozen=True)
class RegressionFit:
    """Closed-form OLS line y = intercept + slope * x with diagnostics."""

    slope: float
    intercept: float
    n: int
    residual_sum: float
    sse: float

    def value_at(self, x: float) -> float:
        return self.intercept + self.slope * x


def ols_fit(points: Sequence[tuple[float, float]]) -> RegressionFit:
    """Least-squares line through the points.

    Uses the centered closed form (slope = Sxy/Sxx) for numeric stability;
    day numbers are large, so raw power sums would lose precision.
    """
    n = len(points)
    if n < 2 or len({x for x, _ in points}) < 2:
        raise DegenerateFit(
            f"need >= 2 points with >= 2 distinct x values, got {n} point(s)"
        )
    x_mean = sum(x for x, _ in points) / n
    y_mean = sum(y for _, y in points) / n
    sxx = sum((x - x_mean) ** 2 for x, _ in points)
    sxy = sum((x - x_mean) * (y - y_mean) for x, y in points)
    slope = sxy / sxx
    intercept = y_mean - slope * x_mean
    residuals = [y - (intercept + slope * x) for x, y in points]
    return RegressionFit(
        slope=slope,
        intercept=intercept,
        n=n,
        residual_sum=sum(residuals),
        sse=sum(r * r for r in residuals),
    )


@dataclass(frozen=True)
class PendencyTrend:
    """A court's fitted daily rate and projection-start pendency.

    ``fit`` is None when both numbers came from a manual override rather
    than a regression.
    """

    court_id: str
    daily_rate: float
    p0: float
    n: int
    window: WindowSpec
    fit: RegressionFit | None = None


def pendency_rate(
    series: SnapshotSeries, spec: WindowSpec, p0_mode: str = "observed"
) -> PendencyTrend:
    """Fit the windowed series; p0 defaults to the last observed pendency.

    ``p0_mode="fitted"`` takes the regression line's value at the last
    observation instead (useful when the final update is itself suspect).
    """
    if p0_mode not in ("observed", "fitted"):
        raise DomainError(f"p0_mode must be 'observed' or 'fitted', got {p0_mode!r}")
    windowed = select_window(series, spec)
    points = [(float(day_index(o.date)), float(o.pending_total)) for o in windowed.observations]
    fit = ols_fit(points)
    last_x = points[-1][0]
    p0 = fit.value_at(last_x) if p0_mode == "fitted" else float(windowed.last.pending_total)
    return PendencyTrend(
        court_id=series.court_id,
        daily_rate=fit.slope,
        p0=p0,
        n=fit.n,
        window=spec,
        fit=fit,
    )


def court_trend(
    ds: Dataset,
    court_id: str,
    spec: WindowSpec,
    p0_mode: str = "observed",
) -> PendencyTrend:
    """Per-court trend with override precedence.

    An override replaces whichever of (rate, p0) it sets; the series is only
    fitted for values the override leaves open. A court fully covered by an
    override needs no usable series at all.
    """
    override: OverrideEntry | None = ds.overrides.get(court_id)
    needs_fit = override is None or (
        override.daily_rate_override is None or override.p0_override is None
    )
    fitted: PendencyTrend | None = None
    if needs_fit:
        fitted = pendency_rate(ds.series_for(court_id), spec, p0_mode)
    if override is None:
        assert fitted is not None
        return fitted
    rate = (
        override.daily_rate_override
        if override.daily_rate_override is not None
        else fitted.daily_rate
    )
    p0 = override.p0_override if override.p0_override is not None else fitted.p0
    return PendencyTrend(
        court_id=court_id,
        daily_rate=float(rate),
        p0=float(p0),
        n=fitted.n if fitted else 0,
        window=spec,
        fit=fitted.fit if fitted else None,
    )
