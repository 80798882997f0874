"""Core domain types and the elementary per-court workload metrics.

Everything here is an immutable value object or a pure function; all of it is
safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import date
from enum import Enum

from .errors import DomainError

#: Days in a nominal year: twelve 30-day months. Matches the monthly/30
#: convention used to turn monthly disposal totals into daily rates; using a
#: 365-day year here would silently disagree with that pipeline.
DAYS_PER_YEAR = 360.0


class DataSource(str, Enum):
    NJDG = "njdg"
    EXTERNAL_OVERRIDE = "external_override"


@dataclass(frozen=True)
class CourtRecord:
    """Identity and bench strength for one high court.

    Strengths are optional so that a record can exist before strength data is
    merged in. Working strength is a long-run average, hence real-valued.
    Over-strength (working > sanctioned) is tolerated with a warning: the
    portal has been known to report more judges than the approved strength.
    """

    court_id: str
    name: str
    sanctioned_strength: float | None = None
    working_strength: float | None = None
    data_source: DataSource = DataSource.NJDG

    def __post_init__(self) -> None:
        if not self.court_id:
            raise DomainError("court_id must be non-empty")
        if self.sanctioned_strength is not None and self.sanctioned_strength < 1:
            raise DomainError(
                f"{self.court_id}: sanctioned strength must be >= 1, "
                f"got {self.sanctioned_strength}"
            )

    def strength_warnings(self) -> list[str]:
        """Suspicious but tolerated strength values."""
        out: list[str] = []
        w, s = self.working_strength, self.sanctioned_strength
        if w is not None and w <= 0:
            out.append(f"{self.court_id}: working strength {w} is not positive")
        if w is not None and s is not None and w > s:
            out.append(
                f"{self.court_id}: working strength {w} exceeds sanctioned {s}"
            )
        return out


@dataclass(frozen=True)
class SnapshotObservation:
    """Counts published by the portal on one date.

    Counts are not validated on construction; data-quality checks live in
    :func:`pendency.ingest.validate_snapshot` so that questionable rows can be
    represented, reported on, and still analyzed.
    """

    date: date
    pending_civil: int
    pending_criminal: int
    pending_writ: int
    pending_total: int
    filed_monthly: int | None = None
    disposed_monthly: int | None = None


@dataclass(frozen=True)
class SnapshotSeries:
    """Date-ordered pendency observations for one court. May be empty."""

    court_id: str
    observations: tuple[SnapshotObservation, ...]

    def __post_init__(self) -> None:
        dates = [o.date for o in self.observations]
        for a, b in zip(dates, dates[1:]):
            if a >= b:
                raise DomainError(
                    f"{self.court_id}: observation dates must strictly increase "
                    f"({a} then {b})"
                )

    def __len__(self) -> int:
        return len(self.observations)

    @property
    def last(self) -> SnapshotObservation:
        if not self.observations:
            raise DomainError(f"{self.court_id}: series is empty")
        return self.observations[-1]


@dataclass(frozen=True)
class RatesBundle:
    """Per-court inputs for projection: trend, disposal capacity, start level.

    The pendency rate may be negative (some courts are draining their
    backlog); disposal per judge and the starting pendency may not.
    """

    daily_pendency_rate: float
    daily_disposal_per_judge: float
    p0: float

    def __post_init__(self) -> None:
        if self.p0 < 0:
            raise DomainError(f"p0 must be >= 0, got {self.p0}")
        if self.daily_disposal_per_judge < 0:
            raise DomainError(
                f"disposal per judge must be >= 0, got {self.daily_disposal_per_judge}"
            )


def load_ratio(pending: float, working: float) -> float:
    """Pending cases per working judge, unrounded."""
    if working <= 0:
        raise DomainError("no working judges")
    return pending / working


def disposal_rate_per_judge_day(monthly_disposed: float, working: float) -> float:
    """Daily disposals per judge from a monthly total (30-day months)."""
    if working <= 0:
        raise DomainError("no working judges")
    if monthly_disposed < 0:
        raise DomainError(f"monthly disposals must be >= 0, got {monthly_disposed}")
    return monthly_disposed / 30.0 / working


def annualize(daily_rate: float, days_per_year: float = DAYS_PER_YEAR) -> float:
    """Scale a per-day rate to a per-year rate."""
    return daily_rate * days_per_year


def vacancy(sanctioned: float, working: float) -> tuple[float, float]:
    """(count, fraction) of unfilled seats; negative when over strength."""
    if sanctioned <= 0:
        raise DomainError(f"sanctioned strength must be > 0, got {sanctioned}")
    count = sanctioned - working
    return count, count / sanctioned
