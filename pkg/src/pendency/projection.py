"""Yearly backlog projection under a judge-hiring ramp.

The model is a discrete recurrence over whole years:

    p_t = p_{t-1} + r_{t-1}            (backlog grows by last year's rate)
    r_t = r_{t-1} - d * (w_t - w_{t-1})  (each judge added removes d cases/yr)

with p the pending-case count, r the yearly growth rate, w the working
strength, and d the yearly disposal rate per judge. Strength follows a
linear ramp from the current bench to a target over a fixed number of years.
Once the ramp is done the rate is constant, so "never clears" is decided by
its sign instead of simulating to the horizon.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, HorizonExceeded

DEFAULT_HORIZON_CAP = 10_000


@dataclass(frozen=True)
class StaffingSchedule:
    """Linear bench ramp: start -> target over ramp_years, then flat."""

    start: float
    target: float
    ramp_years: int

    def strength_at(self, t: int) -> float:
        if t < 0:
            raise DomainError(f"year must be >= 0, got {t}")
        if t == 0:
            return self.start
        if self.ramp_years <= 0 or t >= self.ramp_years:
            return self.target
        return self.start + (self.target - self.start) * t / self.ramp_years

    @property
    def settle_year(self) -> int:
        """First year from which the strength no longer changes."""
        if self.target == self.start:
            return 0
        return max(self.ramp_years, 1)


def build_ramp(w0: float, target: float, ramp_years: int) -> StaffingSchedule:
    """Schedule that reaches ``target`` judges after ``ramp_years`` years.

    ramp_years = 0 means the full jump happens at year 1.
    """
    if w0 < 0 or target < 0:
        raise DomainError(f"strengths must be >= 0, got start={w0}, target={target}")
    if ramp_years < 0:
        raise DomainError(f"ramp_years must be >= 0, got {ramp_years}")
    return StaffingSchedule(start=float(w0), target=float(target), ramp_years=int(ramp_years))


@dataclass(frozen=True)
class Scenario:
    """Inputs for one projection; rates are yearly, d is per judge per year."""

    p0: float
    r0: float
    d: float
    schedule: StaffingSchedule
    horizon_cap: int = DEFAULT_HORIZON_CAP

    def __post_init__(self) -> None:
        if self.p0 < 0:
            raise DomainError(f"p0 must be >= 0, got {self.p0}")
        if self.d < 0:
            raise DomainError(f"disposal rate must be >= 0, got {self.d}")
        if self.horizon_cap < 1:
            raise DomainError(f"horizon_cap must be >= 1, got {self.horizon_cap}")
        for v in (self.p0, self.r0, self.d):
            if not math.isfinite(v):
                raise DomainError("scenario inputs must be finite")


@dataclass(frozen=True)
class TrajectoryPoint:
    t: int
    pending: float
    rate: float
    strength: float


@dataclass(frozen=True)
class Trajectory:
    points: tuple[TrajectoryPoint, ...]

    @property
    def final(self) -> TrajectoryPoint:
        return self.points[-1]

    def pending_at(self, t: int) -> float:
        return self.points[t].pending


@dataclass(frozen=True)
class ClearanceOutcome:
    """years is the first whole year with p <= 0, or None for never."""

    years: int | None
    final_rate: float

    @property
    def never_clears(self) -> bool:
        return self.years is None


def _iterate(scenario: Scenario, *, stop_on_verdict: bool, years: int | None = None):
    sched = scenario.schedule
    points = [TrajectoryPoint(0, scenario.p0, scenario.r0, sched.strength_at(0))]
    if stop_on_verdict and scenario.p0 <= 0:
        return points
    if not stop_on_verdict and (years or 0) <= 0:
        return points
    settle = sched.settle_year
    # The never-clears verdict keys on the analytic post-ramp rate, not the
    # simulated one: step-wise float drift can leave the simulated rate a few
    # ulps on the wrong side of zero on exact-boundary scenarios.
    post_ramp_rate = final_rate(scenario)
    p, r, w_prev = scenario.p0, scenario.r0, sched.strength_at(0)
    t = 0
    while True:
        t += 1
        w_t = sched.strength_at(t)
        p = p + r
        r = r - scenario.d * (w_t - w_prev)
        w_prev = w_t
        points.append(TrajectoryPoint(t, p, r, w_t))
        if stop_on_verdict:
            if p <= 0:
                return points
            if t >= settle and post_ramp_rate >= 0:
                return points
            if t >= scenario.horizon_cap:
                raise HorizonExceeded(
                    f"no verdict after {scenario.horizon_cap} years "
                    f"(pending {p:.0f}, rate {r:.0g})"
                )
        elif t >= (years or 0):
            return points


def project(scenario: Scenario) -> Trajectory:
    """Run the recurrence until the backlog clears or provably never will.

    The trajectory ends either at the first year with p <= 0, or at the
    first post-ramp year if the analytic post-ramp rate is >= 0 while
    pending is still positive (from then on the rate is constant, so the
    verdict is already decided). The horizon cap is a safety net for
    extreme inputs.
    """
    return Trajectory(tuple(_iterate(scenario, stop_on_verdict=True)))


def run_years(scenario: Scenario, years: int) -> Trajectory:
    """Run the recurrence for exactly ``years`` steps, no stopping rules."""
    if years < 0:
        raise DomainError(f"years must be >= 0, got {years}")
    return Trajectory(tuple(_iterate(scenario, stop_on_verdict=False, years=years)))


def final_rate(scenario: Scenario) -> float:
    """Yearly rate once the ramp has completed: r0 - d * (target - start)."""
    sched = scenario.schedule
    return scenario.r0 - scenario.d * (sched.target - sched.start)


def years_to_clear(scenario: Scenario) -> ClearanceOutcome:
    traj = project(scenario)
    last = traj.final
    years = last.t if last.pending <= 0 else None
    return ClearanceOutcome(years=years, final_rate=final_rate(scenario))


def apply_disposal_floor(d: float, floor: float) -> float:
    """Raise a per-judge disposal rate to a policy floor; never lower it."""
    if floor < 0:
        raise DomainError(f"floor must be >= 0, got {floor}")
    return max(d, floor)
